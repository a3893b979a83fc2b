#pragma once

#include <cstddef>
#include <functional>

namespace survradar {

/// Worker count from SURVRADAR_THREADS (0 or unset = hardware concurrency).
/// Throws ConfigError on a malformed value.
unsigned default_thread_count();

/// Calls body(i) for i in [0, count) on up to `threads` workers (0 = default).
/// Callers write results into per-index slots, so any reduction done afterwards
/// in index order is independent of scheduling. The first exception thrown by
/// a body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace survradar
