#pragma once

#include <cstdint>
#include <limits>

namespace survradar {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: output i is a keyed hash of i, so a stream is a
/// pure function of (key, position). Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) : key_(splitmix64(key)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return splitmix64(key_ ^ splitmix64(counter_++)); }

    std::uint64_t position() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Independent stream key for one Monte Carlo trial.
inline constexpr std::uint64_t trial_stream_key(std::uint64_t master_seed, std::uint64_t trial) {
    return splitmix64(master_seed * 0xD1B54A32D192ED03ULL + splitmix64(trial ^ 0x5851F42D4C957F2DULL));
}

}  // namespace survradar
