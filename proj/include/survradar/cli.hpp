#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace survradar {

/// Runs one command line. Returns 0 on success, 1 on a runtime failure or a
/// failed verification, 2 on a usage error. Results go to --out when given,
/// otherwise to `out`; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace survradar
