#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reconlab::cli {

/// Runs one `reconlab` invocation. `args` excludes the program name. Results go
/// to `out` and diagnostics to `err`. Returns 0 on success, 1 on usage or input
/// errors and 2 on internal invariant failures (including failed verify suites).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reconlab::cli
