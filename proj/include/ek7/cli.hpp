#ifndef EK7_CLI_HPP
#define EK7_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ek7 {

/// Exit codes: 0 success, 1 usage error, 2 verification failure,
/// 3 internal consistency error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ek7

#endif
