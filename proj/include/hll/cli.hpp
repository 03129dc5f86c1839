#ifndef HLL_CLI_HPP
#define HLL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hll {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;  // I/O or numerical failure

// Entry point behind the `hll` executable; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hll

#endif  // HLL_CLI_HPP
