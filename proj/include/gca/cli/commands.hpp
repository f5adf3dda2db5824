#ifndef GCA_CLI_COMMANDS_HPP
#define GCA_CLI_COMMANDS_HPP

#include <ostream>

namespace gca::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // parse errors, bad arguments
inline constexpr int kExitResource = 2;   // a cap was exceeded
inline constexpr int kExitInternal = 3;   // internal consistency failure
inline constexpr int kExitCheckFailed = 4;  // a verification ran and reported a failure

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gca::cli

#endif
