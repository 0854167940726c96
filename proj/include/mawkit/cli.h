#ifndef MAWKIT_CLI_H_
#define MAWKIT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mawkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `mawkit` tool. `args` excludes the program name.
// Subcommands: build, maw, prime, specific, oracle-check, bench.
int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace mawkit

#endif  // MAWKIT_CLI_H_
