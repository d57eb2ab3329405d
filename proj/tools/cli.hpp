#ifndef LRBT_TOOLS_CLI_HPP
#define LRBT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lrbt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 2 for bad input, 3 for numerical failure; on a
/// nonzero return no output file has been written.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrbt::cli

#endif  // LRBT_TOOLS_CLI_HPP
