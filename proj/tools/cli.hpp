#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wilsonlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
  // Value of WILSONLAB_MAX_MODULUS, if set.
  std::optional<std::string> max_modulus;
};

Environment environment_from_process();

/// Runs one invocation. args excludes the program name. Machine-readable
/// output goes to out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace wilsonlab::cli
