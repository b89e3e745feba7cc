#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinor::cli {

enum class Format { json, csv };

struct RunConfig {
  long max_prime = 541;
  std::vector<int> kappa_list{12};
  std::optional<int> series_length;
  std::string output_path;
  std::optional<Format> format;
  unsigned jobs = 1;

  int effective_series_length() const { return series_length.value_or(static_cast<int>(max_prime) + 1); }
  /// Empty when valid, otherwise the reason.
  std::string validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitConfig = 2;

/// Runs the command line (args excludes the program name). Reports go to
/// `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinor::cli
