#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linclon/error.hpp"
#include "linclon/ffield.hpp"
#include "linclon/modlattice.hpp"

namespace linclon::cli {

enum ExitCode : int {
  kSuccess = 0,
  kHypothesisViolated = 2,  // coprimality
  kMalformedInput = 3,
  kBudgetExceeded = 4,
  kInternalBreach = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

struct RunConfig {
  std::optional<ProductRing> K;
  std::optional<ProductRing> F;
  std::uint64_t budget = 100000;
  EnumerationStrategy strategy = EnumerationStrategy::JoinClosure;
  std::uint64_t seed = 0;
  /// Empty means standard output.
  std::string output;
};

/// Runs one subcommand. `args` excludes the program name. JSON goes to the
/// --out file or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linclon::cli
