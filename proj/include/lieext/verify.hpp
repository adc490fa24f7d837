#ifndef LIEEXT_VERIFY_HPP
#define LIEEXT_VERIFY_HPP

#include <string>
#include <vector>

namespace lieext {

/// One named check bound to a specific claim. detail carries the witness or
/// diagnostic text; seconds is wall time and is excluded from machine
/// output so reports stay byte-identical across runs.
struct CheckResult {
  std::string name;
  std::string claim;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationSuite {
  std::string selector;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  /// Test fixture: flip one structure constant in every built algebra so
  /// the suite must fail (mutation test).
  bool mutate_fixture = false;
  /// Random Jacobi triples for the algebra too large to sweep exhaustively.
  unsigned long jacobi_samples = 100000;
};

/// Valid selector strings, in canonical order.
const std::vector<std::string>& verify_selectors();

/// Runs the checks mapped to the selector. Throws std::invalid_argument on
/// an unknown selector.
VerificationSuite run_verification(const std::string& selector,
                                   const VerifyOptions& opts = {});

/// Deterministic machine serialization of a suite (no timing fields):
/// byte-identical across runs on identical inputs.
std::string suite_to_json(const VerificationSuite& suite);

}  // namespace lieext

#endif
