#pragma once
#include <string>
#include <vector>

namespace polysem {

struct VerifyOptions {
  int workers = 0;              // 0 = hardware concurrency
  bool corrupt_gradient = false;  // fault injection: breaks the gradient check only
};

// One verification check: a quantitative claim, the measured value, the
// bound it must satisfy, and the outcome.
struct CheckResult {
  std::string id;
  std::string claim;
  double measured = 0.0;
  std::string bound;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Runs the full verification suite: collision scaling, the sparsification
// law, gradient checks for both models, moment identities, the closed-form
// gradient special case, kurtosis ordering, the affine-spacing invariant,
// collision resolution, and end-state solution quality.
VerifyReport run_verification(const VerifyOptions& options);

std::string verify_report_json(const VerifyReport& report);

}  // namespace polysem
