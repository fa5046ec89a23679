#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dielqed::verify {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  Eigen::Index dim = 20;          // Fock truncation for operator checks
  int grid = 0;                   // mode quadrature points per axis, 0 = smallest exact
  double hbar = 1.0;
  double c = 1.0;
  double tolerance_override = 0;  // > 0 replaces every check's tolerance
};

// Runs the full invariant suite over every module with fixed seeds, so the
// residuals are identical from run to run. Invalid options propagate as
// std::invalid_argument; a failed check only flips its pass flag.
std::vector<CheckResult> run_all_checks(const VerifyOptions& options = {});

}  // namespace dielqed::verify
