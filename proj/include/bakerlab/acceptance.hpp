#pragma once

// The end-to-end checks behind `bakerlab verify` and the acceptance test.

#include <functional>
#include <string>
#include <vector>

namespace bakerlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  unsigned long long seed = 20240601;
};

CriterionResult check_theorem_scan(const AcceptanceOptions& opt = {});
CriterionResult check_commutators(const AcceptanceOptions& opt = {});
CriterionResult check_doubling(const AcceptanceOptions& opt = {});
CriterionResult check_odd_residual(const AcceptanceOptions& opt = {});
CriterionResult check_orthonormality(const AcceptanceOptions& opt = {});
CriterionResult check_matrix_form(const AcceptanceOptions& opt = {});
CriterionResult check_classical_escape(const AcceptanceOptions& opt = {});
CriterionResult check_fourier_engine(const AcceptanceOptions& opt = {});

/// Criteria 1..8 in order. `progress` (optional) is called after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// "[PASS] 1 title (detail, 1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace bakerlab
