#pragma once

// Sweeps (N, theta) and measures whether F maps the fiber H(theta) into itself.

#include <string>
#include <vector>

#include "bakerlab/theta_space.hpp"

namespace bakerlab {

struct ScanRecord {
  int N = 1;
  Theta theta;
  int m = 0;
  double rx = 0.0;
  double ry = 0.0;
  double tol = 1e-8;
  bool invariant = false;  // max(rx, ry) < tol
};

struct ScanOptions {
  double tol = 1e-8;
  unsigned threads = 1;
  double amp_epsilon = 1e-15;
  double kernel_tol = 1e-14;
};

/// All rationals in [0, 1) with denominator <= max_denominator, ascending.
std::vector<Rational> rationals_up_to(int max_denominator);

/// Cartesian square of rationals_up_to(max_denominator).
std::vector<Theta> theta_grid(int max_denominator);

/// One record per (N, theta, m), ordered by N, then theta, then m. The output
/// does not depend on the thread count.
std::vector<ScanRecord> scan_theta(const std::vector<int>& Ns, const std::vector<Theta>& thetas,
                                   const ScanOptions& options = {});

/// |X F Phi_m - e^{4 pi i theta1} F Phi_m| / |F Phi_m|. Holds for every theta.
double doubling_check(const ModelParams& params, const Theta& theta, int m);

struct PairSummary {
  int N = 1;
  Theta theta;
  double max_rx = 0.0;
  double max_ry = 0.0;
  bool invariant = false;  // every m passes
};

/// Collapses records over m, preserving scan order.
std::vector<PairSummary> summarize(const std::vector<ScanRecord>& records);

struct Violation {
  PairSummary pair;
  std::string reason;
};

struct VerdictReport {
  bool pass = false;
  std::vector<PairSummary> invariant_pairs;
  std::vector<Violation> violations;
};

/// PASS iff the invariant pairs are exactly {(N, (0,0)) : N even} within the
/// scanned grid.
VerdictReport theorem_verdict(const std::vector<ScanRecord>& records);

}  // namespace bakerlab
