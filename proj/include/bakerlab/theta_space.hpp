#pragma once

// Fibers H(theta) of the central elements X = U^N and Y = V^N: for each
// theta on the torus, the N-dimensional joint eigenspace
//
//     X psi = e^{2 pi i theta1} psi,   Y psi = e^{2 pi i theta2} psi,
//
// spanned by the delta-comb position basis Phi_m.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bakerlab/comb.hpp"

namespace bakerlab {

struct Theta {
  Rational theta1{0};
  Rational theta2{0};

  /// Reduces both components mod 1.
  static Theta make(const Rational& t1, const Rational& t2);
  /// Parses "p/q,p/q".
  static Theta parse(const std::string& text);

  std::string to_string() const;  // "p/q,p/q"

  friend bool operator==(const Theta&, const Theta&) = default;
  friend bool operator<(const Theta& a, const Theta& b) {
    if (a.theta1 != b.theta1) return a.theta1 < b.theta1;
    return a.theta2 < b.theta2;
  }
};

/// Phi_m = e^{2 pi i theta2 m / N} / sqrt(N) * sum_k e^{2 pi i theta2 k} |(theta1 + m)/N + k>_x.
CombState position_basis(const ModelParams& params, const Theta& theta, int m);

/// Momentum-rep comb e^{-2 pi i n theta1 / N} / sqrt(N) * sum_k e^{-2 pi i theta1 k} |(theta2 + n)/N + k>_p.
/// The 1/sqrt(N) makes it orthonormal alongside position_basis.
CombState momentum_basis(const ModelParams& params, const Theta& theta, int n);

struct FiberBasis {
  ModelParams params;
  Theta theta;
  std::vector<CombState> basis;     // Phi_0 .. Phi_{N-1}
  std::vector<CombState> momentum;  // momentum-rep basis, empty unless requested

  int dim() const { return static_cast<int>(basis.size()); }
};

FiberBasis build_fiber(const ModelParams& params, const Theta& theta, bool with_momentum = false);

/// G[m][n] = kernel_form(Phi_m, Phi_n).
Eigen::MatrixXcd gram_matrix(const FiberBasis& fb);

/// The part of a state lying in one fiber, with its coordinates in the
/// Phi_m^{(theta)} basis.
struct FiberComponent {
  Theta theta;
  CombState state;
  Eigen::VectorXcd coords;
};

/// Exact decomposition of a comb state into fiber components. Every comb with
/// rational geometry splits into finitely many spacing-1 combs, and a spacing-1
/// comb at offset x0 with step phase phi lies in the single fiber
/// (N x0 mod 1, phi). Momentum-rep input is transformed first.
std::vector<FiberComponent> fiber_decompose(const CombState& s);

/// The component of s in fiber `theta` (empty if none).
CombState fiber_component(const CombState& s, const Theta& theta);

/// sqrt of the sum over fibers of kernel_form(s_theta, s_theta).
double fiber_norm(const CombState& s);

struct Projection {
  Eigen::VectorXcd coeffs;
  double residual = 0.0;
};

/// coeffs[m] = kernel_form(Phi_m, s_theta), where s_theta is the component of
/// s in the fiber of fb, and residual = fiber_norm(s - sum coeffs[m] Phi_m).
Projection fiber_project(const CombState& s, const FiberBasis& fb);

struct XYResidual {
  double rx = 0.0;
  double ry = 0.0;
};

/// rx = |X s - e^{2 pi i theta1} s| / |s|, ry likewise for Y, norms by
/// fiber_norm. Throws std::invalid_argument for a zero-norm state.
XYResidual xy_residual(const CombState& s, const Theta& theta);

}  // namespace bakerlab
