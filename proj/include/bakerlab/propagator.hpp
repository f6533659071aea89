#pragma once

// The quantum baker propagator
//
//     F = S (L + e^{-i x/hbar} R) (E_p + e^{-i p/2hbar} O_p)
//
// as an exact pipeline on comb states, and its restriction to the periodic
// fiber theta = (0,0) as an N x N matrix for even N.

#include <vector>

#include <Eigen/Dense>

#include "bakerlab/comb.hpp"

namespace bakerlab {

/// Dense complex square matrix. Every builder in this header returns a
/// unitary one.
struct UnitaryMatrix {
  Eigen::MatrixXcd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
  /// max |M^dagger M - I|.
  double unitarity_deviation() const;
  /// Eigenphases in (-pi, pi], sorted ascending.
  std::vector<double> eigenphases() const;
  std::vector<Complex> eigenvalues() const;
};

CombState apply_F(const CombState& s);

/// The right-hand factors of F before the final squeeze:
/// t = E_p s + Y^{-1/2} O_p s.
CombState momentum_stage(const CombState& s);

/// dft(N)[n][m] = N^{-1/2} e^{2 pi i n m / N}.
UnitaryMatrix dft(int N);

/// diag(e^{i pi n / N}), n = 0..N-1.
UnitaryMatrix z_phase(int N);

/// Z entry at an arbitrary integer index: e^{i pi (n/N - floor(n/N))}.
Complex z_phase_at(std::int64_t n, int N);

/// Z (F^N)^{-1} blockdiag(F^{N/2}, -F^{N/2}) Z^{-2}, with F^N the conjugate of
/// dft(N) (kernel e^{-2 pi i n m / N}). Throws for odd N.
UnitaryMatrix matrix_F(int N);

struct MatrixCombCheck {
  double deviation = 0.0;   // max |C - e^{i alpha} M| over entries
  double global_phase = 0.0;  // alpha, radians
  Eigen::MatrixXcd comb_matrix;  // C[n][m] = kernel_form(Phi_n, F Phi_m) at theta = (0,0)
};

/// Compares matrix_F(N) with the comb-level propagator on the periodic fiber.
/// Throws for odd N.
MatrixCombCheck matrix_vs_comb_check(const ModelParams& params);

/// 2 S X^{-1} R (E_p + Y^{-1/2} O_p) Phi_m^{(0,1/2)}. Throws for even N.
CombState odd_residual_state(const ModelParams& params, int m);

}  // namespace bakerlab
