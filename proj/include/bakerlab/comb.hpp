#pragma once

// Dirac-comb states and the exact operator calculus on them.
//
// A Comb is the distribution
//
//     A * sum_k e^{2 pi i phi k} delta(u - u0 - P k)
//
// in either the position (u = x) or momentum (u = p) variable. Geometry
// (P, u0, phi) is exact rational; only the amplitude A is floating point.
// With h = 1/N the Fourier pairing is <x|p> = sqrt(N) e^{2 pi i N p x}.

#include <vector>

#include "bakerlab/rational.hpp"

namespace bakerlab {

struct ModelParams {
  int N = 1;
  double amp_epsilon = 1e-15;
  double kernel_tol = 1e-14;

  /// Validated construction; throws std::invalid_argument.
  static ModelParams make(int N, double amp_epsilon = 1e-15, double kernel_tol = 1e-14);

  double hbar() const { return 1.0 / (2.0 * kPi * N); }
};

enum class Rep { position, momentum };

const char* rep_name(Rep rep);  // "x" or "p"

struct Comb {
  Rational spacing{1};
  Rational offset{0};      // in [0, spacing)
  Rational step_phase{0};  // in [0, 1), turns per lattice step
  Complex amplitude{1.0, 0.0};

  friend bool operator==(const Comb&, const Comb&) = default;
};

/// Builds a comb whose anchor may lie anywhere: the anchor is moved into
/// [0, spacing) and the amplitude picks up the phase of the skipped steps,
/// so the pointwise distribution is unchanged.
Comb make_comb(Rational spacing, Rational anchor, Rational step_phase, Complex amplitude);

/// Splits a comb into `factor` sub-combs of spacing factor*P.
std::vector<Comb> refine(const Comb& c, std::int64_t factor);

/// Half-open interval [lo, hi).
struct Window {
  Rational lo;
  Rational hi;
  bool contains(const Rational& r) const { return lo <= r && r < hi; }
};

class CombState {
 public:
  explicit CombState(const ModelParams& params, Rep rep = Rep::position);
  /// Terms are re-anchored individually but not merged; see canonicalize().
  CombState(const ModelParams& params, Rep rep, std::vector<Comb> terms);

  const ModelParams& params() const { return params_; }
  int N() const { return params_.N; }
  Rep rep() const { return rep_; }
  const std::vector<Comb>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Least common multiple of all term spacings (1 for an empty state).
  Rational common_period() const;

  CombState& operator+=(const CombState& other);
  CombState& operator-=(const CombState& other);
  CombState& operator*=(Complex c);

 private:
  ModelParams params_;
  Rep rep_;
  std::vector<Comb> terms_;
};

CombState operator+(CombState a, const CombState& b);
CombState operator-(CombState a, const CombState& b);
CombState operator*(Complex c, CombState s);

/// Refines every term to the common period, merges equal geometry and drops
/// amplitudes below amp_epsilon. The result is unique for a given distribution
/// at that period; terms are sorted by (offset, step_phase).
CombState canonicalize(const CombState& s);

/// Multiplication by e^{2 pi i a x}. Position rep only.
CombState phase_mult(const CombState& s, const Rational& a);

/// Shifts supports x -> x + a, i.e. applies e^{-i a p / hbar}. Position rep only.
CombState translate(const CombState& s, const Rational& a);

/// The dilation S: support x -> 2x, amplitude scaled by sqrt(2).
CombState squeeze(const CombState& s);
CombState unsqueeze(const CombState& s);

/// Keeps the points whose coordinate mod `modulus` lies in `window`.
/// Position rep only.
CombState indicator_x(const CombState& s, const Window& window, const Rational& modulus);

/// Same residue selection without the rep check; used on momentum combs.
CombState select_residues(const CombState& s, const Window& window, const Rational& modulus);

/// Fourier transform with kernel sqrt(N) e^{-2 pi i N u v}. Toggles the rep
/// label. Applied to a position state it yields the momentum wavefunction
/// <p|psi>; applied twice it is the parity u -> -u; four times the identity.
CombState fourier_comb(const CombState& s);

/// Inverse of fourier_comb (kernel sqrt(N) e^{+2 pi i N u v}).
CombState inverse_fourier_comb(const CombState& s);

/// Projects onto momenta with p mod 2 in `window`. Position in, position out.
CombState indicator_p(const CombState& s, const Window& window);

/// Term-level comparison: both states are refined to a shared period and every
/// amplitude must agree within tol. Geometry must match exactly.
bool term_equal(const CombState& a, const CombState& b, double tol);

/// Largest amplitude difference after refining to a shared period.
double max_term_difference(const CombState& a, const CombState& b);

/// Total delta weight the state carries at coordinate u (0 off the lattice).
Complex amplitude_at(const CombState& s, const Rational& u);

// The operators out of which the propagator is assembled.
namespace ops {

inline const Window kLeft{Rational(0), Rational(1, 2)};
inline const Window kRight{Rational(1, 2), Rational(1)};
inline const Window kEvenP{Rational(0), Rational(1)};
inline const Window kOddP{Rational(1), Rational(2)};

inline CombState X(const CombState& s) { return phase_mult(s, Rational(s.N())); }
inline CombState X_inv(const CombState& s) { return phase_mult(s, Rational(-s.N())); }
inline CombState U(const CombState& s) { return phase_mult(s, Rational(1)); }
inline CombState Y(const CombState& s) { return translate(s, Rational(-1)); }
inline CombState Y_half(const CombState& s) { return translate(s, Rational(-1, 2)); }
inline CombState Y_neg_half(const CombState& s) { return translate(s, Rational(1, 2)); }
inline CombState V(const CombState& s) { return translate(s, Rational(-1, s.N())); }
inline CombState L(const CombState& s) { return indicator_x(s, kLeft, Rational(1)); }
inline CombState R(const CombState& s) { return indicator_x(s, kRight, Rational(1)); }
inline CombState E_p(const CombState& s) { return indicator_p(s, kEvenP); }
inline CombState O_p(const CombState& s) { return indicator_p(s, kOddP); }
inline CombState S(const CombState& s) { return squeeze(s); }

}  // namespace ops

}  // namespace bakerlab
