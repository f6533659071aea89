#pragma once

// The fiber inner product
//
//     (psi1, psi2) = int_0^1 conj(psi1(x)) (K psi2)(x) dx,
//     K(x, y) = sin(pi N (x-y)) / (pi (x-y)) * exp(-(pi N / 2) ((x-y)^2 + i (x-y)))
//
// evaluated in closed form on comb states.

#include "bakerlab/comb.hpp"

namespace bakerlab {

/// K(x, y), with K(x, x) = N.
Complex eval_kernel(double x, double y, int N);

/// K as a function of the exact difference d = x - y. The sine factor is
/// reduced exactly, so it vanishes identically when N d is an integer.
Complex eval_kernel_exact(const Rational& d, int N);

/// Truncation radius R with exp(-(pi N / 2) R^2) < kernel_tol, rounded up to
/// an integer number of x-units.
std::int64_t kernel_truncation_radius(const ModelParams& params);

/// Double sum over points x_i in [0, 1) of s1 and points y_j of s2 within the
/// truncation radius of [0, 1]. Both states must be in position rep.
///
/// On a single fiber this is the fiber inner product. For states spread over
/// several fibers it is only a diagnostic pairing; use fiber_norm() in
/// theta_space.hpp for a norm.
Complex kernel_form(const CombState& s1, const CombState& s2);

}  // namespace bakerlab
