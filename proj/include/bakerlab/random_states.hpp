#pragma once

// Seeded generators of random comb geometry for property checks.

#include <random>

#include "bakerlab/comb.hpp"
#include "bakerlab/theta_space.hpp"

namespace bakerlab {

struct RandomStateOptions {
  int max_terms = 3;
  int max_phase_denominator = 8;
  int max_offset_denominator = 8;
};

/// Random rational in [0, 1) with denominator <= max_den.
Rational random_unit_rational(std::mt19937_64& rng, int max_den);

/// Spacing drawn from {a/b : a in 1..3, b in {1, 2, 4}}.
Rational random_spacing(std::mt19937_64& rng);

Comb random_comb(std::mt19937_64& rng, const RandomStateOptions& opt = {});

/// Canonical position-rep state with 1..max_terms random terms.
CombState random_state(std::mt19937_64& rng, const ModelParams& params, const RandomStateOptions& opt = {});

Theta random_theta(std::mt19937_64& rng, int max_den = 12);

}  // namespace bakerlab
