#include "bakerlab/random_states.hpp"

namespace bakerlab {

Rational random_unit_rational(std::mt19937_64& rng, int max_den) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, den - 1);
  return Rational(num_dist(rng), den);
}

Rational random_spacing(std::mt19937_64& rng) {
  static constexpr int kDens[] = {1, 2, 4};
  std::uniform_int_distribution<int> num(1, 3);
  std::uniform_int_distribution<int> den(0, 2);
  return Rational(num(rng), kDens[den(rng)]);
}

Comb random_comb(std::mt19937_64& rng, const RandomStateOptions& opt) {
  std::normal_distribution<double> gauss;
  const Rational spacing = random_spacing(rng);
  Comb c;
  c.spacing = spacing;
  c.offset = spacing * random_unit_rational(rng, opt.max_offset_denominator);
  c.step_phase = random_unit_rational(rng, opt.max_phase_denominator);
  c.amplitude = Complex(gauss(rng), gauss(rng));
  return c;
}

CombState random_state(std::mt19937_64& rng, const ModelParams& params, const RandomStateOptions& opt) {
  std::uniform_int_distribution<int> count(1, opt.max_terms);
  std::vector<Comb> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back(random_comb(rng, opt));
  return canonicalize(CombState(params, Rep::position, std::move(terms)));
}

Theta random_theta(std::mt19937_64& rng, int max_den) {
  return Theta{random_unit_rational(rng, max_den), random_unit_rational(rng, max_den)};
}

}  // namespace bakerlab
