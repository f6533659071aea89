#include <doctest.h>

#include <cmath>
#include <random>

#include "bakerlab/comb.hpp"
#include "bakerlab/oracle/fft_oracle.hpp"
#include "bakerlab/random_states.hpp"
#include "bakerlab/theta_space.hpp"

using namespace bakerlab;

namespace {

CombState single(int N, Rational P, Rational x0, Rational phi, Complex a = 1.0) {
  return CombState(ModelParams::make(N), Rep::position, {Comb{P, x0, phi, a}});
}

bool same_terms_exactly(const CombState& a, const CombState& b) {
  if (a.rep() != b.rep() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Comb& s = a.terms()[i];
    const Comb& t = b.terms()[i];
    if (s.spacing != t.spacing || s.offset != t.offset || s.step_phase != t.step_phase) return false;
    if (std::abs(s.amplitude - t.amplitude) > 1e-14 * std::max(1.0, std::abs(s.amplitude))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("comb") {

TEST_CASE("make_comb re-anchors into [0, P) and carries the step phase") {
  const Comb c = make_comb(Rational(1), Rational(5, 4), Rational(1, 4), 1.0);
  CHECK(c.offset == Rational(1, 4));
  // the point at 5/4 has index 1 relative to 1/4, so its weight is A e^{2 pi i/4}
  CHECK(std::abs(c.amplitude * turns(Rational(1, 4)) - Complex(1, 0)) < 1e-15);
  CHECK_THROWS(make_comb(Rational(0), Rational(0), Rational(0), 1.0));
  CHECK_THROWS(make_comb(Rational(1), Rational(0), Rational(0), Complex(NAN, 0)));
}

TEST_CASE("refine describes the same points") {
  const Comb c{Rational(1, 2), Rational(1, 8), Rational(1, 3), Complex(0.5, 2.0)};
  const auto parts = refine(c, 3);
  REQUIRE(parts.size() == 3);
  const CombState whole(ModelParams::make(1), Rep::position, {c});
  const CombState split(ModelParams::make(1), Rep::position, parts);
  for (int k = -6; k <= 6; ++k) {
    const Rational x = Rational(1, 8) + Rational(k, 2);
    CHECK(std::abs(amplitude_at(whole, x) - amplitude_at(split, x)) < 1e-14);
  }
}

TEST_CASE("canonicalize") {
  const ModelParams p = ModelParams::make(2);
  SUBCASE("exact cancellation gives the empty state") {
    const CombState s(p, Rep::position,
                      {Comb{Rational(1), Rational(0), Rational(0), 1.0}, Comb{Rational(1), Rational(0), Rational(0), -1.0}});
    CHECK(canonicalize(s).empty());
  }
  SUBCASE("a single unit term is unchanged") {
    const CombState s(p, Rep::position, {Comb{Rational(1), Rational(1, 3), Rational(1, 5), 1.0}});
    const CombState c = canonicalize(s);
    REQUIRE(c.size() == 1);
    CHECK(c.terms()[0].offset == Rational(1, 3));
    CHECK(c.terms()[0].step_phase == Rational(1, 5));
    CHECK(c.terms()[0].amplitude == Complex(1.0, 0.0));
  }
  SUBCASE("amplitudes below amp_epsilon are pruned") {
    const CombState s(p, Rep::position, {Comb{Rational(1), Rational(0), Rational(0), 3e-17}});
    CHECK(canonicalize(s).empty());
  }
  SUBCASE("mixed spacings are brought to the common period") {
    const CombState s(p, Rep::position,
                      {Comb{Rational(1, 2), Rational(0), Rational(0), 1.0}, Comb{Rational(1, 3), Rational(0), Rational(0), 1.0}});
    const CombState c = canonicalize(s);
    for (const auto& t : c.terms()) CHECK(t.spacing == Rational(1));
    CHECK(std::abs(amplitude_at(c, Rational(0)) - Complex(2, 0)) < 1e-15);
    CHECK(std::abs(amplitude_at(c, Rational(1, 2)) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(amplitude_at(c, Rational(2, 3)) - Complex(1, 0)) < 1e-15);
    CHECK(amplitude_at(c, Rational(1, 4)) == Complex(0, 0));
  }
  SUBCASE("is idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const CombState s = random_state(rng, p);
      CHECK(same_terms_exactly(canonicalize(s), s));
    }
  }
}

TEST_CASE("phase_mult") {
  SUBCASE("integer total phase leaves the term alone") {
    const CombState s = single(4, Rational(1), Rational(1, 4), Rational(0));
    const CombState t = phase_mult(s, Rational(4));
    REQUIRE(t.size() == 1);
    CHECK(t.terms()[0].step_phase == Rational(0));
    CHECK(std::abs(t.terms()[0].amplitude - Complex(1, 0)) < 1e-15);
  }
  SUBCASE("a = 0 is the identity") {
    const CombState s = single(3, Rational(1, 2), Rational(1, 5), Rational(2, 7), Complex(0.3, -1.1));
    CHECK(same_terms_exactly(phase_mult(s, Rational(0)), s));
  }
  SUBCASE("X acts on Phi_0^{(1/4,0)} by e^{i pi/2}") {
    const ModelParams p = ModelParams::make(2);
    const CombState phi = position_basis(p, Theta{Rational(1, 4), Rational(0)}, 0);
    const CombState t = ops::X(phi);
    REQUIRE(t.size() == 1);
    CHECK(t.terms()[0].step_phase == Rational(0));
    CHECK(std::abs(t.terms()[0].amplitude / phi.terms()[0].amplitude - Complex(0, 1)) < 1e-15);
  }
  SUBCASE("op(a) then op(-a) restores the terms") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      const CombState s = random_state(rng, ModelParams::make(1 + i % 5));
      const Rational a = random_unit_rational(rng, 9) * Rational(7);
      CHECK(same_terms_exactly(phase_mult(phase_mult(s, a), -a), s));
    }
  }
}

TEST_CASE("translate") {
  SUBCASE("shift without wraparound") {
    const CombState t = translate(single(1, Rational(1), Rational(1, 4), Rational(1, 3)), Rational(1, 2));
    REQUIRE(t.size() == 1);
    CHECK(t.terms()[0].offset == Rational(3, 4));
    CHECK(t.terms()[0].step_phase == Rational(1, 3));
    CHECK(t.terms()[0].amplitude == Complex(1, 0));
  }
  SUBCASE("wraparound re-anchors one step back") {
    const Rational theta2(1, 3);
    const CombState t = translate(single(1, Rational(1), Rational(3, 4), theta2), Rational(1, 2));
    REQUIRE(t.size() == 1);
    CHECK(t.terms()[0].offset == Rational(1, 4));
    // the point 5/4 = 1/4 + 1 carries the old index-0 weight
    CHECK(std::abs(t.terms()[0].amplitude - turns(-theta2)) < 1e-15);
    CHECK(std::abs(amplitude_at(t, Rational(5, 4)) - Complex(1, 0)) < 1e-15);
  }
  SUBCASE("group property") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      const CombState s = random_state(rng, ModelParams::make(2));
      const Rational a = random_unit_rational(rng, 8) * Rational(-5, 2);
      CHECK(same_terms_exactly(translate(translate(s, a), -a), s));
    }
  }
}

TEST_CASE("squeeze") {
  const CombState t = ops::S(single(1, Rational(1), Rational(1, 4), Rational(0)));
  REQUIRE(t.size() == 1);
  CHECK(t.terms()[0].spacing == Rational(2));
  CHECK(t.terms()[0].offset == Rational(1, 2));
  CHECK(t.terms()[0].amplitude.real() == doctest::Approx(std::sqrt(2.0)));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const CombState s = random_state(rng, ModelParams::make(3));
    CHECK(same_terms_exactly(unsqueeze(squeeze(s)), s));
  }
}

TEST_CASE("indicator_x") {
  const CombState s = single(1, Rational(1), Rational(1, 4), Rational(0));
  CHECK(same_terms_exactly(ops::L(s), s));
  CHECK(ops::R(s).empty());
  CHECK_THROWS(indicator_x(fourier_comb(s), ops::kLeft, Rational(1)));
  CHECK_THROWS(indicator_x(s, Window{Rational(1, 2), Rational(1, 4)}, Rational(1)));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const CombState r = random_state(rng, ModelParams::make(1 + i % 8));
    // L + R comes back at period lcm(P, 1); compare at a shared period.
    CHECK(term_equal(ops::L(r) + ops::R(r), r, 1e-14));
    CHECK(ops::L(ops::R(r)).empty());
    CHECK(same_terms_exactly(ops::L(ops::L(r)), ops::L(r)));
  }
}

TEST_CASE("fourier_comb geometry") {
  SUBCASE("uniform comb, N = 2") {
    const CombState hat = fourier_comb(single(2, Rational(1), Rational(0), Rational(0)));
    CHECK(hat.rep() == Rep::momentum);
    REQUIRE(hat.size() == 1);
    CHECK(hat.terms()[0].spacing == Rational(1, 2));
    CHECK(hat.terms()[0].offset == Rational(0));
    CHECK(hat.terms()[0].step_phase == Rational(0));
  }
  SUBCASE("half step phase moves the dual comb by half a step") {
    const CombState hat = fourier_comb(single(2, Rational(1), Rational(0), Rational(1, 2)));
    REQUIRE(hat.size() == 1);
    CHECK(hat.terms()[0].spacing == Rational(1, 2));
    CHECK(hat.terms()[0].offset == Rational(1, 4));
  }
  SUBCASE("twice is parity, four times the identity") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
      const ModelParams p = ModelParams::make(1 + i % 8);
      const CombState s = random_state(rng, p);
      const CombState twice = fourier_comb(fourier_comb(s));
      CHECK(twice.rep() == Rep::position);
      for (int k = -3; k <= 3; ++k) {
        for (const auto& c : s.terms()) {
          const Rational x = c.offset + c.spacing * Rational(k);
          CHECK(std::abs(amplitude_at(twice, -x) - amplitude_at(s, x)) < 1e-13);
        }
      }
      CHECK(same_terms_exactly(fourier_comb(twice), inverse_fourier_comb(s)));
      CHECK(same_terms_exactly(fourier_comb(fourier_comb(twice)), s));
      CHECK(same_terms_exactly(inverse_fourier_comb(fourier_comb(s)), s));
    }
  }
  SUBCASE("linearity") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
      const ModelParams p = ModelParams::make(1 + i % 4);
      const CombState a = random_state(rng, p);
      const CombState b = random_state(rng, p);
      const Complex z(0.7, -1.3);
      CHECK(max_term_difference(fourier_comb(a + z * b), fourier_comb(a) + z * fourier_comb(b)) < 1e-13);
    }
  }
}

TEST_CASE("fourier_comb amplitudes agree with the FFT oracle") {
  struct Case {
    int N;
    Rational P, x0, phi;
  };
  const Case cases[] = {{2, Rational(1), Rational(0), Rational(0)},
                        {2, Rational(1), Rational(0), Rational(1, 2)},
                        {3, Rational(1, 2), Rational(1, 6), Rational(1, 4)},
                        {1, Rational(2), Rational(3, 2), Rational(2, 3)}};
  for (const auto& c : cases) {
    CAPTURE(c.N);
    const Complex amp(1.0, 0.5);
    const CombState hat = fourier_comb(single(c.N, c.P, c.x0, c.phi, amp));
    const auto w = oracle::fft_momentum_weights(
        {to_double(c.P), to_double(c.x0), static_cast<int>(c.phi.numerator()), static_cast<int>(c.phi.denominator()), amp},
        c.N);
    const Rational box = c.P * Rational(c.phi.denominator());
    for (const auto& [j, weight] : w.w) {
      CAPTURE(j);
      CHECK(std::abs(amplitude_at(hat, Rational(j) / (Rational(c.N) * box)) - weight) < 1e-6);
    }
  }
}

TEST_CASE("indicator_p") {
  const ModelParams p = ModelParams::make(2);
  const CombState s = single(2, Rational(1), Rational(0), Rational(0));
  const CombState even = fourier_comb(ops::E_p(s));
  const CombState odd = fourier_comb(ops::O_p(s));
  for (auto [num, den, in_even] : {std::tuple{0, 1, true}, {1, 2, true}, {1, 1, false}, {3, 2, false}}) {
    const Rational q(num, den);
    CAPTURE(format_rational(q));
    CHECK((std::abs(amplitude_at(even, q)) > 0.1) == in_even);
    CHECK((std::abs(amplitude_at(odd, q)) > 0.1) == !in_even);
  }
  CHECK_THROWS(indicator_p(fourier_comb(s), ops::kEvenP));

  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const CombState r = random_state(rng, ModelParams::make(1 + i % 8));
    CHECK(max_term_difference(ops::E_p(r) + ops::O_p(r), r) < 1e-13);
    CHECK(ops::O_p(ops::E_p(r)).empty());
  }
  (void)p;
}

TEST_CASE("arithmetic rejects mismatched states") {
  const CombState a = single(2, Rational(1), Rational(0), Rational(0));
  const CombState b = single(3, Rational(1), Rational(0), Rational(0));
  CHECK_THROWS(a + b);
  CHECK_THROWS(a + fourier_comb(a));
  CHECK_THROWS(ModelParams::make(0));
  CHECK_THROWS(ModelParams::make(2, 0.0));
}

}
