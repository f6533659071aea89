#include <doctest.h>

#include <cmath>
#include <random>

#include "bakerlab/kernel.hpp"
#include "bakerlab/oracle/kernel_oracle.hpp"
#include "bakerlab/random_states.hpp"
#include "bakerlab/theta_space.hpp"

using namespace bakerlab;

TEST_SUITE("kernel") {

TEST_CASE("coincident points give N") {
  for (int N = 1; N <= 9; ++N) {
    CHECK(eval_kernel(0.3, 0.3, N) == Complex(N, 0));
    CHECK(eval_kernel_exact(Rational(0), N) == Complex(N, 0));
  }
}

TEST_CASE("integer separation is an exact zero") {
  for (int N = 1; N <= 6; ++N) {
    CHECK(eval_kernel_exact(Rational(-1), N) == Complex(0, 0));
    CHECK(eval_kernel_exact(Rational(3, N), N) == Complex(0, 0));
    CHECK(std::abs(eval_kernel(0.0, 1.0, N)) < 1e-15);
  }
}

TEST_CASE("agrees with a 50-digit evaluation") {
  for (int N = 1; N <= 8; ++N) {
    const Complex ref = oracle::kernel_high_precision(-1, 2 * N, N);  // x - y = -1/(2N)
    const Complex k = eval_kernel(0.0, 1.0 / (2 * N), N);
    const Complex kx = eval_kernel_exact(Rational(-1, 2 * N), N);
    CAPTURE(N);
    CHECK(std::abs(k - ref) < 1e-13 * std::abs(ref));
    CHECK(std::abs(kx - ref) < 1e-13 * std::abs(ref));
    CHECK(std::arg(ref) == doctest::Approx(kPi / 4).epsilon(1e-12));
  }
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long long> num(-200, 200);
  for (int i = 0; i < 200; ++i) {
    const long long a = num(rng);
    const long long b = 1 + (i % 37);
    const int N = 1 + i % 12;
    const Complex ref = oracle::kernel_high_precision(a, b, N);
    CHECK(std::abs(eval_kernel_exact(Rational(a, b), N) - ref) < 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("Hermitian symmetry") {
  for (double d : {0.1, 0.37, 1.25, 2.5})
    for (int N : {1, 2, 5}) CHECK(std::abs(eval_kernel(d, 0.0, N) - std::conj(eval_kernel(0.0, d, N))) < 1e-15);
}

TEST_CASE("truncation radius") {
  for (double tol : {1e-8, 1e-14, 1e-18}) {
    for (int N = 1; N <= 16; ++N) {
      const auto R = kernel_truncation_radius(ModelParams::make(N, 1e-15, tol));
      CHECK(std::exp(-(kPi * N / 2) * R * R) < tol);
    }
  }
}

TEST_CASE("kernel_form on a fiber") {
  SUBCASE("N = 1 periodic comb is normalized, also with a tighter truncation") {
    const CombState phi = position_basis(ModelParams::make(1), Theta{}, 0);
    const CombState tight = position_basis(ModelParams::make(1, 1e-15, 1e-18), Theta{}, 0);
    CHECK(std::abs(kernel_form(phi, phi) - Complex(1, 0)) < 1e-10);
    CHECK(std::abs(kernel_form(phi, phi) - kernel_form(tight, tight)) < 1e-14);
  }
  SUBCASE("positive on single-fiber states") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    for (int i = 0; i < 40; ++i) {
      const ModelParams p = ModelParams::make(1 + i % 6);
      const FiberBasis fb = build_fiber(p, random_theta(rng, 8));
      CombState s(p, Rep::position);
      for (const auto& b : fb.basis) s += Complex(g(rng), g(rng)) * b;
      const Complex q = kernel_form(s, s);
      CHECK(q.real() > 0.0);
      CHECK(std::abs(q.imag()) < 1e-12 * q.real());
      CHECK(kernel_form(CombState(p, Rep::position), s) == Complex(0, 0));
    }
  }
  SUBCASE("rejects momentum states") {
    const CombState phi = position_basis(ModelParams::make(2), Theta{}, 0);
    CHECK_THROWS(kernel_form(phi, fourier_comb(phi)));
  }
}

}
