#include "bakerlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "bakerlab/classical_cover.hpp"
#include "bakerlab/invariance_scan.hpp"
#include "bakerlab/kernel.hpp"
#include "bakerlab/oracle/fft_oracle.hpp"
#include "bakerlab/propagator.hpp"
#include "bakerlab/random_states.hpp"

namespace bakerlab {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

template <class Body>
CriterionResult timed(int id, std::string title, Body body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r{id, std::move(title), false, {}, 0.0};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

ScanOptions scan_options(const AcceptanceOptions& opt) {
  ScanOptions s;
  s.tol = 1e-8;
  s.threads = opt.threads;
  return s;
}

}  // namespace

CriterionResult check_theorem_scan(const AcceptanceOptions& opt) {
  return timed(1, "theorem reproduction: invariant set is {(N even, (0,0))}", [&](CriterionResult& r) {
    const auto records = scan_theta(range(1, 8), theta_grid(8), scan_options(opt));
    const auto verdict = theorem_verdict(records);
    r.pass = verdict.pass;
    std::ostringstream os;
    os << records.size() << " records, " << verdict.invariant_pairs.size() << " invariant pairs, "
       << verdict.violations.size() << " violations";
    if (!verdict.violations.empty()) {
      const auto& v = verdict.violations.front();
      os << "; first: N=" << v.pair.N << " theta=" << v.pair.theta.to_string() << " " << v.reason;
    }
    r.detail = os.str();
  });
}

CriterionResult check_commutators(const AcceptanceOptions& opt) {
  return timed(2, "commutator identities on random comb states", [&](CriterionResult& r) {
    using namespace ops;
    std::mt19937_64 rng(opt.seed);
    constexpr int kStates = 100;
    double worst = 0.0;
    double worst_terms = 0.0;
    int checked = 0;
    for (int N = 1; N <= 8; ++N) {
      const ModelParams params = ModelParams::make(N);
      const Complex sign = N % 2 == 0 ? Complex(1.0) : Complex(-1.0);
      for (int i = 0; i < kStates; ++i) {
        const CombState s = random_state(rng, params);
        const CombState empty(params, Rep::position);
        const std::pair<CombState, CombState> sides[] = {
            {Y_half(L(s)), R(Y_half(s))},
            {Y_half(X(s)), sign * X(Y_half(s))},
            {X_inv(E_p(s)), O_p(X_inv(s))},
            {L(R(s)), empty},
            {E_p(O_p(s)), empty},
        };
        for (const auto& [lhs, rhs] : sides) {
          worst = std::max(worst, fiber_norm(lhs - rhs));
          worst_terms = std::max(worst_terms, max_term_difference(lhs, rhs));
        }
        ++checked;
      }
    }
    r.pass = worst < 1e-12 && worst_terms < 1e-12;
    r.detail = std::to_string(checked) + " states x 5 identities, max residual norm " + sci(worst) +
               ", max term difference " + sci(worst_terms);
  });
}

CriterionResult check_doubling(const AcceptanceOptions& opt) {
  return timed(3, "doubling identity X F Phi = e^{4 pi i theta1} F Phi", [&](CriterionResult& r) {
    const auto thetas = theta_grid(8);
    double worst = 0.0;
    long count = 0;
    for (int N = 1; N <= 8; ++N) {
      const ModelParams params = ModelParams::make(N);
      for (const auto& theta : thetas)
        for (int m = 0; m < N; ++m) {
          worst = std::max(worst, doubling_check(params, theta, m));
          ++count;
        }
    }
    (void)opt;
    r.pass = worst < 1e-10;
    r.detail = std::to_string(count) + " (N, theta, m), max residual " + sci(worst);
  });
}

CriterionResult check_odd_residual(const AcceptanceOptions& opt) {
  return timed(4, "odd-N residual identity and non-vanishing", [&](CriterionResult& r) {
    (void)opt;
    const Theta anti{Rational(0), Rational(1, 2)};
    double worst_identity = 0.0;
    bool all_nonzero = true;
    std::ostringstream os;
    for (int N : {1, 3, 5, 7}) {
      const ModelParams params = ModelParams::make(N);
      double largest = 0.0;
      for (int m = 0; m < N; ++m) {
        const CombState image = apply_F(position_basis(params, anti, m));
        const CombState lhs = ops::Y(image) - turns(Rational(1, 2)) * image;
        const CombState rhs = odd_residual_state(params, m);
        worst_identity = std::max(worst_identity, fiber_norm(lhs - rhs));
        largest = std::max(largest, fiber_norm(rhs));
      }
      all_nonzero = all_nonzero && largest > 1e-3;
      os << " N=" << N << ":" << sci(largest);
    }
    r.pass = worst_identity < 1e-10 && all_nonzero;
    r.detail = "identity error " + sci(worst_identity) + ", max residual norm per N" + os.str();
  });
}

CriterionResult check_orthonormality(const AcceptanceOptions& opt) {
  return timed(5, "Gram matrices are the identity", [&](CriterionResult& r) {
    std::mt19937_64 rng(opt.seed + 5);
    std::vector<Theta> thetas;
    for (int i = 0; i < 20; ++i) thetas.push_back(random_theta(rng, 12));
    double worst = 0.0;
    for (int N = 1; N <= 16; ++N) {
      const ModelParams params = ModelParams::make(N);
      for (const auto& theta : thetas) {
        const auto g = gram_matrix(build_fiber(params, theta));
        const auto id = Eigen::MatrixXcd::Identity(N, N);
        worst = std::max(worst, (g - id).cwiseAbs().maxCoeff());
      }
    }
    r.pass = worst < 1e-8;
    r.detail = "N=1..16 x 20 theta, max |G - I| " + sci(worst);
  });
}

CriterionResult check_matrix_form(const AcceptanceOptions& opt) {
  return timed(6, "matrix form agrees with the comb propagator", [&](CriterionResult& r) {
    (void)opt;
    double worst_check = 0.0;
    for (int N : {2, 4, 6, 8})
      worst_check = std::max(worst_check, matrix_vs_comb_check(ModelParams::make(N)).deviation);
    double worst_unitary = 0.0;
    for (int N = 2; N <= 32; N += 2) worst_unitary = std::max(worst_unitary, matrix_F(N).unitarity_deviation());

    Eigen::Matrix2cd hand;
    const double s = 1.0 / std::sqrt(2.0);
    hand << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
    const Eigen::MatrixXcd m2 = matrix_F(2).entries;
    const Complex overlap = (m2.conjugate().cwiseProduct(hand)).sum();
    const Complex phase = std::polar(1.0, std::arg(overlap));
    const double hand_dev = (hand - phase * m2).cwiseAbs().maxCoeff();

    r.pass = worst_check < 1e-8 && worst_unitary < 1e-12 && hand_dev < 1e-12;
    r.detail = "matrix-vs-comb " + sci(worst_check) + ", unitarity (N<=32) " + sci(worst_unitary) +
               ", N=2 vs hand matrix " + sci(hand_dev);
  });
}

CriterionResult check_classical_escape(const AcceptanceOptions& opt) {
  return timed(7, "classical escape of the momentum lattice", [&](CriterionResult& r) {
    (void)opt;
    bool ok = true;
    double min_half = 1.0;
    double max_zero = 0.0;
    for (int N = 1; N <= 8; ++N) {
      min_half = std::min(min_half, escape_check(N, Rational(1, 2), -8, 8).fraction);
      max_zero = std::max(max_zero, escape_check(N, Rational(0), -8, 8).fraction);
    }
    ok = min_half > 0.0 && max_zero == 0.0;

    int exact = 0;
    int total = 0;
    for (int N = 1; N <= 8; ++N)
      for (const auto& t2 : rationals_up_to(8))
        for (std::int64_t k = -4; k <= 4; ++k) {
          ++total;
          const Rational expected = t2 / Rational(2 * N) + Rational(k, 2);
          if (momentum_center_image(N, t2, 0, k) == expected) ++exact;
        }
    r.pass = ok && exact == total;
    r.detail = "min fraction (theta2=1/2) " + sci(min_half) + ", max fraction (theta2=0) " + sci(max_zero) +
               ", momentum_center_image exact " + std::to_string(exact) + "/" + std::to_string(total);
  });
}

CriterionResult check_fourier_engine(const AcceptanceOptions& opt) {
  return timed(8, "Fourier engine: fourfold identity and FFT oracle", [&](CriterionResult& r) {
    std::mt19937_64 rng(opt.seed + 8);
    int geometry_mismatch = 0;
    double worst_four = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ModelParams params = ModelParams::make(1 + i % 8);
      const CombState s = canonicalize(CombState(params, Rep::position, {random_comb(rng)}));
      const CombState back = fourier_comb(fourier_comb(fourier_comb(fourier_comb(s))));
      if (back.rep() != s.rep() || back.size() != s.size()) {
        ++geometry_mismatch;
        continue;
      }
      for (std::size_t t = 0; t < s.size(); ++t) {
        const Comb& a = s.terms()[t];
        const Comb& b = back.terms()[t];
        if (a.spacing != b.spacing || a.offset != b.offset || a.step_phase != b.step_phase) ++geometry_mismatch;
        worst_four = std::max(worst_four, std::abs(a.amplitude - b.amplitude) / std::abs(a.amplitude));
      }
    }

    // Independent numerical transform of single combs.
    struct Case {
      int N;
      Rational spacing, offset, phase;
    };
    const Case cases[] = {
        {1, Rational(1), Rational(0), Rational(0)},        {2, Rational(1), Rational(1, 4), Rational(1, 2)},
        {3, Rational(1, 2), Rational(1, 8), Rational(1, 3)}, {4, Rational(3, 2), Rational(1, 2), Rational(3, 4)},
        {5, Rational(1), Rational(2, 5), Rational(1, 5)},   {2, Rational(3, 4), Rational(1, 3), Rational(2, 3)},
    };
    double worst_oracle = 0.0;
    int compared = 0;
    for (const auto& c : cases) {
      const ModelParams params = ModelParams::make(c.N);
      const Complex amp(0.6, -0.8);
      const CombState s(params, Rep::position, {Comb{c.spacing, c.offset, c.phase, amp}});
      const CombState hat = fourier_comb(s);
      oracle::SampledComb sampled{to_double(c.spacing), to_double(c.offset), static_cast<int>(c.phase.numerator()),
                                  static_cast<int>(c.phase.denominator()), amp};
      const auto weights = oracle::fft_momentum_weights(sampled, c.N);
      const Rational box = c.spacing * Rational(c.phase.denominator());
      for (const auto& [j, w] : weights.w) {
        const Complex engine = amplitude_at(hat, Rational(j) / (Rational(c.N) * box));
        worst_oracle = std::max(worst_oracle, std::abs(engine - w));
        ++compared;
      }
    }

    r.pass = geometry_mismatch == 0 && worst_four < 1e-14 && worst_oracle < 1e-6;
    r.detail = "1000 combs: geometry mismatches " + std::to_string(geometry_mismatch) + ", max relative amplitude error " +
               sci(worst_four) + "; oracle: " + std::to_string(compared) + " weights, max error " + sci(worst_oracle);
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress) {
  using Check = CriterionResult (*)(const AcceptanceOptions&);
  const Check checks[] = {check_theorem_scan,    check_commutators,     check_doubling,
                          check_odd_residual,    check_orthonormality,  check_matrix_form,
                          check_classical_escape, check_fourier_engine};
  std::vector<CriterionResult> out;
  for (Check c : checks) {
    out.push_back(c(opt));
    if (progress) progress(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f s", r.seconds);
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " (" + r.detail +
         ", " + secs + ")";
}

}  // namespace bakerlab
