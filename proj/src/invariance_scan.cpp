#include "bakerlab/invariance_scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "bakerlab/propagator.hpp"

namespace bakerlab {

std::vector<Rational> rationals_up_to(int max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("theta denominator bound must be >= 1");
  std::set<Rational> values;
  for (int q = 1; q <= max_denominator; ++q)
    for (int p = 0; p < q; ++p) values.insert(Rational(p, q));
  return {values.begin(), values.end()};
}

std::vector<Theta> theta_grid(int max_denominator) {
  const auto values = rationals_up_to(max_denominator);
  std::vector<Theta> grid;
  grid.reserve(values.size() * values.size());
  for (const auto& t1 : values)
    for (const auto& t2 : values) grid.push_back(Theta{t1, t2});
  return grid;
}

namespace {

struct Job {
  int N;
  Theta theta;
  int m;
};

ScanRecord run_job(const Job& job, const ScanOptions& options) {
  const ModelParams params = ModelParams::make(job.N, options.amp_epsilon, options.kernel_tol);
  const CombState image = apply_F(position_basis(params, job.theta, job.m));
  const XYResidual r = xy_residual(image, job.theta);
  ScanRecord rec;
  rec.N = job.N;
  rec.theta = job.theta;
  rec.m = job.m;
  rec.rx = r.rx;
  rec.ry = r.ry;
  rec.tol = options.tol;
  rec.invariant = std::max(r.rx, r.ry) < options.tol;
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan_theta(const std::vector<int>& Ns, const std::vector<Theta>& thetas,
                                   const ScanOptions& options) {
  if (!(options.tol > 0.0 && options.tol < 1.0)) throw std::invalid_argument("tol must lie in (0, 1)");
  std::vector<Job> jobs;
  for (int N : Ns) {
    if (N < 1) throw std::invalid_argument("N must be a positive integer");
    for (const auto& theta : thetas)
      for (int m = 0; m < N; ++m) jobs.push_back({N, theta, m});
  }

  // Each worker writes only its own slots, so the result is order-stable.
  std::vector<ScanRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) records[i] = run_job(jobs[i], options);
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(jobs.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

double doubling_check(const ModelParams& params, const Theta& theta, int m) {
  const CombState image = apply_F(position_basis(params, theta, m));
  const double norm = fiber_norm(image);
  if (!(norm > 0.0)) throw std::invalid_argument("doubling_check: F Phi_m has zero norm");
  const CombState diff = ops::X(image) - turns(theta.theta1 * 2) * image;
  return fiber_norm(diff) / norm;
}

std::vector<PairSummary> summarize(const std::vector<ScanRecord>& records) {
  std::vector<PairSummary> out;
  std::map<std::pair<int, Theta>, std::size_t> index;
  for (const auto& r : records) {
    auto [it, fresh] = index.try_emplace({r.N, r.theta}, out.size());
    if (fresh) out.push_back(PairSummary{r.N, r.theta, 0.0, 0.0, true});
    auto& p = out[it->second];
    p.max_rx = std::max(p.max_rx, r.rx);
    p.max_ry = std::max(p.max_ry, r.ry);
    p.invariant = p.invariant && r.invariant;
  }
  return out;
}

VerdictReport theorem_verdict(const std::vector<ScanRecord>& records) {
  VerdictReport report;
  for (const auto& pair : summarize(records)) {
    const bool expected = pair.N % 2 == 0 && pair.theta == Theta{};
    if (pair.invariant) report.invariant_pairs.push_back(pair);
    if (pair.invariant && !expected) {
      report.violations.push_back({pair, "invariant, but only theta=(0,0) with N even may be"});
    } else if (!pair.invariant && expected) {
      report.violations.push_back({pair, "theta=(0,0) with N even should be invariant"});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace bakerlab
