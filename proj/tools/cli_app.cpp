#include "cli_app.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bakerlab/acceptance.hpp"
#include "bakerlab/classical_cover.hpp"
#include "bakerlab/invariance_scan.hpp"
#include "bakerlab/propagator.hpp"
#include "bakerlab/serialize.hpp"

namespace bakerlab::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must be written a..b: '" + text + "'");
  const auto lo = parse_int(text.substr(0, dots));
  const auto hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

// Relative paths land under BAKERLAB_OUTPUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BAKERLAB_OUTPUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  }
  return p;
}

// Writes through `write` into `path`, or into `fallback` when path is empty.
template <class Write>
void emit(const std::string& path, std::ostream& fallback, Write write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  const fs::path target = resolve_output(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  // Render fully before touching the file so a failure leaves no partial report.
  std::ostringstream buffer;
  write(buffer);
  std::ofstream file(target);
  if (!file) throw std::runtime_error("cannot open " + target.string() + " for writing");
  file << buffer.str();
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
}

// --- scan -----------------------------------------------------------------

struct ScanArgs {
  std::string n;
  std::vector<std::string> thetas;
  int theta_denom = 8;
  double tol = 1e-8;
  std::string format = "json";
  std::string out;
  unsigned threads = 1;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  check_format(a.format);
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  if (a.threads < 1) throw UsageError("--threads must be >= 1");
  const auto Ns = parse_n_list(a.n);
  std::vector<Theta> thetas;
  if (a.thetas.empty()) {
    thetas = theta_grid(a.theta_denom);
  } else {
    for (const auto& t : a.thetas) thetas.push_back(Theta::parse(t));
  }

  ScanOptions opt;
  opt.tol = a.tol;
  opt.threads = a.threads;
  const auto records = scan_theta(Ns, thetas, opt);
  const auto verdict = theorem_verdict(records);

  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "csv") {
      write_scan_summary_csv(os, summarize(records));
      return;
    }
    // JSON lines: one record per line, the verdict last.
    for (const auto& r : records) os << to_json(r).dump() << '\n';
    os << to_json(verdict).dump() << '\n';
  });

  std::ostream& note = a.out.empty() ? err : out;
  note << "scan: " << records.size() << " records, " << verdict.invariant_pairs.size() << " invariant pairs, "
       << verdict.violations.size() << " violations -> " << (verdict.pass ? "PASS" : "FAIL") << '\n';
  return verdict.pass ? kOk : kFail;
}

// --- matrix ---------------------------------------------------------------

struct MatrixArgs {
  std::string n;
  bool check = false;
  std::string format = "csv";
  std::string out_dir = ".";
};

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  check_format(a.format);
  const auto Ns = parse_n_list(a.n);
  for (int N : Ns)
    if (N % 2 != 0) throw UsageError("N must be even (got " + std::to_string(N) + ")");

  bool ok = true;
  const fs::path dir(a.out_dir);
  for (int N : Ns) {
    const UnitaryMatrix m = matrix_F(N);
    const double unitarity = m.unitarity_deviation();
    const auto phases = m.eigenphases();
    const std::string stem = "matrix_N" + std::to_string(N);

    nlohmann::json report = {{"schema", kSchema}, {"type", "matrix"}, {"N", N}, {"unitarity_deviation", unitarity}};
    out << "N=" << N << " unitarity deviation " << sci(unitarity);
    if (a.check) {
      const auto cmp = matrix_vs_comb_check(ModelParams::make(N));
      report["matrix_vs_comb_deviation"] = cmp.deviation;
      report["global_phase"] = cmp.global_phase;
      out << ", matrix-vs-comb deviation " << sci(cmp.deviation);
      ok = ok && unitarity < 1e-12 && cmp.deviation < 1e-8;
    }

    if (a.format == "csv") {
      emit((dir / (stem + ".csv")).string(), out, [&](std::ostream& os) { write_matrix_csv(os, m.entries); });
      emit((dir / (stem + "_eigenphases.csv")).string(), out,
           [&](std::ostream& os) { write_eigenphases_csv(os, phases); });
      emit((dir / (stem + "_report.json")).string(), out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    } else {
      report["matrix"] = matrix_to_json(m.entries);
      report["eigenphases"] = phases;
      emit((dir / (stem + ".json")).string(), out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    }
    out << " -> " << resolve_output((dir / stem).string()).string() << (a.format == "csv" ? "*.csv" : ".json")
        << '\n';
  }
  return ok ? kOk : kFail;
}

// --- classical ------------------------------------------------------------

struct ClassicalArgs {
  bool escape = false;
  std::string n;
  std::string theta2;
  std::string k_range = "-8..8";
  std::string orbit;
  int steps = 10;
  bool use_float = false;
  std::string out;
};

PhasePoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--orbit must be written x,p");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

void write_float_orbit(std::ostream& os, PhasePointF pt, int steps) {
  os << "step,x,p,region\n";
  char buf[64];
  for (int i = 1; i <= steps; ++i) {
    pt = torus_baker(pt);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", pt.x, pt.p);
    os << i << ',' << buf << ',' << region_name(region_of(pt)) << '\n';
  }
}

int cmd_classical(const ClassicalArgs& a, std::ostream& out) {
  if (a.escape == !a.orbit.empty()) throw UsageError("classical needs exactly one of --escape or --orbit");
  if (a.escape) {
    if (a.n.empty() || a.theta2.empty()) throw UsageError("--escape needs --n and --theta2");
    const Rational theta2 = parse_rational(a.theta2);
    if (theta2 < Rational(0) || theta2 >= Rational(1)) throw UsageError("--theta2 must lie in [0, 1)");
    const auto [k_min, k_max] = parse_range(a.k_range);
    nlohmann::json reports = nlohmann::json::array();
    for (int N : parse_n_list(a.n)) reports.push_back(to_json(escape_check(N, theta2, k_min, k_max)));
    emit(a.out, out, [&](std::ostream& os) { os << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n'; });
    return kOk;
  }
  if (a.steps < 0) throw UsageError("--steps must be non-negative");
  const PhasePoint start = parse_point(a.orbit);
  if (start.x < Rational(0) || start.x >= Rational(1) || start.p < Rational(0) || start.p >= Rational(1))
    throw UsageError("--orbit point must lie in [0,1)^2");
  if (a.use_float) {
    emit(a.out, out, [&](std::ostream& os) {
      write_float_orbit(os, PhasePointF{to_double(start.x), to_double(start.p)}, a.steps);
    });
  } else {
    const auto rows = torus_orbit(start, a.steps);
    emit(a.out, out, [&](std::ostream& os) { write_orbit_csv(os, rows); });
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(unsigned threads, std::ostream& out) {
  AcceptanceOptions opt;
  opt.threads = std::max(1u, threads);
  bool all = true;
  run_acceptance(opt, [&](const CriterionResult& r) {
    out << format_result(r) << std::endl;
    all = all && r.pass;
  });
  out << "verdict: " << (all ? "PASS" : "FAIL") << '\n';
  return all ? kOk : kFail;
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> Ns;
  if (text.find("..") != std::string::npos) {
    const auto [lo, hi] = parse_range(text);
    for (auto n = lo; n <= hi; ++n) Ns.push_back(static_cast<int>(n));
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) Ns.push_back(static_cast<int>(parse_int(item)));
  }
  if (Ns.empty()) throw UsageError("--n is empty");
  for (int n : Ns)
    if (n < 1 || n > 4096) throw UsageError("N must lie in 1..4096 (got " + std::to_string(n) + ")");
  return Ns;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bakerlab: quantum baker map on the theta-torus"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "scan (N, theta) for fibers mapped into themselves");
  s->add_option("--n", scan.n, "N, a range a..b, or a list a,b,c")->required();
  s->add_option("--theta", scan.thetas, "theta as p/q,p/q (repeatable)");
  s->add_option("--theta-denom", scan.theta_denom, "all theta with denominators up to this bound")
      ->check(CLI::PositiveNumber);
  s->add_option("--tol", scan.tol, "invariance tolerance");
  s->add_option("--format", scan.format, "json or csv");
  s->add_option("--out", scan.out, "output file (default stdout)");
  s->add_option("--threads", scan.threads, "worker threads");

  MatrixArgs matrix;
  if (const char* dir = std::getenv("BAKERLAB_OUTPUT_DIR"); dir && *dir) matrix.out_dir = "";
  auto* m = app.add_subcommand("matrix", "matrix form of F on the periodic fiber (N even)");
  m->add_option("--n", matrix.n, "even N, or a list")->required();
  m->add_flag("--check", matrix.check, "compare with the comb propagator");
  m->add_option("--format", matrix.format, "csv or json");
  m->add_option("--out-dir", matrix.out_dir, "output directory");

  ClassicalArgs classical;
  auto* c = app.add_subcommand("classical", "classical covering map: orbits and lattice escape");
  c->add_flag("--escape", classical.escape, "test whether momentum centers stay on the lattice");
  c->add_option("--n", classical.n, "N, a range a..b, or a list");
  c->add_option("--theta2", classical.theta2, "theta2 as p/q");
  c->add_option("--k-range", classical.k_range, "k range a..b for the escape test");
  c->add_option("--orbit", classical.orbit, "start point x,p as p/q,p/q");
  c->add_option("--steps", classical.steps, "orbit length");
  c->add_flag("--float", classical.use_float, "iterate in double precision");
  c->add_option("--out", classical.out, "output file (default stdout)");

  unsigned verify_threads = 1;
  auto* v = app.add_subcommand("verify", "run the acceptance checks");
  v->add_option("--threads", verify_threads, "worker threads for the scan");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (s->parsed()) return cmd_scan(scan, out, err);
    if (m->parsed()) return cmd_matrix(matrix, out);
    if (c->parsed()) return cmd_classical(classical, out);
    return cmd_verify(verify_threads, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace bakerlab::cli
