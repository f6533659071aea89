#include "bakerlab/serialize.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bakerlab {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json to_json(const Comb& c, Rep rep) {
  return {{"spacing", format_rational(c.spacing)},
          {"offset", format_rational(c.offset)},
          {"step_phase", format_rational(c.step_phase)},
          {"rep", rep_name(rep)},
          {"amp", {c.amplitude.real(), c.amplitude.imag()}}};
}

json to_json(const CombState& s) {
  json terms = json::array();
  for (const auto& c : s.terms()) terms.push_back(to_json(c, s.rep()));
  return {{"schema", kSchema}, {"N", s.N()}, {"rep", rep_name(s.rep())}, {"terms", terms}};
}

CombState comb_state_from_json(const json& j, const ModelParams& base) {
  ModelParams params = ModelParams::make(j.at("N").get<int>(), base.amp_epsilon, base.kernel_tol);
  const auto rep_of = [](const std::string& r) {
    if (r == "x") return Rep::position;
    if (r == "p") return Rep::momentum;
    throw std::invalid_argument("rep must be \"x\" or \"p\"");
  };
  Rep rep = rep_of(j.value("rep", std::string("x")));
  std::vector<Comb> terms;
  for (const auto& t : j.at("terms")) {
    if (rep_of(t.at("rep").get<std::string>()) != rep)
      throw std::invalid_argument("mixed-rep term lists are not allowed");
    const auto& amp = t.at("amp");
    terms.push_back(Comb{parse_rational(t.at("spacing").get<std::string>()),
                         parse_rational(t.at("offset").get<std::string>()),
                         parse_rational(t.at("step_phase").get<std::string>()),
                         Complex(amp.at(0).get<double>(), amp.at(1).get<double>())});
  }
  return CombState(params, rep, std::move(terms));
}

json to_json(const FiberBasis& fb) {
  json basis = json::array();
  for (const auto& s : fb.basis) basis.push_back(to_json(s));
  json out = {{"schema", kSchema},
              {"N", fb.params.N},
              {"theta", {format_rational(fb.theta.theta1), format_rational(fb.theta.theta2)}},
              {"basis", basis}};
  if (!fb.momentum.empty()) {
    json mom = json::array();
    for (const auto& s : fb.momentum) mom.push_back(to_json(s));
    out["momentum_basis"] = mom;
  }
  return out;
}

json to_json(const ScanRecord& r) {
  return {{"schema", kSchema},
          {"type", "record"},
          {"N", r.N},
          {"theta", {format_rational(r.theta.theta1), format_rational(r.theta.theta2)}},
          {"m", r.m},
          {"rx", r.rx},
          {"ry", r.ry},
          {"tol", r.tol},
          {"invariant", r.invariant}};
}

json to_json(const VerdictReport& v) {
  const auto pair_json = [](const PairSummary& p) {
    return json{{"N", p.N},
                {"theta", {format_rational(p.theta.theta1), format_rational(p.theta.theta2)}},
                {"max_rx", p.max_rx},
                {"max_ry", p.max_ry},
                {"invariant", p.invariant}};
  };
  json inv = json::array();
  for (const auto& p : v.invariant_pairs) inv.push_back(pair_json(p));
  json bad = json::array();
  for (const auto& viol : v.violations) {
    json e = pair_json(viol.pair);
    e["reason"] = viol.reason;
    bad.push_back(e);
  }
  return {{"schema", kSchema},
          {"type", "verdict"},
          {"verdict", v.pass ? "PASS" : "FAIL"},
          {"invariant_pairs", inv},
          {"violations", bad}};
}

json to_json(const EscapeReport& e) {
  json fams = json::array();
  for (const auto& f : e.families) {
    fams.push_back({{"n", f.n}, {"tested", f.tested}, {"escaped", f.escaped}, {"fraction", f.fraction()}});
  }
  return {{"schema", kSchema},
          {"type", "escape"},
          {"N", e.N},
          {"theta2", format_rational(e.theta2)},
          {"k_range", {e.k_min, e.k_max}},
          {"fraction", e.fraction},
          {"families", fams}};
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << num(m(i, j).real()) << ',' << num(m(i, j).imag());
    }
    out << '\n';
  }
}

void write_eigenphases_csv(std::ostream& out, const std::vector<double>& phases) {
  out << "index,phase\n";
  for (std::size_t i = 0; i < phases.size(); ++i) out << i << ',' << num(phases[i]) << '\n';
}

void write_scan_summary_csv(std::ostream& out, const std::vector<PairSummary>& rows) {
  out << "N,theta1,theta2,max_rx,max_ry,invariant\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_rational(r.theta.theta1) << ',' << format_rational(r.theta.theta2) << ','
        << num(r.max_rx) << ',' << num(r.max_ry) << ',' << (r.invariant ? "true" : "false") << '\n';
  }
}

void write_orbit_csv(std::ostream& out, const std::vector<OrbitRow>& rows) {
  out << "step,x,p,region\n";
  for (const auto& r : rows) {
    out << r.step << ',' << format_rational(r.point.x) << ',' << format_rational(r.point.p) << ','
        << region_name(r.region) << '\n';
  }
}

}  // namespace bakerlab
