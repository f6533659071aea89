#pragma once

// JSON and CSV encodings shared by the library and the CLI. Rationals are
// always written as "p/q" strings.

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "bakerlab/classical_cover.hpp"
#include "bakerlab/invariance_scan.hpp"
#include "bakerlab/propagator.hpp"
#include "bakerlab/theta_space.hpp"

namespace bakerlab {

inline constexpr const char* kSchema = "bakerlab/1";

nlohmann::json to_json(const Comb& c, Rep rep);
nlohmann::json to_json(const CombState& s);
/// Inverse of to_json(CombState). Parameters other than N come from `base`.
CombState comb_state_from_json(const nlohmann::json& j, const ModelParams& base = {});
nlohmann::json to_json(const FiberBasis& fb);

nlohmann::json to_json(const ScanRecord& r);
nlohmann::json to_json(const VerdictReport& v);
nlohmann::json to_json(const EscapeReport& e);
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);

/// Row-major, one "re,im" pair per cell; cells separated by commas, so a row
/// of an N x N matrix has 2N fields.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m);
void write_eigenphases_csv(std::ostream& out, const std::vector<double>& phases);
/// N,theta1,theta2,max_rx,max_ry,invariant
void write_scan_summary_csv(std::ostream& out, const std::vector<PairSummary>& rows);
/// step,x,p,region
void write_orbit_csv(std::ostream& out, const std::vector<OrbitRow>& rows);

}  // namespace bakerlab
