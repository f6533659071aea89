#include <doctest.h>

#include <random>
#include <sstream>

#include "bakerlab/random_states.hpp"
#include "bakerlab/serialize.hpp"

using namespace bakerlab;

TEST_SUITE("serialize") {

TEST_CASE("comb states round trip through JSON") {
  std::mt19937_64 rng(40);
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = ModelParams::make(1 + i % 8);
    CombState s = random_state(rng, p);
    if (i % 2) s = fourier_comb(s);
    const auto j = to_json(s);
    CHECK(j.at("schema") == "bakerlab/1");
    const CombState back = comb_state_from_json(nlohmann::json::parse(j.dump()), p);
    CHECK(back.rep() == s.rep());
    CHECK(back.N() == s.N());
    CHECK(max_term_difference(back, s) == 0.0);
  }
}

TEST_CASE("rationals are written as p/q strings") {
  const CombState s(ModelParams::make(3), Rep::position, {Comb{Rational(3, 2), Rational(1, 4), Rational(2, 3), Complex(1, -1)}});
  const auto t = to_json(s).at("terms").at(0);
  CHECK(t.at("spacing") == "3/2");
  CHECK(t.at("offset") == "1/4");
  CHECK(t.at("step_phase") == "2/3");
  CHECK(t.at("rep") == "x");
  CHECK(t.at("amp").at(1).get<double>() == -1.0);
}

TEST_CASE("malformed JSON input is rejected") {
  const auto good = to_json(position_basis(ModelParams::make(2), Theta{}, 0));
  auto bad_rep = good;
  bad_rep["rep"] = "q";
  CHECK_THROWS(comb_state_from_json(bad_rep));
  auto decimal = good;
  decimal["terms"][0]["offset"] = "0.5";
  CHECK_THROWS(comb_state_from_json(decimal));
  auto mixed = good;
  mixed["terms"][0]["rep"] = "p";
  CHECK_THROWS(comb_state_from_json(mixed));
}

TEST_CASE("fiber basis and scan records") {
  const FiberBasis fb = build_fiber(ModelParams::make(2), Theta{Rational(1, 2), Rational(0)}, true);
  const auto j = to_json(fb);
  CHECK(j.at("basis").size() == 2);
  CHECK(j.at("momentum_basis").size() == 2);
  CHECK(j.at("theta").at(0) == "1/2");

  const auto records = scan_theta({2}, {Theta{}});
  const auto r = to_json(records.at(0));
  CHECK(r.at("type") == "record");
  CHECK(r.at("invariant") == true);
  const auto v = to_json(theorem_verdict(records));
  CHECK(v.at("verdict") == "PASS");
  CHECK(v.at("schema") == "bakerlab/1");
}

TEST_CASE("CSV layouts") {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(1, 0), Complex(0, 2), Complex(-0.5, 0.25), Complex(0, 0);
  std::ostringstream os;
  write_matrix_csv(os, m);
  CHECK(os.str() == "1,0,0,2\n-0.5,0.25,0,0\n");

  std::ostringstream ph;
  write_eigenphases_csv(ph, {-1.5, 0.25});
  CHECK(ph.str() == "index,phase\n0,-1.5\n1,0.25\n");

  std::ostringstream orbit;
  write_orbit_csv(orbit, torus_orbit({Rational(1, 4), Rational(1, 2)}, 2));
  CHECK(orbit.str() == "step,x,p,region\n1,1/2,1/4,r:e_p\n2,0,5/8,l:e_p\n");

  std::ostringstream summary;
  write_scan_summary_csv(summary, summarize(scan_theta({2}, {Theta{}})));
  CHECK(summary.str() == "N,theta1,theta2,max_rx,max_ry,invariant\n2,0,0,0,0,true\n");
}

TEST_CASE("escape report") {
  const auto j = to_json(escape_check(2, Rational(1, 2), -2, 2));
  CHECK(j.at("type") == "escape");
  CHECK(j.at("theta2") == "1/2");
  CHECK(j.at("families").size() == 2);
  CHECK(j.at("fraction").get<double>() > 0.0);
}

}
