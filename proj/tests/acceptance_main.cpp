// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <iostream>

#include "bakerlab/acceptance.hpp"

int main() {
  bool all = true;
  bakerlab::run_acceptance({}, [&](const bakerlab::CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.pass;
  });
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
