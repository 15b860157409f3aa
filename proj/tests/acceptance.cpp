#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "ramcalc/acceptance.hpp"

using namespace ramcalc;

// Runs the release gate and mirrors each verdict as an assertion, so the
// printed table and the test outcome can never drift apart.
TEST_CASE("release gate") {
  std::vector<CriterionResult> rs = run_acceptance(std::cout);
  REQUIRE(rs.size() == 11);
  for (const CriterionResult& r : rs) {
    INFO("C" << r.id << " " << r.label << " -- " << r.detail);
    CHECK(r.passed);
  }
}
