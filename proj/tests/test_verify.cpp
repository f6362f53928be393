#include <stdexcept>

#include "mergecount/verify.hpp"
#include "support.hpp"

using namespace mergecount;

TEST_CASE("every suite passes on a small sweep") {
  for (std::string_view suite : kSuites) {
    CAPTURE(suite);
    auto results = run_suite(suite, {300, 32});
    REQUIRE_FALSE(results.empty());
    for (const CheckResult& r : results) {
      CAPTURE(r.name);
      CHECK(r.passed());
      CHECK(r.cases > 0);
    }
  }
}

TEST_CASE("all runs the suites in a fixed order") {
  auto everything = run_suite("all", {64, 8});
  std::vector<std::string> names;
  for (std::string_view suite : kSuites) {
    for (const auto& r : run_suite(suite, {64, 8})) names.push_back(r.name);
  }
  REQUIRE(everything.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(everything[i].name == names[i]);
}

TEST_CASE("run_suite rejects bad arguments") {
  CHECK_FALSE(is_known_suite("bogus"));
  CHECK(is_known_suite("all"));
  CHECK_THROWS_AS(run_suite("bogus", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("formulas", {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("identities", {10, 0}), std::invalid_argument);
}
