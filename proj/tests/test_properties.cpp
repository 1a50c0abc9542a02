#include <doctest.h>

#include "property_suites.hpp"

using namespace mical;

extern unsigned long long g_test_seed;

namespace {
void expect_clean(const suites::Tally& t, int at_least) {
  CHECK(t.cases >= at_least);
  CHECK(t.violations == 0);
}
}  // namespace

TEST_CASE("closure laws for Borel-type ideals") {
  expect_clean(suites::closure_laws_borel(g_test_seed + 10, 1000), 1000);
}

TEST_CASE("closure laws for strong-Borel-type ideals") {
  expect_clean(suites::closure_laws_sbt(g_test_seed + 11, 1000), 1000);
}

TEST_CASE("stability of truncations at the regularity") {
  expect_clean(suites::truncation_stability(g_test_seed + 12, 1000), 1000);
}

TEST_CASE("regularity inequalities") {
  expect_clean(suites::regularity_inequalities(g_test_seed + 13, 1000), 1000);
}

TEST_CASE("containments between principal d-fixed ideals") {
  expect_clean(suites::principal_containments(g_test_seed + 14, 1000), 1000);
}

TEST_CASE("d-fixed ideals close under sums and products") {
  expect_clean(suites::dfixed_closure_laws(g_test_seed + 15, 1000), 1000);
}

TEST_CASE("classification hierarchy") {
  expect_clean(suites::classification_hierarchy(g_test_seed + 16, 1000), 1000);
}

TEST_CASE("linear bound on the closed-form regularity") {
  expect_clean(suites::pardue_bound(g_test_seed + 17, 1000), 1000);
}

TEST_CASE("regularity bound for power-generated d-fixed ideals") {
  expect_clean(suites::powers_regularity_bound(g_test_seed + 18, 1000), 1000);
}

TEST_CASE("colon inclusion chain on the three-power example") {
  suites::Tally t = suites::colon_inclusion_chain();
  CHECK(t.cases == 9);
  CHECK(t.violations == 0);
}
