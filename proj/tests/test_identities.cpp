#include <catch2/catch_amalgamated.hpp>

#include "eulergl/identities.hpp"

using namespace eulergl;

namespace {

void expect_all_pass(const std::vector<IdentityReport>& reports) {
  REQUIRE(!reports.empty());
  for (const auto& rep : reports) {
    INFO(rep.to_string());
    CHECK(rep.pass);
  }
}

}  // namespace

TEST_CASE("catalog names resolve") {
  CHECK(identity_names().size() == 17);
  CHECK_THROWS_AS(verify_identity("no_such_identity"), domain_error);
}

TEST_CASE("single-point invocations") {
  IdentityParams p;
  p.r = 3;
  p.order = 10;
  auto rep = verify_identity("thm_recursion", p);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].pass);

  IdentityParams d;
  d.q = Int(-3);
  d.r = 3;
  d.order = 12;
  auto div = verify_identity("p_div_2", d);
  REQUIRE(div.size() == 1);
  CHECK(div[0].pass);
  CHECK(div[0].params.find("divisor=16") != std::string::npos);

  IdentityParams t;
  t.p = 3;
  t.s = 1;
  t.e = 0;
  t.r = 2;
  t.order = 8;
  expect_all_pass(verify_identity("p_odd_twist", t));
}

TEST_CASE("reports carry the first failing coefficient") {
  IdentityReport rep{"probe", ""};
  IntSeries a = IntSeries::one(4);
  IntSeries b = IntSeries::one(4);
  b.at(3) = 7;
  detail::check_series_equal(rep, a, b);
  CHECK(!rep.pass);
  CHECK(rep.first_fail_index == 3);
  CHECK(rep.lhs == "0");
  CHECK(rep.rhs == "7");
}

TEST_CASE("polynomial identities") {
  expect_all_pass(verify_identity("thm_recursion"));
  expect_all_pass(verify_identity("div_qm1"));
  expect_all_pass(verify_identity("div_qpow"));
}

TEST_CASE("transform equivalence") {
  expect_all_pass(verify_identity("transform_equiv"));
}

TEST_CASE("2-primary identities") {
  expect_all_pass(verify_identity("p_closed_2"));
  expect_all_pass(verify_identity("p_cor_frp2"));
  expect_all_pass(verify_identity("p_div_2"));
  expect_all_pass(verify_identity("p_r2_partition"));
}

TEST_CASE("helper series identities") {
  expect_all_pass(verify_identity("qp_mod_p"));
  expect_all_pass(verify_identity("gp_product"));
  expect_all_pass(verify_identity("pp_functional"));
  expect_all_pass(verify_identity("log_lemma"));
}

TEST_CASE("odd prime identities") {
  expect_all_pass(verify_identity("p_odd_power"));
  expect_all_pass(verify_identity("p_odd_apd"));
  expect_all_pass(verify_identity("p_odd_twist"));
  expect_all_pass(verify_identity("example_p3"));
  expect_all_pass(verify_identity("example_p5"));
}
