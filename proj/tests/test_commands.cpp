#include <catch_amalgamated.hpp>

#include <string>

#include "coxstat/commands.hpp"

using namespace coxstat;
using namespace coxstat::cli;

TEST_CASE("integer list parsing", "[cli]") {
  CHECK(parse_int_list("5 -4 -3 1 -2") == std::vector<int>{5, -4, -3, 1, -2});
  CHECK(parse_int_list("1,1,-3, -2 ,3\n") == std::vector<int>{1, 1, -3, -2, 3});
  CHECK(parse_int_list("(1,+2)") == std::vector<int>{1, 2});
  CHECK_THROWS_WITH(parse_int_list("1 x 3"), Catch::Matchers::ContainsSubstring("token 'x'"));
  CHECK_THROWS_WITH(parse_int_list("1 2-3"), Catch::Matchers::ContainsSubstring("token '2-3'"));
  CHECK_THROWS_AS(parse_int_list("  "), DomainError);
}

TEST_CASE("element parsing", "[cli]") {
  CHECK(parse_element(Family::B, "5 -4 -3 1 -2") == SignedPermutation({5, -4, -3, 1, -2}));
  CHECK_THROWS_WITH(parse_element(Family::A, "1 -2"), Catch::Matchers::ContainsSubstring("'-2'"));
  CHECK_THROWS_AS(parse_element(Family::D, "-1 2"), DomainError);
  CHECK_THROWS_AS(parse_element(Family::B, "1 1"), DomainError);
}

TEST_CASE("stats command", "[cli]") {
  const json b = cmd_stats(Family::B, "5 -4 -3 1 -2");
  CHECK(b["family"] == "B");
  CHECK(b["n"] == 5);
  CHECK(b["status"] == "ok");
  CHECK(b["outputs"]["sor_B"] == 16);
  CHECK(b["outputs"]["factorization"] == json::parse("[[-1,2],[-3,3],[-2,4],[1,5]]"));

  const json a = cmd_stats(Family::A, "1 2 3");
  CHECK(a["outputs"]["inv"] == 0);
  CHECK(a["outputs"]["sor"] == 0);
  CHECK(a["outputs"]["cyc"] == 3);
  CHECK(a["outputs"]["Lmap"] == json::parse("[1,2,3]"));
  CHECK_FALSE(a["outputs"].contains("inv_B"));

  const json d = cmd_stats(Family::D, "2 -4 5 1 -3");
  CHECK(d["outputs"]["inv_D"] == 11);
  CHECK(d["outputs"]["nmin_D"] == 4);
  CHECK(d["outputs"].contains("inv_B"));
}

TEST_CASE("code command", "[cli]") {
  CHECK(cmd_code(Direction::encode, "bcode", Family::B, "3 -1 -6 -5 4 2")["outputs"]["code"] ==
        json::parse("[1,-1,1,-4,-4,-3]"));
  CHECK(cmd_code(Direction::decode, "acode", Family::B, "1 1 -3 -2 3")["outputs"]["perm"] ==
        json::parse("[2,-4,5,1,-3]"));
  CHECK(cmd_code(Direction::encode, "lehmer", Family::A, "1 2 3")["outputs"]["code"] == json::parse("[1,2,3]"));
  CHECK(cmd_code(Direction::encode, "bcode", Family::A, "2 4 5 1 3")["outputs"]["code"] ==
        json::parse("[1,1,3,2,3]"));
  CHECK(cmd_code(Direction::encode, "ecode", Family::D, "2 -4 5 1 -3")["outputs"]["code"] ==
        json::parse("[1,1,-3,-2,3]"));
  CHECK(cmd_code(Direction::decode, "fcode", Family::D, "1 1 -3 -2 3")["outputs"]["perm"] ==
        json::parse("[-2,-4,5,-1,-3]"));
  CHECK_THROWS_AS(cmd_code(Direction::decode, "acode", Family::B, "1 3"), DomainError);
  CHECK_THROWS_AS(cmd_code(Direction::encode, "ecode", Family::B, "1 2"), DomainError);
  CHECK_THROWS_AS(cmd_code(Direction::encode, "lehmer", Family::D, "1 2"), DomainError);
  CHECK_THROWS_AS(cmd_code(Direction::encode, "zcode", Family::A, "1 2"), DomainError);
}

TEST_CASE("map command", "[cli]") {
  const json r = cmd_map(Bijection::rho, false, Family::D, "2 -4 5 1 -3");
  CHECK(r["outputs"]["perm"] == json::parse("[-2,-4,5,-1,-3]"));
  CHECK(r["outputs"]["source_statistics"]["inv_D"] == 11);
  CHECK(r["outputs"]["source_statistics"]["nmin_D"] == 4);
  CHECK(r["outputs"]["image_statistics"]["sor_D"] == 11);
  CHECK(r["outputs"]["image_statistics"]["ltilde'_D"] == 4);

  CHECK(cmd_map(Bijection::psi, false, Family::B, "2 -4 5 1 -3")["outputs"]["perm"] ==
        json::parse("[2,-4,5,-1,-3]"));

  const json forward = cmd_map(Bijection::phi, false, Family::A, "3 1 5 2 4");
  const json back = cmd_map(Bijection::phi, true, Family::A, forward["outputs"]["perm"].dump());
  CHECK(back["outputs"]["perm"] == json::parse("[3,1,5,2,4]"));
  CHECK(forward["outputs"]["source_statistics"] == back["outputs"]["source_statistics"]);

  CHECK_THROWS_AS(cmd_map(Bijection::psi, false, Family::D, "1 2"), DomainError);
}

TEST_CASE("verify document", "[cli]") {
  const json doc = report_json(run_check("type-d-bivariate", 2));
  CHECK(doc["status"] == "verified");
  CHECK(doc["outputs"]["elements"] == 4);
  bool anchored = false;
  for (const auto& p : doc["outputs"]["polynomials"]) anchored |= p["text"] == "1 + 2*q*t + q^2*t";
  CHECK(anchored);

  CheckReport failing;
  failing.check = "type-a-gf";
  failing.group = {Family::A, 2};
  failing.fail("q*t: got 2, expected 1");
  const json bad = report_json(failing);
  CHECK(bad["status"] == "falsified");
  CHECK(bad["outputs"]["failures"].size() == 1);
}

TEST_CASE("table command", "[cli]") {
  BivariatePolynomial p;
  const json doc = cmd_table(Family::D, Statistic::inv_D, Statistic::nmin_D, 2, 1, &p);
  CHECK(csv_table(p) == "q,t,count\n0,0,1\n1,1,2\n2,1,1\n");
  CHECK(doc["outputs"]["polynomial"]["terms"].size() == 3);

  cmd_table(Family::A, Statistic::inv, Statistic::rl_min, 1, 1, &p);
  CHECK(csv_table(p) == "q,t,count\n0,1,1\n");

  BivariatePolynomial sor;
  BivariatePolynomial inv;
  cmd_table(Family::B, Statistic::sor_B, Statistic::reflection_length_B, 2, 1, &sor);
  cmd_table(Family::B, Statistic::inv_B, Statistic::nmin_B, 2, 2, &inv);
  CHECK(csv_table(sor) == csv_table(inv));

  CHECK_THROWS_AS(cmd_table(Family::A, Statistic::inv_D, Statistic::inv, 3, 1), DomainError);
}

TEST_CASE("documents are deterministic", "[cli]") {
  CHECK(cmd_stats(Family::B, "2 -4 5 1 -3").dump() == cmd_stats(Family::B, "2,-4,5,1,-3").dump());
  CHECK(cmd_table(Family::B, Statistic::inv_B, Statistic::nmin_B, 3, 1).dump() ==
        cmd_table(Family::B, Statistic::inv_B, Statistic::nmin_B, 3, 3).dump());
}
