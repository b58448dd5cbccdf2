#include <doctest.h>

#include "oracles.hpp"
#include "weylgale/galedual.hpp"
#include "weylgale/json_io.hpp"

#include <fstream>
#include <random>

using namespace weylgale;

namespace {

PointConfiguration rows(std::vector<std::vector<Rational>> r) { return PointConfiguration::from_rows(r); }

oracle::QMat qrows(const PointConfiguration& c) {
  oracle::QMat A;
  for (const auto& r : c.coords.to_rows()) A.push_back(r);
  return A;
}

Json golden() {
  std::ifstream in(std::string(WEYLGALE_TEST_DIR) + "/golden/gale_k6.json");
  return Json::parse(in);
}

}  // namespace

TEST_SUITE("galedual") {
  TEST_CASE("general position") {
    CHECK(general_position(rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})));
    CHECK_FALSE(general_position(rows({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}})));
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 20; ++t) {
      std::vector<std::vector<Rational>> r(9, std::vector<Rational>(3));
      for (auto& row : r)
        for (auto& x : row) x = c(rng);
      oracle::QMat q(r.begin(), r.end());
      CHECK(general_position(rows(r)) == oracle::rows_in_general_position(q));
    }
  }

  TEST_CASE("golden dual on six points") {
    const Json g = golden();
    const auto A = configuration_from_json(g["input"]);
    const auto want = configuration_from_json(g["dual"]);
    const auto B = gale_dual(A);
    CHECK(B.coords.cols() == 3);
    CHECK(duality_product(A, B).is_zero());
    CHECK(oracle::projectively_equivalent(qrows(B), qrows(want)));
    CHECK(projective_equivalent(B, want));
    CHECK(dual_round_trip(A));
  }

  TEST_CASE("round trips and shapes") {
    CHECK(dual_round_trip(rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}})));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-7, 7);
    int done = 0;
    while (done < 5) {
      std::vector<std::vector<Rational>> r(9, std::vector<Rational>(3));
      for (auto& row : r)
        for (auto& x : row) x = Rational(c(rng), 1 + (c(rng) + 7) % 3);
      const auto A = rows(r);
      if (!general_position(A)) continue;
      ++done;
      const auto B = gale_dual(A);
      CHECK(B.coords.cols() == 9 - 2 - 1);
      CHECK(duality_product(A, B).is_zero());
      CHECK(dual_round_trip(A));
    }
    CHECK_THROWS_AS(gale_dual(rows({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 2, 0}})), DegenerateError);
  }

  TEST_CASE("projective equivalence") {
    const auto A = configuration_from_json(golden()["input"]);
    CHECK(projective_equivalent(A, A));
    auto r = A.coords.to_rows();
    const int scale[] = {2, 3, 5, 7, 11, 13};
    for (size_t i = 0; i < r.size(); ++i)
      for (auto& x : r[i]) x *= scale[i];
    CHECK(projective_equivalent(A, rows(r)));
    auto other = A.coords.to_rows();
    other[5] = {1, 5, 2};
    const auto B = rows(other);
    CHECK_FALSE(projective_equivalent(A, B));
    CHECK_FALSE(oracle::projectively_equivalent(qrows(A), qrows(B)));
    CHECK_FALSE(projective_normal_form(A).coords == projective_normal_form(B).coords);
  }

  TEST_CASE("csv import") {
    const auto c = parse_csv_configuration("1,0,0\n0,1,0\n0,0,1\n1,1,1\n1,2,3\n1,4,9\n");
    CHECK(c.k == 6);
    CHECK(c.s == 2);
    CHECK(projective_equivalent(c, configuration_from_json(golden()["input"])));
  }
}
