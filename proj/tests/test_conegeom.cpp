#include <doctest.h>

#include "oracles.hpp"
#include "weylgale/conegeom.hpp"

#include <random>

using namespace weylgale;

namespace {

PicClass minus_sum(const LatticeContext& c, long d) { return H(c).scaled(d) - sum_E(c); }

// Reference nef test: L.e >= 0 for every brute-force (-1)-class of degree <= dmax, plus h and L^2 >= 0.
bool nef_by_lines(const PicClass& L, long long dmax) {
  oracle::Vec v;
  for (const auto& q : L.coeffs()) v.push_back(q.get_num().get_si());
  if (oracle::pair(v, v) < 0 || v[0] < 0) return false;
  for (const auto& e : oracle::minus_one_classes(L.ctx().k, dmax))
    if (oracle::pair(v, e) < 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("conegeom") {
  TEST_CASE("enumeration below a threshold") {
    const auto S = make_context(2, 9);
    CHECK(enumerate_family_below(H(S).scaled(4) - sum_E(S), kLineFamily, 0).empty());
    const auto lines = enumerate_family_below(H(S), kLineFamily, 1);
    for (int i = 1; i <= 9; ++i) CHECK(std::find(lines.begin(), lines.end(), E(S, i)) != lines.end());
    const auto cubics = enumerate_family_below(minus_sum(S, 10), kCubicFamily, Rational(21, 2));
    CHECK(std::find(cubics.begin(), cubics.end(), H(S)) != cubics.end());
    CHECK_THROWS_AS(enumerate_family_below(H(S) - E(S, 1), kLineFamily, 1), UnboundedError);
    // inclusive threshold adds the classes sitting exactly on it
    const auto strict = enumerate_family_below(H(S), kLineFamily, 0);
    const auto incl = enumerate_family_below(H(S), kLineFamily, 0, true);
    CHECK(strict.empty());
    CHECK(incl.size() >= 9);
  }

  TEST_CASE("nef and ample tests") {
    const auto S = make_context(2, 9);
    CHECK(is_nef_Kneg(-canonical_class(S)));
    CHECK_FALSE(is_nef_Kneg(H(S) - E(S, 1).scaled(2)));
    CHECK(is_nef_Kneg(minus_sum(S, 6)));
    const auto T = make_context(2, 10);
    CHECK(is_ample_Kneg(H(T).scaled(Rational(17, 5)) - sum_E(T)));
    CHECK_FALSE(is_ample_Kneg(H(S)));
    CHECK(is_ample_Kneg(minus_sum(S, 4)));
    CHECK_THROWS_AS(is_ample_Kneg(canonical_class(S).scaled(-1) + canonical_class(S).scaled(2)), DomainError);
  }

  TEST_CASE("nef test against brute-force lines on del Pezzo surfaces") {
    std::mt19937 rng(21);
    for (int k : {5, 6, 7}) {
      const auto S = make_context(2, k);
      std::uniform_int_distribution<int> m(0, 4), d(2, 9);
      for (int t = 0; t < 25; ++t) {
        std::vector<Rational> c{d(rng)};
        for (int i = 0; i < k; ++i) c.emplace_back(m(rng));
        const PicClass L(S, c);
        if (coble_pair(L, canonical_class(S)) >= 0 || square(L) <= 0) continue;
        CHECK(is_nef_Kneg(L) == nef_by_lines(L, 8));
      }
    }
  }

  TEST_CASE("boundary classification") {
    const auto S = make_context(2, 9);
    CHECK(classify_nef_boundary(H(S) - E(S, 1)).type == NefBoundaryType::ConicFiber);
    CHECK(classify_nef_boundary(-canonical_class(S)).type == NefBoundaryType::AntiCanonicalRay);
    CHECK(classify_nef_boundary(minus_sum(S, 4)).type == NefBoundaryType::Ample);
    const auto b = classify_nef_boundary(minus_sum(S, 4) + E(S, 1));
    CHECK(b.type == NefBoundaryType::PullbackOfAmple);
    CHECK(b.contracted == std::vector<PicClass>{E(S, 1)});
    CHECK_THROWS_AS(classify_nef_boundary(H(S) - E(S, 1).scaled(2)), DomainError);
  }

  TEST_CASE("effective decompositions") {
    const auto S = make_context(2, 9);
    const auto d1 = decompose_effective(-canonical_class(S));
    CHECK(d1.l == 1);
    CHECK(d1.parts.empty());
    const auto d2 = decompose_effective(E(S, 1));
    CHECK(d2.l == 0);
    CHECK(d2.parts == std::vector<PicClass>{E(S, 1)});
    const auto S2 = surface_context(2);
    const auto d3 = decompose_effective(H(S2) - E(S2, 1));
    CHECK(d3.sum() == H(S2) - E(S2, 1));
    std::multiset<PicClass> parts(d3.parts.begin(), d3.parts.end());
    CHECK(parts == std::multiset<PicClass>{E(S2, 2), H(S2) - E(S2, 1) - E(S2, 2)});
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> m(0, 5), d(3, 14);
    for (int t = 0; t < 40; ++t) {
      std::vector<Rational> c{d(rng)};
      for (int i = 0; i < 9; ++i) c.emplace_back(m(rng));
      const PicClass D(S, c);
      try {
        const auto dec = decompose_effective(D);
        CHECK(dec.sum() == D);
        for (const auto& p : dec.parts) CHECK(orbit_classify(p) == OrbitType::Line);
      } catch (const BoundError&) {
        // D.A < 0 for an ample A: D is not effective
      }
    }
  }

  TEST_CASE("dual decompositions") {
    const auto S = make_context(2, 9);
    const auto a = decompose_dual_E(-canonical_class(S));
    CHECK(a.a == 1);
    CHECK(a.lines.empty());
    CHECK(a.cubicparts.empty());
    const auto S2 = surface_context(2);
    const auto b = decompose_dual_E(H(S2));
    CHECK(b.sum() == H(S2));
    CHECK(b.a == 0);
    std::multiset<PicClass> lines(b.lines.begin(), b.lines.end());
    CHECK(lines == std::multiset<PicClass>{E(S2, 1), E(S2, 2), H(S2) - E(S2, 1) - E(S2, 2)});
    const auto c = decompose_dual_E(minus_sum(S, 5));
    CHECK(c.sum() == minus_sum(S, 5));
    CHECK_THROWS_AS(decompose_dual_E(H(S) - E(S, 1).scaled(3)), HypothesisError);
  }

  TEST_CASE("cone membership") {
    const auto S = make_context(2, 9);
    CHECK(cone_membership(minus_sum(S, 6), ConeKind::Pi).member);
    const auto m = cone_membership(minus_sum(S, 10), ConeKind::E);
    CHECK_FALSE(m.member);
    REQUIRE(m.certificate);
    CHECK(*m.certificate == H(S));
    CHECK(m.violated_constraint == "2B+K>=0");
    const PicClass near = (-canonical_class(S)).scaled(100) + H(S);
    CHECK(cone_membership(near, ConeKind::E).member);
    CHECK(cone_membership(near, ConeKind::NefKneg).member);
    const auto out = cone_membership(H(S).scaled(5) - E(S, 1).scaled(3) - E(S, 2).scaled(3), ConeKind::NefKneg);
    CHECK_FALSE(out.member);
    CHECK(out.violated_constraint == "e>=0");
    CHECK_THROWS_AS(cone_membership(H(S) - E(S, 1), ConeKind::E), BoundaryUndecidable);
  }

  TEST_CASE("noether inequality on rational classes") {
    const auto r9 = noether_check(8, 9);
    CHECK(r9.violations == 0);
    CHECK(r9.counts[0] > 0);
    const auto r10 = noether_check(6, 10);
    CHECK(r10.violations == 0);
  }

  TEST_CASE("orbit membership helpers") {
    const auto S = make_context(2, 9);
    CHECK(is_orbit_line(H(S) - E(S, 1) - E(S, 2)));
    CHECK(is_orbit_conic(H(S) - E(S, 3)));
    CHECK(is_orbit_cubic(H(S)));
    CHECK_FALSE(is_orbit_line(H(S)));
  }
}
