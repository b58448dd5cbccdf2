#include "weylgale/verify.hpp"

#include "weylgale/conegeom.hpp"
#include "weylgale/galedual.hpp"
#include "weylgale/morimap.hpp"
#include "weylgale/wallscan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace weylgale {
namespace {

using Check = std::function<bool(std::string&)>;

WeylWord random_word(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 20), gen(0, k - 1);
  WeylWord w(static_cast<size_t>(len(rng)));
  for (auto& g : w) g = gen(rng);
  return w;
}

PicClass random_class(const LatticeContext& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-6, 6);
  std::vector<Rational> v;
  for (int i = 0; i <= ctx.k; ++i) v.emplace_back(c(rng));
  return PicClass(ctx, v);
}

bool weyl_relations(const SuiteOptions& opt, std::string& detail) {
  std::mt19937 rng(opt.seed);
  for (auto [n, k] : {std::pair{2, 9}, {4, 8}, {5, 9}}) {
    const auto ctx = make_context(n, k);
    const auto rep = verify_relations(ctx);
    if (!rep.all_pass || !rep.fixes_K) {
      detail = "relations fail on (" + std::to_string(n) + "," + std::to_string(k) + ")";
      return false;
    }
    for (int t = 0; t < opt.trials; ++t) {
      const WeylWord w = random_word(k, rng);
      const PicClass a = random_class(ctx, rng), b = random_class(ctx, rng);
      if (coble_pair(apply_word(w, a), apply_word(w, b)) != coble_pair(a, b)) {
        detail = "pairing not preserved on (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return false;
      }
    }
  }
  return true;
}

bool orbit_counts(const SuiteOptions&, std::string& detail) {
  const long expected[] = {10, 16, 27, 56, 240};
  for (int k = 4; k <= 8; ++k) {
    const auto ctx = make_context(2, k);
    const auto K = canonical_class(ctx);
    const auto orb = orbit_enumerate(E(ctx, 1), 6);
    detail += (detail.empty() ? "" : " ") + std::to_string(orb.size());
    if (static_cast<long>(orb.size()) != expected[k - 4]) return false;
    for (const auto& e : orb)
      if (square(e) != -1 || coble_pair(e, K) != -1 || orbit_classify(e) != OrbitType::Line) return false;
  }
  return true;
}

std::set<PicClass> wall_classes(const std::vector<Wall>& ws) {
  std::set<PicClass> s;
  for (const auto& w : ws) s.insert(w.D);
  return s;
}

bool scan_tables(const SuiteOptions&, std::string& detail) {
  struct Case {
    int k;
    Rational a0, a1;
    std::vector<long> at, mult;
  };
  const Case cases[] = {{9, Rational(13, 2), Rational(3, 2), {6, 4, 2}, {1, 9, 36}},
                        {8, Rational(11, 2), Rational(1, 2), {5, 3, 1}, {1, 8, 28}}};
  for (const auto& c : cases) {
    const auto ctx = make_context(2, c.k);
    const auto scan = segment_scan(L_a(ctx, c.a0), L_a(ctx, c.a1));
    if (scan.crossings.size() != 3) {
      detail = "k=" + std::to_string(c.k) + ": " + std::to_string(scan.crossings.size()) + " crossings";
      return false;
    }
    for (size_t i = 0; i < 3; ++i) {
      const auto& x = scan.crossings[i];
      const Rational a = c.a0 + x.t * (c.a1 - c.a0);
      if (a != c.at[i] || static_cast<long>(x.walls.size()) != c.mult[i]) {
        detail = "k=" + std::to_string(c.k) + " crossing at a=" + to_string(a);
        return false;
      }
      std::set<PicClass> want;
      const PicClass h = H(ctx);
      for (int p = 1; p <= c.k; ++p) {
        if (i == 0) want.insert(h);
        if (i == 1) want.insert(h - E(ctx, p));
        if (i == 2)
          for (int q = p + 1; q <= c.k; ++q) want.insert(h - E(ctx, p) - E(ctx, q));
      }
      if (wall_classes(x.walls) != want) {
        detail = "unexpected wall classes at a=" + to_string(a);
        return false;
      }
    }
  }
  return true;
}

bool c0_census(const SuiteOptions&, std::string& detail) {
  for (int n : {4, 5, 7}) {
    const auto ctx = make_context(2, n + 4);
    const Chamber ch = chamber_C0(ctx);
    long conics = 0, lines = 0;
    for (const auto& [w, s] : ch.known_walls) {
      if (w.square == 0 && s == 1) ++conics;
      else if (w.square == -1 && s == -1) ++lines;
      else {
        detail = "unexpected facet " + to_string(w);
        return false;
      }
    }
    detail += "n=" + std::to_string(n) + ":" + std::to_string(conics) + "+" + std::to_string(lines) + " ";
    if (conics != n + 4 || lines != (n + 4) * (n + 3) / 2) return false;
  }
  return true;
}

bool crossing_semantics(const SuiteOptions&, std::string& detail) {
  for (int n : {4, 5, 7}) {
    const auto ctx = make_context(2, n + 4);
    const Rational mid = frac(1 - n, 2);
    for (const auto& w : chamber_walls_C0(ctx)) {
      const auto c = crossing_data(w, n);
      if (c.dimP_D != -w.square || c.dimP_KD != n - 1 + w.square) return false;
      CrossingKind want;
      if (w.square == 0) want = CrossingKind::BlowDown;
      else if (w.square > mid) want = CrossingKind::AntiFlip;
      else if (w.square == mid) want = CrossingKind::Flop;
      else want = CrossingKind::Flip;
      if (c.kind != want) {
        detail = "kind of " + to_string(w);
        return false;
      }
    }
  }
  const auto ctx = make_context(2, 9);
  const auto c = crossing_data(make_wall(H(ctx) - E(ctx, 1) - E(ctx, 2)), 5);
  return c.kind == CrossingKind::AntiFlip && c.dimP_D == 1 && c.dimP_KD == 3;
}

bool rho_identities(const SuiteOptions& opt, std::string& detail) {
  for (int n : {4, 5, 6}) {
    const auto rep = verify_rho_properties(rho(n), std::min(opt.trials, 50), opt.seed);
    if (!rep.all_pass) {
      for (const auto& c : rep.checks)
        if (!c.pass) detail = "n=" + std::to_string(n) + ": " + c.name;
      return false;
    }
  }
  return true;
}

bool mori_translation(const SuiteOptions&, std::string& detail) {
  const auto S = make_context(2, 9);
  const auto map = rho(5);
  const auto cone = nef_cone_image(chamber_C0(S), map);
  const auto& X = map.target();
  std::set<std::vector<Integer>> got, want;
  for (const auto& f : cone.facets) {
    got.insert(f.dual_curve.coeffs);
    if (wall_curve_multiple(f.wall, map, f.dual_curve) == 0) return false;
  }
  for (int i = 1; i <= 9; ++i) {
    want.insert(curve_f(X, i).coeffs);
    for (int j = i + 1; j <= 9; ++j) {
      auto c = curve_l(X);
      c.coeffs[static_cast<size_t>(i)] = -1;
      c.coeffs[static_cast<size_t>(j)] = -1;
      want.insert(c.coeffs);
    }
  }
  detail = std::to_string(cone.facets.size()) + " facets";
  return got == want && cone.facets.size() == want.size();
}

bool eff_generators(const SuiteOptions& opt, std::string& detail) {
  const auto rep = eff_cone_check(make_context(2, 9), opt.trials, opt.seed);
  detail = std::to_string(rep.pairs_checked) + " pairs";
  if (!rep.first_mismatch.empty()) detail += ", first mismatch " + rep.first_mismatch;
  return rep.all_pass && rep.anticanonical_checked;
}

bool noether(const SuiteOptions&, std::string& detail) {
  for (int k : {9, 10}) {
    const auto rep = noether_check(8, k);
    detail += "k=" + std::to_string(k) + ":" + std::to_string(rep.violations) + " ";
    if (rep.violations != 0) return false;
  }
  return true;
}

// Plain enumeration of odd l with sum l^2 = Q and sum l*y = target.
void odd_vectors(const std::vector<long long>& y, size_t i, long long Q, long long target,
                 std::vector<long long>& l, std::vector<std::vector<long long>>& out) {
  const size_t k = y.size();
  if (i == k) {
    if (Q == 0 && target == 0) out.push_back(l);
    return;
  }
  long long rest = 0;
  for (size_t j = i; j < k; ++j) rest += y[j] * y[j];
  // Cauchy-Schwarz: |target| <= sqrt(Q * rest)
  if (static_cast<long double>(target) * target > static_cast<long double>(Q) * rest + 0.5L) return;
  const long long lim = static_cast<long long>(std::sqrt(static_cast<long double>(Q)));
  for (long long v = -lim; v <= lim; ++v) {
    if ((v & 1) == 0 || v * v > Q) continue;
    l[i] = v;
    odd_vectors(y, i + 1, Q - v * v, target - v * y[i], l, out);
  }
}

bool wall_completeness(const SuiteOptions& opt, std::string& detail) {
  std::mt19937 rng(opt.seed + 17);
  for (int k : {9, 10}) {
    const auto ctx = make_context(2, k);
    const int n = k - 4;
    int found = 0;
    std::uniform_int_distribution<int> pert(-2, 2), av(19, 26);
    while (found < 20) {
      const long long q = 6;
      std::vector<long long> m(static_cast<size_t>(k) + 1);
      m[0] = av(rng);
      for (int i = 1; i <= k; ++i) m[static_cast<size_t>(i)] = q + pert(rng);
      std::vector<Rational> c;
      for (auto x : m) c.emplace_back(static_cast<long>(x));
      const PicClass L(ctx, c);
      if (square(L) <= 0 || coble_pair(L, canonical_class(ctx)) >= 0 || !is_ample_Kneg(L)) continue;
      ++found;
      const auto walls = local_walls(L);
      std::set<PicClass> have = wall_classes(walls);
      const long bound = 2 * std::max(wall_degree_bound(L), 1L);
      // D = (1-d)h + sum mu_i e_i with l_i = 2 mu_i + 1: (2D+K).L = 0 reads sum l_i m_i = (2d+1) X
      std::vector<long long> y(m.begin() + 1, m.end());
      for (long d = 0; d <= bound; ++d) {
        std::vector<long long> l(static_cast<size_t>(k));
        std::vector<std::vector<long long>> sols;
        odd_vectors(y, 0, 4 * d * d + 4 * d + k, (2 * d + 1) * m[0], l, sols);
        for (const auto& s : sols) {
          std::vector<Rational> dc{Rational(static_cast<long>(1 - d))};
          for (auto v : s) dc.emplace_back(static_cast<long>(-(v - 1) / 2));
          const PicClass D(ctx, dc);
          const Rational sq = square(D);
          if (sq < -n || sq > 1) continue;
          if (!have.count(make_wall(D).D)) {
            detail = "missed " + to_string(D) + " at L = " + to_string(L);
            return false;
          }
        }
      }
    }
  }
  return true;
}

PointConfiguration random_configuration(int k, int s, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  while (true) {
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(k));
    for (auto& r : rows)
      for (int j = 0; j <= s; ++j) r.emplace_back(c(rng));
    auto cfg = PointConfiguration::from_rows(rows);
    if (general_position(cfg)) return cfg;
  }
}

bool gale(const SuiteOptions& opt, std::string& detail) {
  std::mt19937 rng(opt.seed + 29);
  for (auto [k, s] : {std::pair{6, 2}, {9, 2}, {7, 3}}) {
    for (int t = 0; t < 50; ++t) {
      const auto A = random_configuration(k, s, rng);
      const auto B = gale_dual(A);
      if (!duality_product(A, B).is_zero() || !dual_round_trip(A) || !general_position(B)) {
        detail = "failure at (k,s) = (" + std::to_string(k) + "," + std::to_string(s) + ")";
        return false;
      }
    }
  }
  return true;
}

bool negative_controls(const SuiteOptions&, std::string& detail) {
  const auto c11 = make_context(2, 11);
  std::vector<Rational> sp{3};
  for (int i = 1; i <= 10; ++i) sp.emplace_back(1);
  sp.emplace_back(-1);
  const PicClass D(c11, sp);
  if (orbit_classify(D) != OrbitType::Other || find_wall_witness(D)) {
    detail = "special class";
    return false;
  }
  const auto c9 = make_context(2, 9);
  const auto mem = cone_membership(H(c9).scaled(10) - sum_E(c9), ConeKind::E);
  return !mem.member && mem.certificate && *mem.certificate == H(c9) && mem.violated_constraint == "2B+K>=0";
}

bool graph_run(const SuiteOptions& opt, std::string& detail) {
  if (opt.k != opt.n + 4) {
    detail = "k must equal n + 4";
    return false;
  }
  const auto ctx = make_context(2, opt.k);
  const auto g = chamber_graph(chamber_C0(ctx), opt.budget, Region::Pi);
  detail = std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges";
  if (opt.budget <= 0) return g.nodes.size() == 1;
  if (static_cast<int>(g.nodes.size()) > opt.budget) return false;
  for (const auto& e : g.edges) {
    const auto want = crossing_data(e.crossing.wall, opt.n);
    if (want.kind != e.crossing.kind || want.dimP_D != e.crossing.dimP_D) return false;
  }
  const long facets = opt.k + opt.k * (opt.k - 1) / 2;
  return static_cast<long>(g.nodes[0].facets.size()) == facets;
}

}  // namespace

std::vector<SuiteResult> run_verification_suite(const SuiteOptions& opt) {
  const std::vector<std::pair<std::string, std::function<bool(const SuiteOptions&, std::string&)>>> suite{
      {"Weyl relations and pairing invariance", weyl_relations},
      {"orbit counts of e1 for k = 4..8", orbit_counts},
      {"segment scans along L_a on (2,9) and (2,8)", scan_tables},
      {"walls of C0 for n = 4, 5, 7", c0_census},
      {"crossing types and locus dimensions", crossing_semantics},
      {"determinant map identities", rho_identities},
      {"facets of rho(C0) dual to f_i and l - f_i - f_j", mori_translation},
      {"effective cone generators under rho", eff_generators},
      {"m1 + m2 + m3 > d for rational classes", noether},
      {"local wall lists against brute force", wall_completeness},
      {"Gale duality round trips", gale},
      {"negative controls", negative_controls},
      {"chamber graph from C0", graph_run},
  };
  std::vector<SuiteResult> out;
  int id = 0;
  for (const auto& [name, fn] : suite) {
    SuiteResult r{++id, name, false, {}};
    try {
      r.pass = fn(opt, r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace weylgale
