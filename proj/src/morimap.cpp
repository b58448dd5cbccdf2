#include "weylgale/morimap.hpp"

#include "cone_internal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace weylgale {

Rational CurveClass::pair(const PicClass& X) const {
  if (!(X.ctx() == ctx)) throw ContextError("curve and divisor live on different lattices");
  const auto x = X.basis_coords();
  Rational s = Rational(coeffs[0]) * x[0];
  for (size_t j = 1; j < coeffs.size(); ++j) s -= Rational(coeffs[j]) * x[j];
  return s;
}

CurveClass curve_l(const LatticeContext& X) {
  CurveClass c{X, std::vector<Integer>(static_cast<size_t>(X.k) + 1, Integer(0))};
  c.coeffs[0] = 1;
  return c;
}

CurveClass curve_f(const LatticeContext& X, int i) {
  if (i < 1 || i > X.k) throw IndexError("curve_f index out of range");
  CurveClass c{X, std::vector<Integer>(static_cast<size_t>(X.k) + 1, Integer(0))};
  c.coeffs[static_cast<size_t>(i)] = 1;
  return c;
}

std::string to_string(const CurveClass& c) {
  std::string s;
  auto term = [&](const Integer& a, const std::string& name) {
    if (a == 0) return;
    const Integer mag = abs(a);
    if (s.empty())
      s += a < 0 ? "-" : "";
    else
      s += a < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str();
    s += name;
  };
  term(c.coeffs[0], "l");
  for (size_t i = 1; i < c.coeffs.size(); ++i) term(c.coeffs[i], "f" + std::to_string(i));
  return s.empty() ? "0" : s;
}

LinearMap rho(int n) {
  if (n < 2) throw DimensionError("rho needs n >= 2");
  const int k = n + 4;
  const auto S = make_context(2, k), X = make_context(n, k);
  Matrix m(static_cast<size_t>(k) + 1, static_cast<size_t>(k) + 1);
  for (size_t j = 0; j <= static_cast<size_t>(k); ++j) {
    m(0, j) = -1;
    for (size_t i = 1; i <= static_cast<size_t>(k); ++i) m(i, j) = 1;
    if (j > 0) m(j, j) = -1;
  }
  return LinearMap(S, X, m);
}

WeylWord matched_word(const WeylWord& w, int k) {
  const WeylWord rev = reversal_word(k);
  WeylWord out;
  for (int g : w) {
    if (g == 0) {
      out.insert(out.end(), rev.begin(), rev.end());
      out.push_back(0);
      out.insert(out.end(), rev.begin(), rev.end());
    } else {
      out.push_back(g);
    }
  }
  return out;
}

namespace {

PicClass random_class(const LatticeContext& ctx, std::mt19937& rng, int span = 7) {
  std::uniform_int_distribution<int> dist(-span, span);
  std::vector<Rational> c;
  for (int i = 0; i <= ctx.k; ++i) c.emplace_back(dist(rng));
  return PicClass(ctx, c);
}

// Projection to K^perp scaled to stay integral: K^2 v - (v.K) K.
PicClass perp_part(const PicClass& v) {
  const auto K = canonical_class(v.ctx());
  const Rational K2 = square(K);
  if (K2 == 0) {
    // K^perp contains K; use the root lattice directly
    PicClass out = PicClass::zero(v.ctx());
    for (int i = 0; i < v.ctx().k; ++i) out = out + simple_root(v.ctx(), i).scaled(v.coeffs()[static_cast<size_t>(i)]);
    return out;
  }
  return v.scaled(K2) - K.scaled(coble_pair(v, K));
}

WeylWord random_word(int k, std::mt19937& rng, int max_len = 20) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, k - 1);
  WeylWord w(static_cast<size_t>(len(rng)));
  for (auto& g : w) g = gen(rng);
  return w;
}

void add(RhoReport& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back(CheckLine{std::move(name), pass, std::move(detail)});
}

// Plain-coordinate matrix of the word action (w[0] applied first).
Matrix word_matrix(const LatticeContext& ctx, const WeylWord& w) {
  Matrix m = Matrix::identity(static_cast<size_t>(ctx.k) + 1);
  for (int g : w) m = generator_matrix(ctx, g) * m;
  return m;
}

}  // namespace

RhoReport verify_rho_properties(const LinearMap& map, int trials, unsigned seed) {
  const auto& S = map.source();
  const auto& X = map.target();
  const int k = S.k, n = X.n;
  RhoReport r;
  r.n = n;
  r.outside_theorem_range = rho_outside_theorem_range(n);
  std::mt19937 rng(seed);
  const auto KS = canonical_class(S), KX = canonical_class(X);

  add(r, "rho(K_S) = K_X", map(KS) == KX, to_string(map(KS)));

  {
    bool ok = true;
    std::string bad;
    const Matrix R = index_reversal(X).matrix();
    for (int j = 0; j < k && ok; ++j) {
      Matrix gx = j == 0 ? R * generator_matrix(X, 0) * R : generator_matrix(X, j);
      if (!(map.matrix() * generator_matrix(S, j) == gx * map.matrix())) {
        ok = false;
        bad = "generator s_" + std::to_string(j);
      }
    }
    add(r, "W-equivariance on generators (s_i -> s_i, s_0 -> reversed s_0)", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (int t = 0; t < trials && ok; ++t) {
      PicClass L = random_class(S, rng);
      if (coble_pair(map(L), KX) != (n - 1) * coble_pair(L, KS)) {
        ok = false;
        bad = to_string(L);
      }
    }
    add(r, "<rho(L), K_X> = (n-1) L.K_S", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        const PicClass a = simple_root(S, i), b = simple_root(S, j);
        if (coble_pair(map(a), map(b)) != 4 * coble_pair(a, b)) {
          ok = false;
          bad = to_string(a) + ", " + to_string(b);
        }
      }
    for (int t = 0; t < trials && ok; ++t) {
      const PicClass a = perp_part(random_class(S, rng)), b = perp_part(random_class(S, rng));
      if (coble_pair(map(a), map(b)) != 4 * coble_pair(a, b)) {
        ok = false;
        bad = to_string(a) + ", " + to_string(b);
      }
    }
    add(r, "<rho(L), rho(L')> = 4 L.L' on K^perp (basis pairs and random)", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    const Rational c = Rational((n - 5) * (n - 5));
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < trials && ok; ++t) {
      const Rational a = coef(rng), b = coef(rng);
      const PicClass L1 = perp_part(random_class(S, rng)), L2 = perp_part(random_class(S, rng));
      const PicClass L = KS.scaled(a) + L1, Lp = KS.scaled(b) + L2;
      if (coble_pair(map(L), map(Lp)) != 4 * coble_pair(L, Lp) - a * b * c) {
        ok = false;
        bad = to_string(L) + ", " + to_string(Lp);
      }
    }
    add(r, "<rho(aK+L1), rho(bK+L2)> = 4 L.L' - ab(n-5)^2", ok, bad);
  }

  {
    // rho on K^perp against phi_0. The explicit matrix labels points so that rho(e_i) involves
    // E_i; phi_0 sends beta_i to alpha_{k-i}. The two agree after reversing the E-indices.
    const auto sigma = index_reversal(X);
    bool ok = true, literal = true;
    std::string bad;
    for (int i = 0; i < k; ++i) {
      const PicClass beta = simple_root(S, i);
      const PicClass img = map(beta);
      const PicClass phi = phi0(beta, n).scaled(2);
      if (img != sigma(phi)) {
        ok = false;
        bad = to_string(beta);
      }
      if (img != phi) literal = false;
    }
    add(r, "rho|K^perp = 2 phi_0 (E-indices reversed)", ok, bad);
    const LinearMap family = equivariant_map(-1, -1, 2, n);
    bool fam = family.then(sigma) == map;
    for (int i = 0; i < k && fam; ++i) {
      const PicClass beta = simple_root(S, i);
      if (family(beta) != phi0(beta, n).scaled(2)) fam = false;
    }
    add(r, "rho = reversal o equivariant_map(-1,-1) and that map restricts to 2 phi_0", fam,
        literal ? "" : "without reversal the explicit matrix differs from 2 phi_0 on K^perp");
  }

  {
    bool ok = true;
    std::string bad;
    for (int i = 1; i <= k && ok; ++i)
      if (map(H(S) - E(S, i)) != E(X, i).scaled(2)) {
        ok = false;
        bad = "i=" + std::to_string(i);
      }
    add(r, "rho(h - e_i) = 2E_i", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (int t = -4; t <= 2 * n + 4 && ok; ++t) {
      const Rational a = frac(t, 2);
      const PicClass want = H(X).scaled(n + 1 - a) - sum_E(X).scaled(n - 1 - a);
      if (map(L_a(S, a)) != want) {
        ok = false;
        bad = "a=" + to_string(a);
      }
    }
    add(r, "rho(L_a) = (n+1-a)H - (n-1-a) sum E", ok, bad);
  }

  {
    const LinearMap inv = map.inverse();
    bool ok = true;
    for (int i = 0; i <= k; ++i) {
      PicClass b = i == 0 ? H(S) : E(S, i);
      if (inv(map(b)) != b) ok = false;
    }
    add(r, "rho invertible, rho^-1 o rho = id on the basis", ok);
  }

  r.all_pass = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckLine& c) { return c.pass; });
  return r;
}

namespace {

// c with c.rho(v) = (2D+K).v, unnormalized (rational).
std::vector<Rational> curve_functional(const PicClass& N, const LinearMap& map) {
  const auto& S = map.source();
  const Matrix G = coble_gram(S);
  const std::vector<Rational> gN = G * N.basis_coords();
  std::vector<Rational> c = map.matrix().transpose().inverse() * gN;
  for (size_t j = 1; j < c.size(); ++j) c[j] = -c[j];
  return c;
}

CurveClass to_curve(const LatticeContext& X, const std::vector<Rational>& v) {
  return CurveClass{X, primitive_integer_vector(v)};
}

// Coble normal on X of the image hyperplane: nu with <nu, rho(v)> proportional to N.v.
PicClass image_normal(const PicClass& N, const LinearMap& map) {
  const auto& X = map.target();
  const std::vector<Rational> gN = coble_gram(map.source()) * N.basis_coords();
  const std::vector<Rational> y = coble_gram(X).inverse() * (map.matrix().transpose().inverse() * gN);
  return PicClass::from_basis(X, y);
}

}  // namespace

CurveClass wall_to_curve(const Wall& w, const LinearMap& map) {
  if (!(w.D.ctx() == map.source())) throw ContextError("wall_to_curve: wall is not on the source lattice");
  auto c = to_curve(map.target(), curve_functional(w.normal, map));
  for (auto& x : c.coeffs)
    if (x != 0) {
      if (x < 0)
        for (auto& y : c.coeffs) y = -y;
      break;
    }
  // the hyperplane must be the orthogonal of this curve
  for (int i = 0; i <= map.source().k; ++i) {
    const PicClass b = i == 0 ? H(map.source()) : E(map.source(), i);
    const Rational lhs = c.pair(map(b)), rhs = coble_pair(w.normal, b);
    if ((lhs == 0) != (rhs == 0)) throw MapError("wall_to_curve: image hyperplane is not a curve orthogonal");
  }
  return c;
}

Rational wall_curve_multiple(const Wall& w, const LinearMap& map, const CurveClass& c) {
  std::optional<Rational> lambda;
  for (int i = 0; i <= map.source().k; ++i) {
    const PicClass b = i == 0 ? H(map.source()) : E(map.source(), i);
    const Rational lhs = c.pair(map(b)), rhs = coble_pair(w.normal, b);
    if (rhs == 0) {
      if (lhs != 0) throw MapError("curve is not proportional to the wall normal");
      continue;
    }
    const Rational q = lhs / rhs;
    if (lambda && *lambda != q) throw MapError("curve is not proportional to the wall normal");
    lambda = q;
  }
  if (!lambda) throw MapError("zero wall normal");
  return *lambda;
}

MoriCone nef_cone_image(const Chamber& ch, const LinearMap& map, bool allow_outside_pi) {
  MoriCone out;
  out.outside_theorem_range = rho_outside_theorem_range(map.target().n);
  out.outside_pi = !cone_membership(ch.rep, ConeKind::Pi).member;
  if (out.outside_pi && !allow_outside_pi) throw RegionError("nef_cone_image: chamber lies outside Pi");
  auto facets = ch.known_walls.empty() ? chamber_facets(ch.rep) : ch.known_walls;
  const PicClass image_rep = map(ch.rep);
  for (auto& [w, sgn] : facets) {
    MoriFacet f{w, w.normal.scaled(sgn), PicClass(), CurveClass{}};
    f.image_on_X = detail::primitive_multiple(image_normal(f.normal_on_S, map));
    if (coble_pair(f.image_on_X, image_rep) < 0) f.image_on_X = -f.image_on_X;
    f.dual_curve = to_curve(map.target(), curve_functional(f.normal_on_S, map));
    if (f.dual_curve.pair(image_rep) < 0)
      for (auto& y : f.dual_curve.coeffs) y = -y;
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const MoriFacet& a, const MoriFacet& b) { return a.wall < b.wall; });
  return out;
}

EffConeReport eff_cone_check(const LatticeContext& S, int budget, unsigned seed) {
  if (S.n != 2) throw DimensionError("eff_cone_check needs the surface lattice");
  const int k = S.k, n = k - 4;
  EffConeReport rep;
  rep.k = k;
  if (budget <= 0) return rep;
  const LinearMap map = rho(n);
  const auto X = map.target();
  const PicClass c0 = H(S) - E(S, 1);
  const PicClass E1 = E(X, 1);
  auto check = [&](const WeylWord& w) {
    ++rep.pairs_checked;
    const PicClass lhs = map(apply_word(w, c0));
    const PicClass rhs = apply_word(matched_word(w, k), E1).scaled(2);
    if (lhs != rhs) {
      if (rep.mismatches++ == 0) rep.first_mismatch = to_string(lhs) + " vs " + to_string(rhs);
    }
    // the conic normal 2C + K maps to the orthogonal of the matching image of f_1
    ++rep.conic_normals_checked;
    const Wall wc = make_wall(apply_word(w, c0));
    const CurveClass got = wall_to_curve(wc, map);
    const Matrix inv = word_matrix(X, inverse_word(matched_word(w, k)));
    // c_w . Y = f_1 . (w'^-1 Y)
    std::vector<Rational> jf(static_cast<size_t>(k) + 1, Rational(0));
    jf[1] = -1;
    std::vector<Rational> cw = inv.transpose() * jf;
    for (size_t j = 1; j < cw.size(); ++j) cw[j] = -cw[j];
    CurveClass want = to_curve(X, cw);
    for (auto& x : want.coeffs)
      if (x != 0) {
        if (x < 0)
          for (auto& y : want.coeffs) y = -y;
        break;
      }
    if (!(got == want)) ++rep.conic_normal_mismatches;
  };
  // breadth-first orbit of h - e1 with the word reaching each element
  std::map<PicClass, WeylWord> seen{{c0, {}}};
  std::deque<PicClass> queue{c0};
  int visited = 0;
  while (!queue.empty() && visited < budget) {
    const PicClass cur = queue.front();
    queue.pop_front();
    ++visited;
    const WeylWord w = seen[cur];
    check(w);
    for (int g = 0; g < k; ++g) {
      PicClass nxt = apply_generator(g, cur);
      if (seen.count(nxt)) continue;
      WeylWord w2 = w;
      w2.push_back(g);
      seen.emplace(nxt, w2);
      queue.push_back(nxt);
    }
  }
  std::mt19937 rng(seed);
  for (int t = 0; t < budget; ++t) check(random_word(k, rng));
  if (k == 9) {
    rep.anticanonical_checked = true;
    const auto KS = canonical_class(S), KX = canonical_class(X);
    // -K_S has K_S.(-K_S) = 0, so it sits on the boundary of the K <= 0 half of E
    rep.anticanonical_pass = coble_pair(KS, KS) == 0 && is_nef_Kneg(-KS) && map(-KS) == -KX &&
                             coble_pair(KX, KX) == 0;
  }
  rep.all_pass = rep.mismatches == 0 && rep.conic_normal_mismatches == 0 && rep.anticanonical_pass;
  return rep;
}

MukaiGaleReport mukai_gale_dimension_check(int k) {
  if (k < 6) throw DimensionError("mukai_gale_dimension_check needs k >= 6");
  const auto S = make_context(2, k);
  MukaiGaleReport r;
  r.k = k;
  r.n = k - 4;
  r.chi = chi_line_bundle(H(S) - sum_E(S));
  r.expected_h1 = -to_ll(Integer(r.chi));
  r.pass = r.chi == 3 - k && r.expected_h1 == r.n + 1;
  return r;
}

}  // namespace weylgale
