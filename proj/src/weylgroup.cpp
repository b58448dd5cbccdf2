#include "weylgale/weylgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace weylgale {

Root make_root(const PicClass& alpha) {
  if (square(alpha) != -2) throw RootError("root must have self-pairing -2: " + to_string(alpha));
  if (coble_pair(alpha, canonical_class(alpha.ctx())) != 0)
    throw RootError("root must be orthogonal to K: " + to_string(alpha));
  return Root{alpha};
}

PicClass reflect(const PicClass& alpha, const PicClass& v) { return reflect(make_root(alpha), v); }

PicClass reflect(const Root& alpha, const PicClass& v) {
  require_same_context(alpha.cls, v);
  return v + alpha.cls.scaled(coble_pair(alpha.cls, v));
}

PicClass alpha_I(const LatticeContext& ctx, const std::vector<int>& I) {
  if (static_cast<int>(I.size()) != ctx.n + 1)
    throw IndexError("Cremona index set must have n+1 = " + std::to_string(ctx.n + 1) + " elements");
  std::set<int> seen;
  auto a = H(ctx);
  for (int i : I) {
    if (i < 1 || i > ctx.k) throw IndexError("Cremona index out of range: " + std::to_string(i));
    if (!seen.insert(i).second) throw IndexError("Cremona indices must be distinct");
    a = a + E(ctx, i).scaled(-1);
  }
  return a;
}

PicClass cremona(const std::vector<int>& I, const PicClass& v) { return reflect(alpha_I(v.ctx(), I), v); }

PicClass simple_root(const LatticeContext& ctx, int i) {
  if (i == 0) {
    std::vector<int> I;
    for (int j = 1; j <= ctx.n + 1; ++j) I.push_back(j);
    return alpha_I(ctx, I);
  }
  if (i < 1 || i >= ctx.k) throw IndexError("generator index out of range: " + std::to_string(i));
  return E(ctx, i) - E(ctx, i + 1);
}

PicClass apply_generator(int i, const PicClass& v) {
  const auto& ctx = v.ctx();
  if (i < 0 || i >= ctx.k) throw IndexError("generator index out of range: " + std::to_string(i));
  std::vector<Rational> c = v.coeffs();
  if (i == 0) {
    if (ctx.k < ctx.n + 1) throw IndexError("s_0 needs at least n+1 points");
    Rational t = Rational(ctx.n - 1) * c[0];
    for (int j = 1; j <= ctx.n + 1; ++j) t -= c[static_cast<size_t>(j)];
    c[0] += t;
    for (int j = 1; j <= ctx.n + 1; ++j) c[static_cast<size_t>(j)] += t;
  } else {
    std::swap(c[static_cast<size_t>(i)], c[static_cast<size_t>(i + 1)]);
  }
  return PicClass(ctx, std::move(c));
}

PicClass apply_word(const WeylWord& w, const PicClass& v) {
  PicClass x = v;
  for (int i : w) x = apply_generator(i, x);
  return x;
}

WeylWord inverse_word(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

WeylWord transposition_word(int i, int j) {
  if (i == j) return {};
  if (i > j) std::swap(i, j);
  // (i j) = s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i
  WeylWord w;
  for (int t = i; t < j; ++t) w.push_back(t);
  for (int t = j - 2; t >= i; --t) w.push_back(t);
  return w;
}

WeylWord reversal_word(int k) {
  WeylWord w;
  for (int i = 1; i <= k / 2; ++i) {
    auto t = transposition_word(i, k + 1 - i);
    w.insert(w.end(), t.begin(), t.end());
  }
  return w;
}

Matrix generator_matrix(const LatticeContext& ctx, int i) {
  const size_t r = static_cast<size_t>(ctx.k + 1);
  Matrix m(r, r);
  for (size_t j = 0; j < r; ++j) {
    std::vector<Rational> e(r, Rational(0));
    e[j] = 1;
    auto img = apply_generator(i, PicClass::from_basis(ctx, e)).basis_coords();
    for (size_t a = 0; a < r; ++a) m(a, j) = img[a];
  }
  return m;
}

bool generators_adjacent(const LatticeContext& ctx, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return false;
  if (i == 0) return j == ctx.n + 1;
  return j == i + 1;
}

RelationReport verify_relations(const LatticeContext& ctx) {
  if (ctx.k <= ctx.n + 1) throw DimensionError("relations need k > n+1");
  RelationReport rep;
  const size_t r = static_cast<size_t>(ctx.k + 1);
  const Matrix I = Matrix::identity(r);
  std::vector<Matrix> g;
  for (int i = 0; i < ctx.k; ++i) g.push_back(generator_matrix(ctx, i));
  rep.all_pass = true;
  for (int i = 0; i < ctx.k; ++i) {
    RelationCheck c{i, i, 1, g[i] * g[i] == I};
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(c);
  }
  for (int i = 0; i < ctx.k; ++i)
    for (int j = i + 1; j < ctx.k; ++j) {
      bool adj = generators_adjacent(ctx, i, j);
      if (adj) rep.edges.emplace_back(i, j);
      int order = adj ? 3 : 2;
      Matrix p = g[i] * g[j];
      Matrix acc = p;
      for (int t = 1; t < order; ++t) acc = acc * p;
      // The order must be exact: no smaller power of s_i s_j is the identity.
      bool exact = acc == I && !(p == I) && (order == 2 || !(p * p == I));
      RelationCheck c{i, j, order, exact};
      rep.all_pass = rep.all_pass && c.pass;
      rep.checks.push_back(c);
    }
  const auto K = canonical_class(ctx);
  rep.fixes_K = true;
  for (int i = 0; i < ctx.k; ++i) rep.fixes_K = rep.fixes_K && apply_generator(i, K) == K;
  rep.all_pass = rep.all_pass && rep.fixes_K;
  return rep;
}

std::vector<PicClass> orbit_enumerate(const PicClass& seed, long degree_bound) {
  if (Rational(degree_bound) < seed.d())
    throw BoundError("degree bound " + std::to_string(degree_bound) + " is below the seed degree");
  const Rational hi(degree_bound), lo(-degree_bound);
  std::set<PicClass> seen{seed};
  std::deque<PicClass> queue{seed};
  while (!queue.empty()) {
    PicClass v = queue.front();
    queue.pop_front();
    for (int i = 0; i < v.ctx().k; ++i) {
      if (i == 0 && v.ctx().k < v.ctx().n + 1) continue;
      PicClass w = apply_generator(i, v);
      // Orbits with negative degrees (roots) are also cut from below so the search terminates.
      if (w.d() > hi || w.d() < lo) continue;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return std::vector<PicClass>(seen.begin(), seen.end());
}

Reduction cremona_reduce(const PicClass& D) {
  if (D.ctx().n != 2) throw DimensionError("cremona_reduce needs a surface context");
  if (!D.integral()) throw DomainError("cremona_reduce needs an integral class");
  const int k = D.ctx().k;
  Reduction red{D, {}, false};
  std::vector<Rational> c = D.coeffs();
  for (;;) {
    // stable bubble sort, descending
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (int i = 1; i < k; ++i)
        if (c[static_cast<size_t>(i)] < c[static_cast<size_t>(i + 1)]) {
          std::swap(c[static_cast<size_t>(i)], c[static_cast<size_t>(i + 1)]);
          red.word.push_back(i);
          swapped = true;
        }
    }
    if (k < 3) break;
    Rational top = c[1] + c[2] + c[3];
    if (top <= c[0]) break;
    Rational next_d = 2 * c[0] - top;
    if (next_d < 0) {
      red.stalled = true;
      break;
    }
    PicClass x = apply_generator(0, PicClass(D.ctx(), c));
    c = x.coeffs();
    red.word.push_back(0);
  }
  red.canonical = PicClass(D.ctx(), c);
  return red;
}

const char* to_string(OrbitType t) {
  switch (t) {
    case OrbitType::Cubic: return "Cubic";
    case OrbitType::Conic: return "Conic";
    case OrbitType::Line: return "Line";
    case OrbitType::MinusTwo: return "MinusTwo";
    case OrbitType::Other: return "Other";
  }
  return "?";
}

OrbitType match_canonical(const PicClass& c) {
  const int k = c.ctx().k;
  int ones = 0, minus = 0, other = 0;
  for (int i = 1; i <= k; ++i) {
    if (c.m(i) == 1) ++ones;
    else if (c.m(i) == -1) ++minus;
    else if (c.m(i) != 0) ++other;
  }
  if (other) return OrbitType::Other;
  if (c.d() == 1 && minus == 0) {
    if (ones == 0) return OrbitType::Cubic;
    if (ones == 1) return OrbitType::Conic;
    if (ones == 2) return OrbitType::Line;
    if (ones == 3) return OrbitType::MinusTwo;
  }
  if (c.d() == 0) {
    if (ones == 0 && minus == 1) return OrbitType::Line;
    if (ones == 1 && minus == 1) return OrbitType::MinusTwo;
  }
  return OrbitType::Other;
}

OrbitType orbit_classify(const PicClass& D) {
  auto red = cremona_reduce(D);
  OrbitType t = match_canonical(red.canonical);
  if (t != OrbitType::Other) return t;
  // -K-D lies in the orbit of -K-(w D); reduce it and map back.
  const auto K = canonical_class(D.ctx());
  auto dual = cremona_reduce(-K - D);
  auto back = cremona_reduce(-K - dual.canonical);
  return match_canonical(back.canonical);
}

PicClass phi0(const PicClass& v, int n) {
  const auto& src = v.ctx();
  const int s = src.n, k = src.k;
  if (k != n + s + 2) throw DimensionError("phi0 needs k = n + s + 2");
  if (coble_pair(v, canonical_class(src)) != 0) throw DomainError("phi0 is defined on K^perp only");
  auto x = v.basis_coords();
  // coordinates in beta_0 = h - e_1 - ... - e_{s+1}, beta_i = e_i - e_{i+1}
  Rational c0 = x[0];
  std::vector<Rational> w(x);
  for (int j = 1; j <= s + 1; ++j) w[static_cast<size_t>(j)] += c0;
  std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
  Rational run = 0;
  for (int j = 1; j < k; ++j) {
    run += w[static_cast<size_t>(j)];
    c[static_cast<size_t>(j)] = run;
  }
  const auto tgt = make_context(n, k);
  PicClass out = simple_root(tgt, 0).scaled(c0);
  for (int i = 1; i < k; ++i)
    if (c[static_cast<size_t>(i)] != 0) out = out + simple_root(tgt, k - i).scaled(c[static_cast<size_t>(i)]);
  return out;
}

LinearMap equivariant_map(const Rational& a, const Rational& b, int s, int n) {
  const int k = n + s + 2;
  const auto src = make_context(s, k);
  const auto tgt = make_context(n, k);
  const Rational lambda = a * (n - 1) - b * (n + 1);
  const size_t r = static_cast<size_t>(k + 1);
  Matrix m(r, r);
  m(0, 0) = a * (s + 1) + lambda;
  for (size_t j = 1; j < r; ++j) m(j, 0) = -(b * (s + 1) + lambda);
  for (int i = 1; i <= k; ++i) {
    const size_t col = static_cast<size_t>(i);
    m(0, col) = a;
    for (size_t j = 1; j < r; ++j) m(j, col) = -b;
    m(static_cast<size_t>(k + 1 - i), col) -= lambda;
  }
  return LinearMap(src, tgt, std::move(m));
}

LinearMap index_reversal(const LatticeContext& ctx) {
  const size_t r = static_cast<size_t>(ctx.k + 1);
  Matrix m(r, r);
  m(0, 0) = 1;
  for (int i = 1; i <= ctx.k; ++i) m(static_cast<size_t>(ctx.k + 1 - i), static_cast<size_t>(i)) = 1;
  return LinearMap(ctx, ctx, std::move(m));
}

}  // namespace weylgale
