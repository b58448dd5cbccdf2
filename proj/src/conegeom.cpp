#include "weylgale/conegeom.hpp"

#include "cone_internal.hpp"
#include "enum_core.hpp"
#include "weylgale/config.hpp"

#include <algorithm>
#include <functional>

namespace weylgale {

using detail::i128;
using detail::ll;

namespace detail {

PicClass primitive_multiple(const PicClass& D) {
  auto v = primitive_integer_vector(D.coeffs());
  std::vector<Rational> c(v.begin(), v.end());
  return PicClass(D.ctx(), c);
}

bool in_fundamental_domain(const PicClass& c) {
  const int k = c.ctx().k;
  for (int i = 1; i < k; ++i)
    if (c.m(i) < c.m(i + 1)) return false;
  if (c.m(k) < 0) return false;
  Rational top = 0;
  for (int i = 1; i <= std::min(k, 3); ++i) top += c.m(i);
  return top <= c.d();
}

std::optional<PicClass> find_negative_line(const PicClass& D) {
  require_surface(D, "find_negative_line");
  const auto& ctx = D.ctx();
  const int k = ctx.k;
  PicClass X = D.integral() ? D : primitive_multiple(D);
  auto red = cremona_reduce(X);
  PicClass c = red.canonical;
  WeylWord w = red.word;
  std::optional<PicClass> local;
  if (c.m(k) < 0) {
    local = E(ctx, k);
  } else if (!in_fundamental_domain(c)) {
    if (k >= 3) {
      // stalled: one more s_0 step drops the degree below zero
      c = apply_generator(0, c);
      w.push_back(0);
      for (int i = 1; i <= k && !local; ++i)
        if (c.m(i) < 0) local = E(ctx, i);
    }
    if (!local) local = H(ctx) - E(ctx, 1) - E(ctx, 2);
  }
  if (!local) return std::nullopt;
  PicClass e = apply_word(inverse_word(w), *local);
  if (coble_pair(e, D) >= 0) throw std::logic_error("find_negative_line produced a nonnegative pairing");
  return e;
}

}  // namespace detail

namespace {

struct Scaled {
  i128 X = 0;
  std::vector<ll> Y;
  Integer q;
};

Scaled scale(const PicClass& L) {
  Scaled s;
  std::vector<Rational> all = L.coeffs();
  s.q = common_denominator(all);
  s.X = detail::to_i128(Integer(L.d() * s.q));
  for (int i = 1; i <= L.ctx().k; ++i) s.Y.push_back(static_cast<ll>(detail::to_i128(Integer(L.m(i) * s.q))));
  return s;
}

// Integer U with: D.L < T  <=>  q (D.L) <= U  (strict), or <= T (inclusive).
i128 threshold_int(const Integer& q, const Rational& T, bool inclusive) {
  Rational qT = T * q;
  Integer u = inclusive ? floor_of(qT) : Integer(ceil_of(qT) - 1);
  return detail::to_i128(u);
}

i128 sumsq(const std::vector<ll>& Y) {
  i128 s = 0;
  for (ll y : Y) s += static_cast<i128>(y) * y;
  return s;
}

// Last d that can satisfy q(dx - sum m y) <= U with sum m^2 = d^2 - s.
long degree_bound_scaled(const Scaled& sc, int selfint, i128 U) {
  const i128 Ysum = sumsq(sc.Y);
  const i128 L2 = sc.X * sc.X - Ysum;
  if (L2 <= 0) throw UnboundedError("family enumeration needs L^2 > 0");
  if (sc.X <= 0) throw DomainError("family enumeration needs L.h > 0");
  // f(d) = (dX - U)^2 - (d^2 - s) Ysum is convex with vertex X U / L2
  i128 d = 0;
  if (U > 0) d = (sc.X * U) / L2;
  if (d < 0) d = 0;
  for (;; ++d) {
    i128 p = d * sc.X - U;
    if (p <= 0) continue;
    i128 f = p * p - (d * d - selfint) * Ysum;
    if (f > 0 && d * L2 >= sc.X * U) return static_cast<long>(d - 1);
  }
}

}  // namespace

long family_degree_bound(const PicClass& L, CurveFamilySpec spec, const Rational& threshold, bool inclusive) {
  detail::require_surface(L, "family_degree_bound");
  auto sc = scale(L);
  return degree_bound_scaled(sc, spec.selfint, threshold_int(sc.q, threshold, inclusive));
}

std::vector<PicClass> enumerate_family_below(const PicClass& L, CurveFamilySpec spec, const Rational& threshold,
                                             bool inclusive) {
  detail::require_surface(L, "enumerate_family_below");
  if (square(L) <= 0) throw UnboundedError("enumerate_family_below needs L^2 > 0");
  const auto& ctx = L.ctx();
  const int k = ctx.k;
  auto sc = scale(L);
  const i128 U = threshold_int(sc.q, threshold, inclusive);
  const long dmax = degree_bound_scaled(sc, spec.selfint, U) + engine_config().bound_slack;
  std::vector<std::vector<PicClass>> per(static_cast<size_t>(std::max<long>(dmax + 1, 0)));
  parallel_for(per.size(), [&](size_t di) {
    const i128 d = static_cast<i128>(di);
    const i128 Q = d * d - spec.selfint;
    if (Q < 0) return;
    const i128 S = 3 * d - spec.antican;
    detail::enumerate_m(k, Q, S, &sc.Y, d * sc.X - U, [&](const std::vector<ll>& m) {
      std::vector<Rational> c(static_cast<size_t>(k) + 1);
      c[0] = static_cast<long>(d);
      for (int i = 0; i < k; ++i) c[static_cast<size_t>(i) + 1] = static_cast<long>(m[static_cast<size_t>(i)]);
      per[di].emplace_back(ctx, std::move(c));
    });
  });
  std::vector<PicClass> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_orbit_line(const PicClass& D) {
  if (D.ctx().n != 2 || !D.integral()) return false;
  if (square(D) != -1 || coble_pair(D, canonical_class(D.ctx())) != -1 || D.d() < 0) return false;
  return D.ctx().k < 3 || orbit_classify(D) == OrbitType::Line;
}
bool is_orbit_conic(const PicClass& D) {
  if (D.ctx().n != 2 || !D.integral()) return false;
  if (square(D) != 0 || coble_pair(D, canonical_class(D.ctx())) != -2 || D.d() < 0) return false;
  return D.ctx().k < 3 || orbit_classify(D) == OrbitType::Conic;
}
bool is_orbit_cubic(const PicClass& D) {
  if (D.ctx().n != 2 || !D.integral()) return false;
  if (square(D) != 1 || coble_pair(D, canonical_class(D.ctx())) != -3 || D.d() < 0) return false;
  return D.ctx().k < 3 || orbit_classify(D) == OrbitType::Cubic;
}

namespace {

// Nefness of an L^2 = 0 class: reduce a primitive integral multiple.
bool nef_isotropic(const PicClass& L) {
  if (L == PicClass::zero(L.ctx())) return true;
  if (L.d() < 0) return false;
  return !detail::find_negative_line(L).has_value();
}

}  // namespace

bool is_nef_Kneg(const PicClass& L) {
  detail::require_surface(L, "is_nef_Kneg");
  const auto K = canonical_class(L.ctx());
  if (coble_pair(L, K) > 0) throw DomainError("is_nef_Kneg: L.K > 0 is outside the K-negative region");
  const Rational L2 = square(L);
  if (L2 < 0) return false;
  if (L2 == 0) return nef_isotropic(L);
  if (L.d() <= 0) return false;  // L^2 > 0 and L.h <= 0 puts L in the negative cone
  // Non-orbit numerical lines with d >= 0 are effective (chi = 1, h^2 = 0), so they cannot
  // pair negatively with a nef class; no orbit filter is needed.
  return enumerate_family_below(L, kLineFamily, 0).empty();
}

bool is_ample_Kneg(const PicClass& L) {
  detail::require_surface(L, "is_ample_Kneg");
  const auto K = canonical_class(L.ctx());
  if (coble_pair(L, K) >= 0) throw DomainError("is_ample_Kneg needs L.K < 0");
  if (square(L) <= 0 || L.d() <= 0) return false;
  return enumerate_family_below(L, kLineFamily, 0, true).empty();
}

const char* to_string(NefBoundaryType t) {
  switch (t) {
    case NefBoundaryType::Ample: return "Ample";
    case NefBoundaryType::PullbackOfAmple: return "PullbackOfAmple";
    case NefBoundaryType::ConicFiber: return "ConicFiber";
    case NefBoundaryType::AntiCanonicalRay: return "AntiCanonicalRay";
  }
  return "?";
}

NefBoundary classify_nef_boundary(const PicClass& L) {
  if (!is_nef_Kneg(L)) throw DomainError("classify_nef_boundary: class is not nef");
  NefBoundary out;
  const auto K = canonical_class(L.ctx());
  const Rational L2 = square(L);
  if (L2 > 0) {
    for (auto& e : enumerate_family_below(L, kLineFamily, 0, true))
      if (is_orbit_line(e)) out.contracted.push_back(e);
    out.type = out.contracted.empty() ? NefBoundaryType::Ample : NefBoundaryType::PullbackOfAmple;
    out.canonical = L;
    return out;
  }
  if (L == PicClass::zero(L.ctx())) throw DomainError("classify_nef_boundary: zero class");
  auto red = cremona_reduce(detail::primitive_multiple(L));
  out.word = red.word;
  out.canonical = red.canonical;
  out.type = coble_pair(L, K) < 0 ? NefBoundaryType::ConicFiber : NefBoundaryType::AntiCanonicalRay;
  return out;
}

// ---- decompositions ----

namespace {

PicClass lift(const PicClass& x, const LatticeContext& big) {
  auto c = x.coeffs();
  c.resize(static_cast<size_t>(big.k) + 1, Rational(0));
  return PicClass(big, c);
}

PicClass truncate(const PicClass& x, int k) {
  auto c = x.coeffs();
  c.resize(static_cast<size_t>(k) + 1);
  return PicClass(surface_context(k), c);
}

long as_long(const Rational& q) { return to_ll(Integer(q)); }

// D in the fundamental domain written as l(-K) + sum of (-1)-classes.
void fundamental_decomposition(const PicClass& D0, long& l, std::vector<PicClass>& parts) {
  const auto& ctx = D0.ctx();
  const int k = ctx.k;
  auto m = [&](int i) -> long { return i <= k ? as_long(D0.m(i)) : 0L; };
  const PicClass h = H(ctx);
  const PicClass line12 = h - E(ctx, 1) - E(ctx, 2);
  auto push = [&](const PicClass& e, long times) {
    for (long t = 0; t < times; ++t) parts.push_back(e);
  };
  const long a0 = as_long(D0.d()) - m(1) - m(2) - m(3);
  // h = (h - e1 - e2) + e1 + e2
  push(line12, a0);
  push(E(ctx, 1), a0);
  push(E(ctx, 2), a0);
  // h - e1 = (h - e1 - e2) + e2
  const long a1 = m(1) - m(2);
  push(line12, a1);
  push(E(ctx, 2), a1);
  // 2h - e1 - e2 = 2(h - e1 - e2) + e1 + e2
  const long a2 = m(2) - m(3);
  push(line12, 2 * a2);
  push(E(ctx, 1), a2);
  push(E(ctx, 2), a2);
  // 3h - e1 - ... - ej = -K + e_{j+1} + ... + e_k
  for (int j = 3; j <= k; ++j) {
    const long aj = m(j) - m(j + 1);
    l += aj;
    for (int i = j + 1; i <= k; ++i) push(E(ctx, i), aj);
  }
}

// Decomposition for classes pairing nonnegatively with every (-1)-class.
bool nonnegative_decomposition(const PicClass& D, long& l, std::vector<PicClass>& parts) {
  auto red = cremona_reduce(D);
  if (red.stalled || !detail::in_fundamental_domain(red.canonical)) return false;
  std::vector<PicClass> local;
  long l0 = 0;
  fundamental_decomposition(red.canonical, l0, local);
  const WeylWord inv = inverse_word(red.word);
  for (auto& p : local) parts.push_back(apply_word(inv, p));
  l += l0;
  return true;
}

std::string partial_text(long l, const std::vector<PicClass>& parts) {
  std::string s = "partial decomposition: " + std::to_string(l) + "(-K)";
  for (auto& p : parts) s += " + " + to_string(p);
  return s;
}

}  // namespace

PicClass EffectiveDecomposition::sum() const {
  PicClass s = canonical_class(ctx).scaled(-l);
  for (auto& p : parts) s = s + p;
  return s;
}

EffectiveDecomposition decompose_effective(const PicClass& D_in) {
  detail::require_surface(D_in, "decompose_effective");
  if (!D_in.integral()) throw DomainError("decompose_effective needs an integral class");
  const auto& ctx = D_in.ctx();
  EffectiveDecomposition out;
  out.ctx = ctx;
  // reference ample class; every (-1)-class has positive degree against it
  const PicClass A = H(ctx).scaled(std::max(ctx.k, 3)) - sum_E(ctx);
  PicClass D = D_in;
  for (;;) {
    if (D == PicClass::zero(ctx)) break;
    if (coble_pair(D, A) < 0)
      throw BoundError("decompose_effective: class is not effective; " + partial_text(out.l, out.parts));
    auto e = detail::find_negative_line(D);
    if (!e) break;
    // e is a fixed component of the effective class D
    D = D - *e;
    out.parts.push_back(*e);
  }
  if (D != PicClass::zero(ctx) && !nonnegative_decomposition(D, out.l, out.parts))
    throw BoundError("decompose_effective: reduction left the fundamental domain; " +
                     partial_text(out.l, out.parts));
  std::sort(out.parts.begin(), out.parts.end());
  if (out.sum() != D_in) throw std::logic_error("decompose_effective: parts do not re-sum");
  return out;
}

PicClass DualEDecomposition::sum() const {
  PicClass s = canonical_class(ctx).scaled(-a);
  for (auto& p : lines) s = s + p;
  for (auto& p : cubicparts) s = s + p;
  return s;
}

namespace {

DualEDecomposition dual_E_rec(const PicClass& D) {
  const auto& ctx = D.ctx();
  const int k = ctx.k;
  DualEDecomposition out;
  out.ctx = ctx;
  if (k == 2) {
    auto x = D.basis_coords();  // D = x0 h + x1 e1 + x2 e2
    const Rational c1 = x[0] + x[1], c2 = x[0] + x[2];  // D.(h - e_i)
    if (c1 < 0 || c2 < 0)
      throw HypothesisError("decompose_dual_E: D.C < 0 for a conic C = h - e_i on Bl_2");
    const long d = as_long(x[0]);
    const PicClass e1 = E(ctx, 1), e2 = E(ctx, 2);
    if (d >= 0) {
      for (long t = 0; t < d; ++t) out.lines.push_back(H(ctx) - e1 - e2);
    } else {
      const PicClass cubicpart = H(ctx).scaled(2) + canonical_class(ctx);
      for (long t = 0; t < -d; ++t) out.cubicparts.push_back(cubicpart);
    }
    for (long t = 0; t < as_long(c1); ++t) out.lines.push_back(e1);
    for (long t = 0; t < as_long(c2); ++t) out.lines.push_back(e2);
    return out;
  }
  auto neg = detail::find_negative_line(D);
  if (!neg) {
    long l = 0;
    if (!nonnegative_decomposition(D, l, out.lines))
      throw std::logic_error("decompose_dual_E: reduction left the fundamental domain");
    out.a = l;
    return out;
  }
  const long lmult = as_long(-coble_pair(D, *neg));
  // move the negative line to e_k; the reduced form of a (-1)-class is e_k
  auto red = cremona_reduce(*neg);
  if (red.canonical != E(ctx, k)) throw std::logic_error("decompose_dual_E: line did not reduce to e_k");
  const PicClass wD = apply_word(red.word, D);
  if (wD.m(k) != -lmult) throw std::logic_error("decompose_dual_E: unexpected e_k coefficient");
  auto sub = dual_E_rec(truncate(wD, k - 1));
  // pull back: -K' -> -K + e_k, lines -> lines, 2B'+K' -> (2B+K) - e_k
  const PicClass ek = E(ctx, k);
  const long coeff = sub.a + lmult - static_cast<long>(sub.cubicparts.size());
  if (coeff < 0)
    throw HypothesisError("decompose_dual_E: negative e_k coefficient while lifting from k-1 points");
  const WeylWord inv = inverse_word(red.word);
  out.a = sub.a;
  for (auto& x : sub.lines) out.lines.push_back(apply_word(inv, lift(x, ctx)));
  for (long t = 0; t < coeff; ++t) out.lines.push_back(apply_word(inv, ek));
  for (auto& x : sub.cubicparts) out.cubicparts.push_back(apply_word(inv, lift(x, ctx) + ek));
  return out;
}

}  // namespace

DualEDecomposition decompose_dual_E(const PicClass& D) {
  detail::require_surface(D, "decompose_dual_E");
  if (!D.integral()) throw DomainError("decompose_dual_E needs an integral class");
  if (square(D) > 0 && D.d() > 0) {
    for (auto& C : enumerate_family_below(D, kConicFamily, 0))
      if (is_orbit_conic(C)) throw HypothesisError("decompose_dual_E: D.C < 0 for C = " + to_string(C));
  }
  auto out = dual_E_rec(D);
  std::sort(out.lines.begin(), out.lines.end());
  std::sort(out.cubicparts.begin(), out.cubicparts.end());
  if (out.sum() != D) throw std::logic_error("decompose_dual_E: parts do not re-sum");
  return out;
}

// ---- cones ----

const char* to_string(ConeKind c) {
  switch (c) {
    case ConeKind::NefKneg: return "NefKneg";
    case ConeKind::E: return "E";
    case ConeKind::Pi: return "Pi";
  }
  return "?";
}

Membership cone_membership(const PicClass& L, ConeKind cone) {
  detail::require_surface(L, "cone_membership");
  const auto& ctx = L.ctx();
  const auto K = canonical_class(ctx);
  if (square(L) <= 0) throw BoundaryUndecidable("cone_membership: L^2 <= 0 is not decided");
  Membership r;
  const Rational LK = coble_pair(L, K);
  if (LK > 0) {
    r.violated_constraint = "K<=0";
    r.certificate = K;
    return r;
  }
  if (L.d() <= 0) {
    // L lies in the negative cone; one of e1, e2, h - e1 - e2 (summing to h) pairs negatively
    for (auto e : {E(ctx, 1), E(ctx, 2), H(ctx) - E(ctx, 1) - E(ctx, 2)})
      if (coble_pair(e, L) < 0) {
        r.violated_constraint = "e>=0";
        r.certificate = e;
        return r;
      }
  }
  for (auto& e : enumerate_family_below(L, kLineFamily, 0))
    if (is_orbit_line(e)) {
      r.violated_constraint = "e>=0";
      r.certificate = e;
      return r;
    }
  const Rational half = -LK / 2;
  auto check = [&](CurveFamilySpec spec, bool (*orbit)(const PicClass&), const char* tag) {
    for (auto& B : enumerate_family_below(L, spec, half))
      if (orbit(B)) {
        r.violated_constraint = tag;
        r.certificate = B;
        return false;
      }
    return true;
  };
  if (cone == ConeKind::Pi && !check(kConicFamily, is_orbit_conic, "2C+K>=0")) return r;
  if (cone != ConeKind::NefKneg && !check(kCubicFamily, is_orbit_cubic, "2B+K>=0")) return r;
  r.member = true;
  return r;
}

NoetherReport noether_check(long degree_bound, int k) {
  NoetherReport rep;
  rep.k = k;
  rep.degree_bound = degree_bound;
  const auto ctx = surface_context(k);
  const int families[4] = {1, 0, -1, -2};
  std::vector<long> m(static_cast<size_t>(k), 0);
  for (int f = 0; f < 4; ++f) {
    const long s = families[f];
    for (long d = 2; d <= degree_bound; ++d) {
      const long Q = d * d - s, S = 3 * d - (2 + s);
      // nonincreasing nonnegative m with sum m^2 = Q, sum m = S
      std::function<void(int, long, long, long)> rec = [&](int i, long q, long sm, long cap) {
        if (i == k) {
          if (q == 0 && sm == 0) {
            ++rep.counts[f];
            if (m[0] + (k > 1 ? m[1] : 0) + (k > 2 ? m[2] : 0) <= d) {
              ++rep.violations;
              std::vector<Rational> c{Rational(d)};
              for (long v : m) c.emplace_back(v);
              rep.counterexamples.emplace_back(ctx, c);
            }
          }
          return;
        }
        const long left = k - i;
        if (sm < 0 || q < 0 || sm > left * cap || sm * sm > left * q) return;
        for (long v = std::min(cap, sm); v >= 0; --v) {
          if (v * v > q) continue;
          m[static_cast<size_t>(i)] = v;
          rec(i + 1, q - v * v, sm - v, v);
        }
        m[static_cast<size_t>(i)] = 0;
      };
      rec(0, Q, S, d);
    }
  }
  return rep;
}

}  // namespace weylgale
