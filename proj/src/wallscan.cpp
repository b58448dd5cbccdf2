#include "weylgale/wallscan.hpp"

#include "cone_internal.hpp"
#include "enum_core.hpp"
#include "weylgale/config.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace weylgale {

using detail::i128;
using detail::ll;

namespace {

Rational pair(const PicClass& a, const PicClass& b) { return coble_pair(a, b); }

bool numerical(const PicClass& D) {
  if (!D.integral()) return false;
  const auto K = canonical_class(D.ctx());
  return pair(D, D + K) == -2;
}

// D = (1-d) h + sum m_i e_i with m_i = (l_i - 1)/2, stored as (1-d; -m_i).
PicClass class_from_odd(const LatticeContext& ctx, long d, const std::vector<ll>& l) {
  std::vector<Rational> c(static_cast<size_t>(ctx.k) + 1);
  c[0] = 1 - d;
  for (int i = 0; i < ctx.k; ++i) c[static_cast<size_t>(i) + 1] = static_cast<long>(-(l[static_cast<size_t>(i)] - 1) / 2);
  return PicClass(ctx, c);
}

// Largest d >= 0 with d^2 + d <= R, or -1.
long largest_d(const Rational& R) {
  if (R < 0) return -1;
  long d = 0;
  while (Rational((d + 1) * (d + 2)) <= R) ++d;
  return d;
}

Rational sum_y2(const PicClass& L) {
  Rational s = 0;
  for (int i = 1; i <= L.ctx().k; ++i) s += L.m(i) * L.m(i);
  return s;
}

struct ScaledPair {
  i128 X0 = 0, X1 = 0;
  std::vector<ll> Y0, Y1;
};

ScaledPair scale_pair(const PicClass& a, const PicClass& b) {
  std::vector<Rational> all = a.coeffs();
  all.insert(all.end(), b.coeffs().begin(), b.coeffs().end());
  const Integer q = common_denominator(all);
  ScaledPair s;
  s.X0 = detail::to_i128(Integer(a.d() * q));
  s.X1 = detail::to_i128(Integer(b.d() * q));
  for (int i = 1; i <= a.ctx().k; ++i) {
    s.Y0.push_back(static_cast<ll>(detail::to_i128(Integer(a.m(i) * q))));
    s.Y1.push_back(static_cast<ll>(detail::to_i128(Integer(b.m(i) * q))));
  }
  return s;
}

struct RawHit {
  PicClass D;
  i128 g0 = 0, g1 = 0;  // scaled (2D+K).L0 and (2D+K).L1
};

// All numerical classes D (d >= 0 parametrization) with (2D+K).L_t = 0 for some t in [0,1],
// d <= dmax. Works for any pair of classes; region conditions are the caller's business.
std::vector<RawHit> raw_hits(const PicClass& L0, const PicClass& L1, long dmax) {
  const auto& ctx = L0.ctx();
  const int k = ctx.k;
  auto sc = scale_pair(L0, L1);
  std::vector<std::vector<RawHit>> per(static_cast<size_t>(std::max<long>(dmax + 1, 0)));
  parallel_for(per.size(), [&](size_t di) {
    const i128 d = static_cast<i128>(di);
    std::vector<detail::Functional> fs(2);
    fs[0].y = sc.Y0;
    fs[0].offset = -(2 * d + 1) * sc.X0;
    fs[1].y = sc.Y1;
    fs[1].offset = -(2 * d + 1) * sc.X1;
    auto feasible = [](const std::vector<i128>& lo, const std::vector<i128>& hi) {
      if (lo[0] > 0 && lo[1] > 0) return false;
      if (hi[0] < 0 && hi[1] < 0) return false;
      return true;
    };
    detail::enumerate_odd(k, 4 * d * d + 4 * d + k, fs, feasible, [&](const std::vector<ll>& l) {
      i128 g0 = fs[0].offset, g1 = fs[1].offset;
      for (int i = 0; i < k; ++i) {
        g0 += static_cast<i128>(l[static_cast<size_t>(i)]) * sc.Y0[static_cast<size_t>(i)];
        g1 += static_cast<i128>(l[static_cast<size_t>(i)]) * sc.Y1[static_cast<size_t>(i)];
      }
      if ((g0 > 0 && g1 > 0) || (g0 < 0 && g1 < 0)) return;
      per[di].push_back(RawHit{class_from_odd(ctx, static_cast<long>(d), l), g0, g1});
    });
  });
  std::vector<RawHit> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Rational i128_to_rational(i128 v) {
  // values stay far below 2^126; split into two 64-bit halves
  const bool neg = v < 0;
  if (neg) v = -v;
  Integer hi = static_cast<unsigned long>(static_cast<unsigned long long>(v >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<unsigned long long>(v & 0xFFFFFFFFFFFFFFFFULL));
  Integer r = (hi << 64) + lo;
  return Rational(neg ? Integer(-r) : r);
}

int sign_of(const Rational& q) { return sgn(q); }

struct SegmentRegion {
  Rational min_L2;
};

// Exact minimum of L_t^2 on [0,1]; RegionError when the segment leaves L^2 > 0, K.L < 0, L.h > 0.
SegmentRegion check_region(const PicClass& L0, const PicClass& L1) {
  const auto K = canonical_class(L0.ctx());
  for (const PicClass* P : {&L0, &L1}) {
    if (pair(*P, K) >= 0) throw RegionError("segment endpoint " + to_string(*P) + " has K.L >= 0");
    if (P->d() <= 0) throw RegionError("segment endpoint " + to_string(*P) + " has L.h <= 0");
  }
  const PicClass Dl = L1 - L0;
  const Rational a = square(Dl), b = 2 * pair(L0, Dl), c = square(L0);
  Rational m = std::min(c, square(L1));
  Rational texit = square(L1) <= 0 ? Rational(1) : Rational(0);
  if (a > 0) {
    const Rational tv = -b / (2 * a);
    if (tv > 0 && tv < 1) {
      const Rational v = c - b * b / (4 * a);
      if (v < m) {
        m = v;
        texit = tv;
      }
    }
  }
  if (m <= 0) throw RegionError("segment leaves L^2 > 0 (near t = " + to_string(texit) + ")");
  return {m};
}

long segment_degree_bound(const PicClass& L0, const PicClass& L1, const Rational& min_L2) {
  const int k = L0.ctx().k;
  const Rational maxY = std::max(sum_y2(L0), sum_y2(L1));
  const Rational minx2 = std::min(L0.d() * L0.d(), L1.d() * L1.d());
  return largest_d((k * maxY - minx2) / (4 * min_L2));
}

// Candidate walls crossing the open segment, grouped by parameter, plus endpoint incidences.
struct RawScan {
  std::map<Rational, std::set<PicClass>> inner;  // t -> canonical D
  std::set<PicClass> at_start, at_end;
  long dbound = 0;
};

PicClass canonical_D(const PicClass& D) {
  const auto K = canonical_class(D.ctx());
  PicClass other = -K - D;
  return other < D ? other : D;
}

bool square_in_range(const PicClass& D) {
  const int n = D.ctx().k - 4;
  const Rational s = square(D);
  return s >= -n && s <= 1;
}

RawScan raw_scan(const PicClass& L0, const PicClass& L1) {
  auto reg = check_region(L0, L1);
  RawScan rs;
  rs.dbound = segment_degree_bound(L0, L1, reg.min_L2);
  for (auto& h : raw_hits(L0, L1, rs.dbound + engine_config().bound_slack)) {
    PicClass D = canonical_D(h.D);
    if (h.g0 == 0) rs.at_start.insert(D);
    if (h.g1 == 0) rs.at_end.insert(D);
    if (h.g0 != 0 && h.g1 != 0) {
      Rational g0 = i128_to_rational(h.g0), g1 = i128_to_rational(h.g1);
      rs.inner[g0 / (g0 - g1)].insert(D);
    }
  }
  return rs;
}

bool has_inner_crossing(const PicClass& a, const PicClass& b) {
  if (a == b) return false;
  return !raw_scan(a, b).inner.empty();
}

PicClass point_at(const PicClass& L0, const PicClass& L1, const Rational& t) {
  return L0.scaled(1 - t) + L1.scaled(t);
}

std::vector<Wall> to_walls(const std::set<PicClass>& ds) {
  std::vector<Wall> out;
  for (auto& D : ds) out.push_back(make_wall(D));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Wall make_wall(const PicClass& D_in) {
  detail::require_surface(D_in, "make_wall");
  if (!numerical(D_in)) throw DomainError("not a numerical rational class: " + to_string(D_in));
  Wall w;
  w.D = canonical_D(D_in);
  w.normal = w.D.scaled(2) + canonical_class(D_in.ctx());
  w.square = square(w.D);
  return w;
}

std::string to_string(const Wall& w) { return to_string(w.D); }

const char* to_string(CrossingKind k) {
  switch (k) {
    case CrossingKind::EmptyToProjSpace: return "EmptyToProjSpace";
    case CrossingKind::BlowDown: return "BlowDown";
    case CrossingKind::Flip: return "Flip";
    case CrossingKind::Flop: return "Flop";
    case CrossingKind::AntiFlip: return "AntiFlip";
    case CrossingKind::ProjSpaceToEmpty: return "ProjSpaceToEmpty";
  }
  return "?";
}

const char* to_string(Side s) {
  switch (s) {
    case Side::Minus: return "Minus";
    case Side::Plus: return "Plus";
    case Side::Neither: return "Neither";
  }
  return "?";
}

const char* to_string(Region r) { return r == Region::Pi ? "Pi" : "E"; }

PicClass L_a(const LatticeContext& ctx, const Rational& a) { return H(ctx).scaled(a + 3) - sum_E(ctx); }

bool is_wall_witness(const PicClass& D, const PicClass& L) {
  if (D.ctx().n != 2 || !(D.ctx() == L.ctx())) return false;
  if (!numerical(D)) return false;
  const auto K = canonical_class(D.ctx());
  if (pair(D.scaled(2) + K, L) != 0) return false;
  if (pair(K, L) >= 0) return false;
  return is_ample_Kneg(L);
}

std::optional<PicClass> find_wall_witness(const PicClass& D, int search_bound, const PicClass* near) {
  detail::require_surface(D, "find_wall_witness");
  if (!numerical(D)) return std::nullopt;
  const auto& ctx = D.ctx();
  const int k = ctx.k;
  const auto K = canonical_class(ctx);
  const PicClass N = D.scaled(2) + K;
  std::vector<PicClass> dirs{N, H(ctx), K, D};
  for (int i = 1; i <= k; ++i) dirs.push_back(E(ctx, i));
  auto try_point = [&](const PicClass& P) -> bool {
    if (pair(N, P) != 0 || pair(K, P) >= 0 || square(P) <= 0 || P.d() <= 0) return false;
    return is_ample_Kneg(P);
  };
  auto project = [&](const PicClass& P, const PicClass& u) -> std::optional<PicClass> {
    const Rational Nu = pair(N, u);
    if (Nu == 0) return std::nullopt;
    return P - u.scaled(pair(N, P) / Nu);
  };
  const Rational a_min = std::max(Rational(Rational(k, 3) - 3), Rational(0));
  const PicClass A_ref = L_a(ctx, a_min + 1);
  if (near) {
    Rational eps(1, 2);
    for (int j = 0; j < search_bound; ++j, eps /= 2) {
      const PicClass P0 = *near + A_ref.scaled(eps);
      for (auto& u : dirs)
        if (auto P = project(P0, u); P && try_point(*P)) return P;
    }
  }
  // the symmetric family L_a meets the hyperplane at one value of a
  const Rational Nh = pair(N, H(ctx));
  if (Nh != 0) {
    const Rational a = -pair(N, -K) / Nh;
    if (auto P = L_a(ctx, a); try_point(P)) return P;
  }
  for (int j = 1; j <= search_bound; ++j) {
    const PicClass P0 = L_a(ctx, a_min + Rational(j, 2));
    for (auto& u : dirs)
      if (auto P = project(P0, u); P && try_point(*P)) return P;
  }
  return std::nullopt;
}

long wall_degree_bound(const PicClass& L) {
  const Rational L2 = square(L);
  if (L2 <= 0) throw UnboundedError("wall_degree_bound needs L^2 > 0");
  return largest_d((L.ctx().k * sum_y2(L) - L.d() * L.d()) / (4 * L2));
}

std::vector<Wall> local_walls(const PicClass& L) {
  detail::require_surface(L, "local_walls");
  const auto& ctx = L.ctx();
  const auto K = canonical_class(ctx);
  if (pair(L, K) > 0) throw DomainError("local_walls needs L.K <= 0");
  const Rational L2 = square(L);
  if (!is_nef_Kneg(L)) throw DomainError("local_walls needs a nef class");
  if (L2 == 0) {
    if (pair(L, K) == 0) throw InfiniteWalls("L lies on an anticanonical ray: infinitely many walls pass through it");
    // move L to h - e1, where a wall through it has 2d + 1 < k - 1
    auto red = cremona_reduce(detail::primitive_multiple(L));
    const PicClass c = red.canonical;
    const WeylWord inv = inverse_word(red.word);
    std::set<PicClass> found;
    const std::vector<ll> y(static_cast<size_t>(ctx.k), 0);
    for (long d = 0; 2 * d + 1 < ctx.k - 1; ++d) {
      std::vector<detail::Functional> fs(1);
      fs[0].y = y;
      fs[0].y[0] = 1;  // c = h - e1: (2D+K).c = l_1 - (2d+1)
      fs[0].offset = -(2 * d + 1);
      detail::enumerate_odd(
          ctx.k, 4 * d * d + 4 * d + ctx.k, fs,
          [](const std::vector<i128>& lo, const std::vector<i128>& hi) { return lo[0] <= 0 && hi[0] >= 0; },
          [&](const std::vector<ll>& l) {
            if (l[0] != 2 * d + 1) return;
            PicClass Dp = class_from_odd(ctx, d, l);
            if (!square_in_range(Dp)) return;
            if (!find_wall_witness(Dp, 8, &c)) return;
            found.insert(canonical_D(apply_word(inv, Dp)));
          });
    }
    return to_walls(found);
  }
  const bool ample = is_ample_Kneg(L);
  std::set<PicClass> found;
  for (auto& h : raw_hits(L, L, wall_degree_bound(L) + engine_config().bound_slack)) {
    if (h.g0 != 0) continue;
    if (!square_in_range(h.D)) continue;
    if (!ample && !find_wall_witness(h.D, 8, &L)) continue;
    found.insert(canonical_D(h.D));
  }
  return to_walls(found);
}

SegmentScan segment_scan(const PicClass& L0, const PicClass& L1) {
  detail::require_surface(L0, "segment_scan");
  require_same_context(L0, L1);
  SegmentScan out;
  if (L0 == L1) return out;
  RawScan rs = raw_scan(L0, L1);
  out.degree_bound = rs.dbound;
  const bool a0 = is_ample_Kneg(L0), a1 = is_ample_Kneg(L1);
  auto confirm = [&](const PicClass& D, const PicClass& at, bool at_ample) {
    if (!square_in_range(D)) return false;
    if (at_ample) return true;
    return find_wall_witness(D, 8, &at).has_value();
  };
  for (auto& [t, ds] : rs.inner) {
    const PicClass P = point_at(L0, L1, t);
    // an interior point of a segment with an ample endpoint is ample when the segment is nef
    const bool pa = a0 || a1 || is_ample_Kneg(P);
    std::set<PicClass> keep;
    for (auto& D : ds)
      if (confirm(D, P, pa)) keep.insert(D);
    if (!keep.empty()) out.crossings.push_back({t, to_walls(keep)});
  }
  std::set<PicClass> s0, s1;
  for (auto& D : rs.at_start)
    if (confirm(D, L0, a0)) s0.insert(D);
  for (auto& D : rs.at_end)
    if (confirm(D, L1, a1)) s1.insert(D);
  out.at_start = to_walls(s0);
  out.at_end = to_walls(s1);
  return out;
}

Chamber chamber_of(const PicClass& L) {
  detail::require_surface(L, "chamber_of");
  if (!is_ample_Kneg(L)) throw DomainError("chamber_of needs an ample K-negative class");
  auto walls = local_walls(L);
  if (!walls.empty()) {
    std::string msg = "polarization lies on " + std::to_string(walls.size()) + " wall(s):";
    for (auto& w : walls) msg += " " + to_string(w);
    throw OnWallError(msg);
  }
  return Chamber{L, {}};
}

namespace {

// Checks that the point W-witness lies only on w and is reached from rep without crossing.
bool bounds_chamber(const PicClass& rep, const Wall& w, const PicClass& p) {
  if (!is_wall_witness(w.D, p)) return false;
  auto lw = local_walls(p);
  if (lw.size() != 1 || !(lw[0] == w)) return false;
  return !has_inner_crossing(rep, p);
}

}  // namespace

std::vector<Wall> chamber_walls_C0(const LatticeContext& ctx) {
  if (ctx.n != 2) throw DimensionError("chamber_walls_C0 needs a surface context");
  const int k = ctx.k, n = k - 4;
  if (n < 3) throw DimensionError("chamber_walls_C0 needs n = k - 4 >= 3");
  const PicClass rep = L_a(ctx, n - 2);
  const PicClass h = H(ctx), all = sum_E(ctx);
  std::vector<Wall> out;
  for (int i = 1; i <= k; ++i) {
    const Wall w = make_wall(h - E(ctx, i));
    // (n + 3/2)h - (3/2)e_i - sum_{j != i} e_j
    const PicClass p = h.scaled(Rational(2 * n + 3, 2)) - all - E(ctx, i).scaled(Rational(1, 2));
    if (bounds_chamber(rep, w, p)) out.push_back(w);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const Wall w = make_wall(h - E(ctx, i) - E(ctx, j));
      // (n + 1/2)h - (3/4)(e_i + e_j) - sum of the other e
      const PicClass p =
          h.scaled(Rational(2 * n + 1, 2)) - all + (E(ctx, i) + E(ctx, j)).scaled(Rational(1, 4));
      if (bounds_chamber(rep, w, p)) out.push_back(w);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Chamber chamber_C0(const LatticeContext& ctx) {
  Chamber c = chamber_of(L_a(ctx, ctx.k - 6));
  for (auto& w : chamber_walls_C0(ctx)) c.known_walls.emplace_back(w, sign_of(pair(w.normal, c.rep)));
  return c;
}

WallCrossing crossing_data(const Wall& w, int n) {
  WallCrossing c;
  c.wall = w;
  c.dsq = w.square;
  c.dimP_D = -w.square;
  c.dimP_KD = n - 1 + w.square;
  const Rational mid = frac(1 - n, 2);
  if (w.square == 1) {
    c.kind = CrossingKind::EmptyToProjSpace;
  } else if (w.square == 0) {
    c.kind = CrossingKind::BlowDown;
    c.blown_up_side = Side::Plus;
  } else if (w.square == -n) {
    c.kind = CrossingKind::ProjSpaceToEmpty;
  } else if (w.square == -n + 1) {
    c.kind = CrossingKind::BlowDown;
    c.blown_up_side = Side::Minus;
  } else if (w.square < mid) {
    c.kind = CrossingKind::Flip;
  } else if (w.square == mid) {
    c.kind = CrossingKind::Flop;
  } else {
    c.kind = CrossingKind::AntiFlip;
  }
  c.iso_side = w.square < mid ? Side::Minus : (w.square > mid ? Side::Plus : Side::Neither);
  return c;
}

// ---- chamber graph ----

namespace {

struct Facet {
  Wall wall;
  PicClass witness;
  int sign = 0;  // sign of (2D+K).rep
};

// Walls bounding the chamber of rep that are met by probe rays or by orthogonal projection.
std::vector<Facet> discover_facets(const PicClass& rep, bool& touches_boundary) {
  const auto& ctx = rep.ctx();
  const auto K = canonical_class(ctx);
  std::vector<PicClass> dirs{H(ctx), -H(ctx), K, -K};
  for (int i = 1; i <= ctx.k; ++i) {
    dirs.push_back(E(ctx, i));
    dirs.push_back(-E(ctx, i));
  }
  std::set<PicClass> candidates;
  std::map<PicClass, PicClass> first_hit;  // wall -> single-wall first crossing point
  for (auto& u : dirs) {
    Rational s = rep.d() / 2;
    for (int tries = 0; tries < 12; ++tries, s /= 2) {
      const PicClass q = rep + u.scaled(s);
      RawScan rs;
      try {
        rs = raw_scan(rep, q);
      } catch (const RegionError&) {
        continue;
      }
      if (rs.inner.empty()) {
        touches_boundary = true;
        break;
      }
      for (auto& [t, ds] : rs.inner) candidates.insert(ds.begin(), ds.end());
      auto& [t1, ds1] = *rs.inner.begin();
      if (ds1.size() == 1) first_hit.emplace(*ds1.begin(), point_at(rep, q, t1));
      break;
    }
  }
  std::vector<Facet> out;
  for (auto& D : candidates) {
    const Wall w = make_wall(D);
    const Rational Nr = pair(w.normal, rep);
    std::vector<PicClass> tries{rep - w.normal.scaled(Nr / square(w.normal))};
    if (auto it = first_hit.find(D); it != first_hit.end()) tries.push_back(it->second);
    for (auto& p : tries)
      if (bounds_chamber(rep, w, p)) {
        out.push_back(Facet{w, p, sign_of(Nr)});
        break;
      }
  }
  return out;
}

// A point just across the wall from the witness, on no wall.
std::optional<PicClass> step_across(const Facet& f) {
  Rational eps(1, 8);
  // N^2 = 1 - k < 0, so moving along +sign*N flips the sign of N.L
  const PicClass dir = f.wall.normal.scaled(f.sign);
  for (int j = 0; j < 40; ++j, eps /= 2) {
    const PicClass p = f.witness + dir.scaled(eps / (1 + abs(f.witness.d())));
    if (!is_ample_Kneg(p)) continue;
    if (!local_walls(p).empty()) continue;
    if (has_inner_crossing(f.witness, p)) continue;
    return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<Wall, int>> chamber_facets(const PicClass& rep) {
  chamber_of(rep);
  bool touches = false;
  std::vector<std::pair<Wall, int>> out;
  for (auto& f : discover_facets(rep, touches)) out.emplace_back(f.wall, f.sign);
  return out;
}

namespace {

bool quick_reject(const GraphNode& a, const PicClass& p) {
  for (auto& [w, s] : a.facets)
    if (sign_of(pair(w.normal, p)) != s) return true;
  return false;
}

}  // namespace

ChamberGraph chamber_graph(const Chamber& start, int max_steps, Region region) {
  detail::require_surface(start.rep, "chamber_graph");
  const ConeKind ck = region == Region::Pi ? ConeKind::Pi : ConeKind::E;
  if (!cone_membership(start.rep, ck).member)
    throw RegionError(std::string("chamber_graph: start is outside ") + to_string(region));
  chamber_of(start.rep);
  const int n = start.rep.ctx().k - 4;
  ChamberGraph g;
  g.nodes.push_back(GraphNode{0, start.rep, {}, false, false});
  if (max_steps <= 0) {
    g.complete = false;
    return g;
  }
  std::set<std::tuple<int, int, PicClass>> seen_edges;
  for (size_t idx = 0; idx < g.nodes.size(); ++idx) {
    const PicClass rep = g.nodes[idx].rep;
    bool touches = false;
    auto facets = discover_facets(rep, touches);
    g.nodes[idx].touches_boundary = touches;
    for (auto& f : facets) g.nodes[idx].facets.emplace_back(f.wall, f.sign);
    g.nodes[idx].expanded = true;
    for (auto& f : facets) {
      auto p = step_across(f);
      if (!p) {
        g.complete = false;
        continue;
      }
      if (!cone_membership(*p, ck).member) {
        g.exits.push_back(ExitFacet{static_cast<int>(idx), f.wall});
        continue;
      }
      int target = -1;
      for (size_t j = 0; j < g.nodes.size() && target < 0; ++j) {
        if (j == idx) continue;
        if (quick_reject(g.nodes[j], *p)) continue;
        if (!has_inner_crossing(g.nodes[j].rep, *p)) target = static_cast<int>(j);
      }
      if (target < 0) {
        if (static_cast<int>(g.nodes.size()) >= max_steps) {
          g.complete = false;
          continue;
        }
        target = static_cast<int>(g.nodes.size());
        g.nodes.push_back(GraphNode{target, *p, {}, false, false});
      }
      const int a = std::min<int>(static_cast<int>(idx), target), b = std::max<int>(static_cast<int>(idx), target);
      if (!seen_edges.insert({a, b, f.wall.D}).second) continue;
      g.edges.push_back(GraphEdge{static_cast<int>(idx), target, crossing_data(f.wall, n), f.sign});
    }
  }
  return g;
}

}  // namespace weylgale
