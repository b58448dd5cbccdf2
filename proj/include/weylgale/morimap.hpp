#pragma once
// The determinant map rho : N^1(Bl_{n+4} P^2) -> N^1(Bl_{n+4} P^n) and the Mori-side
// data it carries: wall hyperplanes, dual curves, nef cones of chambers.

#include "weylgale/linalg.hpp"
#include "weylgale/wallscan.hpp"
#include "weylgale/weylgroup.hpp"

#include <string>
#include <vector>

namespace weylgale {

// 1-cycle c0 l + sum c_i f_i on X, paired with divisors by l.H = 1, f_i.E_j = -delta_ij.
struct CurveClass {
  LatticeContext ctx;
  std::vector<Integer> coeffs;  // (c0; c_1..c_k)
  Rational pair(const PicClass& X) const;
  bool operator==(const CurveClass& o) const { return ctx == o.ctx && coeffs == o.coeffs; }
};
CurveClass curve_l(const LatticeContext& X);
CurveClass curve_f(const LatticeContext& X, int i);
std::string to_string(const CurveClass& c);  // e.g. "l - f1 - f2"

// rho(h) = -H + sum E_j, rho(e_i) = -H + sum E_j - 2E_i, on Bl_{n+4}.
LinearMap rho(int n);
// The explicit map is stated for n > 3; smaller n is built but flagged.
inline bool rho_outside_theorem_range(int n) { return n <= 3; }

// Generator correspondence under which rho is equivariant: s_i -> s_i (i >= 1), and s_0 -> the
// reflection in the index-reversed root H - E_{k-n} - ... - E_k.
WeylWord matched_word(const WeylWord& w, int k);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample or a note
};
struct RhoReport {
  int n = 0;
  bool outside_theorem_range = false;
  std::vector<CheckLine> checks;
  bool all_pass = false;
};
RhoReport verify_rho_properties(const LinearMap& map, int trials, unsigned seed = 0);

// Primitive curve whose orthogonal is rho((2D+K)^perp); sign fixed by the first nonzero coefficient.
CurveClass wall_to_curve(const Wall& w, const LinearMap& map);
// lambda with c.rho(v) = lambda (2D+K).v for all v.
Rational wall_curve_multiple(const Wall& w, const LinearMap& map, const CurveClass& c);

struct MoriFacet {
  Wall wall;
  PicClass normal_on_S;  // +-(2D+K), positive on the chamber
  PicClass image_on_X;   // Coble normal of rho(wall), positive on rho(chamber)
  CurveClass dual_curve; // curve pairing positively with rho(chamber), zero on rho(wall)
};
struct MoriCone {
  std::vector<MoriFacet> facets;
  bool outside_theorem_range = false;
  bool outside_pi = false;
};
// Facet presentation of rho(closure of the chamber). Chambers outside Pi need allow_outside_pi.
MoriCone nef_cone_image(const Chamber& ch, const LinearMap& map, bool allow_outside_pi = false);

struct EffConeReport {
  int k = 0;
  long pairs_checked = 0;     // orbit elements and random words
  long mismatches = 0;
  std::string first_mismatch;
  long conic_normals_checked = 0;
  long conic_normal_mismatches = 0;
  bool anticanonical_checked = false;  // k = 9 only
  bool anticanonical_pass = true;
  bool all_pass = true;
};
// rho(w.(h - e1)) = 2 (w'.E1) for BFS orbit words and `budget` random words.
EffConeReport eff_cone_check(const LatticeContext& S, int budget, unsigned seed = 0);

struct MukaiGaleReport {
  int k = 0, n = 0;
  Rational chi;       // chi(h - e_1 - ... - e_k)
  long expected_h1 = 0;
  bool pass = false;
};
MukaiGaleReport mukai_gale_dimension_check(int k);

}  // namespace weylgale
