#pragma once
// Special curve classes on S = Bl_k P^2 and the cones cut out by them.

#include "weylgale/piclattice.hpp"
#include "weylgale/weylgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylgale {

struct CurveFamilySpec {
  int selfint = -1;  // D^2
  int antican = 1;   // D.(-K)
};
inline constexpr CurveFamilySpec kCubicFamily{1, 3};
inline constexpr CurveFamilySpec kConicFamily{0, 2};
inline constexpr CurveFamilySpec kLineFamily{-1, 1};

// All integral D = dh - sum m_i e_i with d >= 0, D^2 = selfint, D.(-K) = antican and
// D.L < threshold (<= when inclusive). Sorted lexicographically.
// Classes with d < 0 are never effective (h is nef) and are not produced.
std::vector<PicClass> enumerate_family_below(const PicClass& L, CurveFamilySpec spec,
                                             const Rational& threshold, bool inclusive = false);

// Largest h-degree that can satisfy the bound above; exposed for tests.
long family_degree_bound(const PicClass& L, CurveFamilySpec spec, const Rational& threshold,
                         bool inclusive = false);

bool is_nef_Kneg(const PicClass& L);
bool is_ample_Kneg(const PicClass& L);

enum class NefBoundaryType { Ample, PullbackOfAmple, ConicFiber, AntiCanonicalRay };
const char* to_string(NefBoundaryType t);
struct NefBoundary {
  NefBoundaryType type = NefBoundaryType::Ample;
  std::vector<PicClass> contracted;  // (-1)-classes e with e.L = 0
  WeylWord word;                     // for the L^2 = 0 cases: word moving L to its canonical form
  PicClass canonical;
};
NefBoundary classify_nef_boundary(const PicClass& L);

struct EffectiveDecomposition {
  long l = 0;                   // multiple of -K
  std::vector<PicClass> parts;  // (-1)-classes, with repetition
  PicClass sum() const;         // l(-K) + sum(parts); needs at least one class or a context
  LatticeContext ctx;
};
EffectiveDecomposition decompose_effective(const PicClass& D);

struct DualEDecomposition {
  long a = 0;                        // multiple of -K
  std::vector<PicClass> lines;       // (-1)-classes
  std::vector<PicClass> cubicparts;  // classes 2B + K with B a cubic class
  LatticeContext ctx;
  PicClass sum() const;
};
DualEDecomposition decompose_dual_E(const PicClass& D);

enum class ConeKind { NefKneg, E, Pi };
const char* to_string(ConeKind c);
struct Membership {
  bool member = false;
  std::optional<PicClass> certificate;  // violating class on failure
  std::string violated_constraint;      // "K<=0", "e>=0", "2B+K>=0", "2C+K>=0"
};
Membership cone_membership(const PicClass& L, ConeKind cone);

struct NoetherReport {
  int k = 0;
  long degree_bound = 0;
  long counts[4] = {0, 0, 0, 0};  // by D^2 = 1, 0, -1, -2
  long violations = 0;
  std::vector<PicClass> counterexamples;
};
// Numerical rational classes with D^2 in {1,0,-1,-2}, 2 <= d <= bound, m sorted descending and
// nonnegative; every one must satisfy m1 + m2 + m3 > d.
NoetherReport noether_check(long degree_bound, int k);

// Is D in the W-orbit of e_1 / h - e_1 / h? Exact for classes produced by the enumerators.
bool is_orbit_line(const PicClass& D);
bool is_orbit_conic(const PicClass& D);
bool is_orbit_cubic(const PicClass& D);

}  // namespace weylgale
