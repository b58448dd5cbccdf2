#pragma once
// The Weyl group W_{n,k} acting on the Picard lattice.

#include "weylgale/linalg.hpp"
#include "weylgale/piclattice.hpp"

#include <vector>

namespace weylgale {

// Generator indices: 0 is the reflection in alpha_0 = H - E_1 - ... - E_{n+1};
// i >= 1 swaps E_i and E_{i+1}.
using WeylWord = std::vector<int>;

struct Root {
  PicClass cls;
};
Root make_root(const PicClass& alpha);  // RootError unless (a,a) = -2 and (a,K) = 0

PicClass reflect(const PicClass& alpha, const PicClass& v);
PicClass reflect(const Root& alpha, const PicClass& v);
PicClass alpha_I(const LatticeContext& ctx, const std::vector<int>& I);
PicClass cremona(const std::vector<int>& I, const PicClass& v);
PicClass simple_root(const LatticeContext& ctx, int i);

PicClass apply_generator(int i, const PicClass& v);
// Generators are applied in the order they appear: w[0] first.
PicClass apply_word(const WeylWord& w, const PicClass& v);
WeylWord inverse_word(const WeylWord& w);
// Word in s_1..s_{k-1} realizing the transposition of E_i and E_j.
WeylWord transposition_word(int i, int j);
// Word for the permutation reversing E_1..E_k.
WeylWord reversal_word(int k);

Matrix generator_matrix(const LatticeContext& ctx, int i);  // acts on plain-basis coordinates
bool generators_adjacent(const LatticeContext& ctx, int i, int j);

struct RelationCheck {
  int i = 0, j = 0;
  int order = 0;  // 1 for s_i^2, else 2 or 3
  bool pass = false;
};
struct RelationReport {
  std::vector<RelationCheck> checks;
  std::vector<std::pair<int, int>> edges;  // Dynkin diagram edges
  bool fixes_K = false;
  bool all_pass = false;
};
RelationReport verify_relations(const LatticeContext& ctx);

std::vector<PicClass> orbit_enumerate(const PicClass& seed, long degree_bound);

struct Reduction {
  PicClass canonical;
  WeylWord word;         // apply_word(word, input) == canonical
  bool stalled = false;  // stopped because the next s_0 step would make d negative
};
Reduction cremona_reduce(const PicClass& D);

enum class OrbitType { Cubic, Conic, Line, MinusTwo, Other };
const char* to_string(OrbitType t);
OrbitType match_canonical(const PicClass& canonical);
OrbitType orbit_classify(const PicClass& D);

// phi_0 : K_Y^perp -> K_X^perp, Y = Bl_k P^s, X = Bl_k P^n with k = n + s + 2.
PicClass phi0(const PicClass& v, int n);

// Maps of the parametric family rho(e_i) = aH - b sum E_j - lambda E_{k+1-i}.
LinearMap equivariant_map(const Rational& a, const Rational& b, int s, int n);

// Reversal of exceptional indices E_j <-> E_{k+1-j} on a lattice.
LinearMap index_reversal(const LatticeContext& ctx);

}  // namespace weylgale
