#pragma once
// Picard lattice of Bl_k P^n with basis {H, E_1..E_k}.
//
// A class is stored as (d; m_1..m_k), meaning d*H - sum m_i E_i. The same
// convention is used for the surface (n = 2), where H, E_i are written h, e_i.

#include "weylgale/errors.hpp"
#include "weylgale/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace weylgale {

struct LatticeContext {
  int n = 2;
  int k = 0;
  int rank() const { return k + 1; }
  bool operator==(const LatticeContext&) const = default;
};

LatticeContext make_context(int n, int k);
// Surface lattices Bl_k P^2 for any k >= 2 (the small cases used by the cone lemmas).
LatticeContext surface_context(int k);

class PicClass {
 public:
  PicClass() = default;
  PicClass(const LatticeContext& ctx, std::vector<Rational> coeffs);
  static PicClass zero(const LatticeContext& ctx);
  // From coordinates in the plain basis (H, E_1..E_k), i.e. (d, -m_1, ..., -m_k).
  static PicClass from_basis(const LatticeContext& ctx, const std::vector<Rational>& coords);

  const LatticeContext& ctx() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& d() const { return c_[0]; }
  const Rational& m(int i) const { return c_.at(static_cast<size_t>(i)); }  // 1-based
  std::vector<Rational> basis_coords() const;
  bool integral() const;

  PicClass operator+(const PicClass& o) const;
  PicClass operator-(const PicClass& o) const;
  PicClass operator-() const;
  PicClass scaled(const Rational& s) const;

  bool operator==(const PicClass& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const PicClass& o) const { return !(*this == o); }
  // Lexicographic on the coefficient tuple (d, m_1, ..., m_k).
  bool operator<(const PicClass& o) const;

 private:
  LatticeContext ctx_;
  std::vector<Rational> c_;
};

PicClass H(const LatticeContext& ctx);
PicClass E(const LatticeContext& ctx, int i);  // 1-based
PicClass sum_E(const LatticeContext& ctx);
PicClass canonical_class(const LatticeContext& ctx);

// Convenience for integer literals: cls(ctx, {d, m1, ..., mk}).
PicClass cls(const LatticeContext& ctx, std::initializer_list<long long> coeffs);

void require_same_context(const PicClass& a, const PicClass& b);

Rational coble_pair(const PicClass& a, const PicClass& b);
inline Rational square(const PicClass& a) { return coble_pair(a, a); }

// Symmetric form given by its Gram matrix on the plain basis.
class BilinearForm {
 public:
  BilinearForm(const LatticeContext& ctx, std::vector<std::vector<Rational>> gram);
  Rational operator()(const PicClass& a, const PicClass& b) const;
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  const LatticeContext& ctx() const { return ctx_; }

 private:
  LatticeContext ctx_;
  std::vector<std::vector<Rational>> gram_;
};

BilinearForm coble_form(const LatticeContext& ctx);
BilinearForm pairing_family(const LatticeContext& ctx, const Rational& c);

struct ChernTriple {
  int rank = 0;
  PicClass c1;
  Rational ch2;
};

Rational chi_line_bundle(const PicClass& D);
Rational chi_sheaf(const ChernTriple& t);
int moduli_dimension(int k);

std::string to_string(const PicClass& D);  // "(d; m1, ..., mk)"

}  // namespace weylgale
