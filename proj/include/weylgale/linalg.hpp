#pragma once
// Dense exact-rational matrices and linear maps between Picard lattices.

#include "weylgale/piclattice.hpp"

#include <vector>

namespace weylgale {

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}
  explicit Matrix(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Rational& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  std::vector<Rational> row(size_t i) const;
  std::vector<Rational> col(size_t j) const;
  std::vector<std::vector<Rational>> to_rows() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool is_zero() const;

  // Reduced row echelon form; pivots are taken leftmost column first, smallest row index first.
  Matrix rref(std::vector<size_t>* pivots = nullptr) const;
  size_t rank() const;
  // Basis of {x : M x = 0}, one vector per free column (free entry 1), in free-column order.
  std::vector<std::vector<Rational>> kernel() const;
  // Fraction-free (Bareiss) determinant of a square matrix.
  Rational det() const;
  Matrix inverse() const;  // throws DegenerateError when singular
  Matrix select_rows(const std::vector<size_t>& idx) const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

// Linear map Pic(source) (x) Q -> Pic(target) (x) Q. The matrix acts on plain-basis
// coordinates: column j is the image of the j-th basis vector (h or e_j), expressed
// in the target's plain basis (H, E_1..E_k).
class LinearMap {
 public:
  LinearMap(const LatticeContext& src, const LatticeContext& dst, Matrix m);
  const LatticeContext& source() const { return src_; }
  const LatticeContext& target() const { return dst_; }
  const Matrix& matrix() const { return m_; }
  PicClass operator()(const PicClass& v) const;
  LinearMap inverse() const;
  LinearMap then(const LinearMap& after) const;  // after o this
  bool operator==(const LinearMap& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && m_ == o.m_;
  }

 private:
  LatticeContext src_, dst_;
  Matrix m_;
};

// Gram matrix of the Coble pairing on the plain basis.
Matrix coble_gram(const LatticeContext& ctx);

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace weylgale
