#include "weylgale/linalg.hpp"

#include <utility>

namespace weylgale {

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows) {
  r_ = rows.size();
  c_ = r_ ? rows[0].size() : 0;
  a_.reserve(r_ * c_);
  for (const auto& row : rows) {
    if (row.size() != c_) throw DimensionError("ragged matrix");
    for (const auto& x : row) a_.push_back(x);
    for (auto it = a_.end() - static_cast<long>(c_); it != a_.end(); ++it) it->canonicalize();
  }
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::row(size_t i) const {
  return std::vector<Rational>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

std::vector<Rational> Matrix::col(size_t j) const {
  std::vector<Rational> v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<std::vector<Rational>> Matrix::to_rows() const {
  std::vector<std::vector<Rational>> out;
  for (size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw DimensionError("matrix product shape mismatch");
  Matrix p(r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t l = 0; l < c_; ++l) {
      const Rational& x = (*this)(i, l);
      if (x == 0) continue;
      for (size_t j = 0; j < o.c_; ++j) p(i, j) += x * o(l, j);
    }
  return p;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != c_) throw DimensionError("matrix-vector shape mismatch");
  std::vector<Rational> out(r_, Rational(0));
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionError("matrix difference shape mismatch");
  Matrix d(*this);
  for (size_t i = 0; i < a_.size(); ++i) d.a_[i] -= o.a_[i];
  return d;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix d(*this);
  for (auto& x : d.a_) x *= s;
  return d;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
  Matrix m(*this);
  std::vector<size_t> piv;
  size_t pr = 0;
  for (size_t col = 0; col < c_ && pr < r_; ++col) {
    size_t sel = r_;
    for (size_t i = pr; i < r_; ++i)
      if (m(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel == r_) continue;
    if (sel != pr)
      for (size_t j = 0; j < c_; ++j) std::swap(m(sel, j), m(pr, j));
    Rational inv = 1 / m(pr, col);
    for (size_t j = 0; j < c_; ++j) m(pr, j) *= inv;
    for (size_t i = 0; i < r_; ++i) {
      if (i == pr || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (size_t j = 0; j < c_; ++j) m(i, j) -= f * m(pr, j);
    }
    piv.push_back(col);
    ++pr;
  }
  if (pivots) *pivots = piv;
  return m;
}

size_t Matrix::rank() const {
  std::vector<size_t> p;
  rref(&p);
  return p.size();
}

std::vector<std::vector<Rational>> Matrix::kernel() const {
  std::vector<size_t> piv;
  Matrix R = rref(&piv);
  std::vector<bool> is_piv(c_, false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t f = 0; f < c_; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> v(c_, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational Matrix::det() const {
  if (r_ != c_) throw DimensionError("determinant of a non-square matrix");
  const size_t n = r_;
  if (n == 0) return 1;
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Integer l = common_denominator(row(i));
    scale *= Rational(l);
    for (size_t j = 0; j < n; ++j) {
      Rational x = (*this)(i, j) * Rational(l);
      a[i][j] = x.get_num();
    }
  }
  int sign = 1;
  Integer prev = 1;
  for (size_t kk = 0; kk + 1 < n; ++kk) {
    if (a[kk][kk] == 0) {
      size_t sw = kk + 1;
      while (sw < n && a[sw][kk] == 0) ++sw;
      if (sw == n) return 0;
      std::swap(a[sw], a[kk]);
      sign = -sign;
    }
    for (size_t i = kk + 1; i < n; ++i)
      for (size_t j = kk + 1; j < n; ++j) {
        Integer t = a[i][j] * a[kk][kk] - a[i][kk] * a[kk][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[kk][kk];
  }
  Rational d(a[n - 1][n - 1]);
  if (sign < 0) d = -d;
  return d / scale;
}

Matrix Matrix::inverse() const {
  if (r_ != c_) throw DimensionError("inverse of a non-square matrix");
  const size_t n = r_;
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> piv;
  Matrix R = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DegenerateError("matrix is singular");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
  return inv;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
  Matrix s(idx.size(), c_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < c_; ++j) s(i, j) = (*this)(idx[i], j);
  return s;
}

LinearMap::LinearMap(const LatticeContext& src, const LatticeContext& dst, Matrix m)
    : src_(src), dst_(dst), m_(std::move(m)) {
  if (m_.rows() != static_cast<size_t>(dst.k + 1) || m_.cols() != static_cast<size_t>(src.k + 1))
    throw DimensionError("linear map matrix has wrong shape");
}

PicClass LinearMap::operator()(const PicClass& v) const {
  if (!(v.ctx() == src_)) throw ContextError("linear map applied to a class from another lattice");
  return PicClass::from_basis(dst_, m_ * v.basis_coords());
}

LinearMap LinearMap::inverse() const { return LinearMap(dst_, src_, m_.inverse()); }

LinearMap LinearMap::then(const LinearMap& after) const {
  if (!(after.src_ == dst_)) throw ContextError("composition of incompatible maps");
  return LinearMap(src_, after.dst_, after.m_ * m_);
}

Matrix coble_gram(const LatticeContext& ctx) {
  Matrix g(static_cast<size_t>(ctx.k + 1), static_cast<size_t>(ctx.k + 1));
  g(0, 0) = ctx.n - 1;
  for (int i = 1; i <= ctx.k; ++i) g(static_cast<size_t>(i), static_cast<size_t>(i)) = -1;
  return g;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l = common_denominator(v);
  std::vector<Integer> z;
  for (const auto& q : v) {
    Rational x = q * Rational(l);
    z.push_back(x.get_num());
  }
  Integer g = content(z);
  if (g != 0)
    for (auto& x : z) x /= g;
  return z;
}

}  // namespace weylgale
