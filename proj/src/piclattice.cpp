#include "weylgale/piclattice.hpp"

#include <sstream>

namespace weylgale {

LatticeContext make_context(int n, int k) {
  if (n < 2) throw DimensionError("n must be at least 2, got " + std::to_string(n));
  if (k < n + 1)
    throw DimensionError("k must be at least n+1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  return LatticeContext{n, k};
}

LatticeContext surface_context(int k) {
  if (k < 2) throw DimensionError("surface lattices need k >= 2, got " + std::to_string(k));
  return LatticeContext{2, k};
}

PicClass::PicClass(const LatticeContext& ctx, std::vector<Rational> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ctx.k + 1)
    throw DimensionError("class needs " + std::to_string(ctx.k + 1) + " coefficients, got " +
                         std::to_string(c_.size()));
  for (auto& q : c_) q.canonicalize();  // mpq_class(p, q) does not reduce
}

PicClass PicClass::zero(const LatticeContext& ctx) {
  return PicClass(ctx, std::vector<Rational>(static_cast<size_t>(ctx.k + 1), Rational(0)));
}

PicClass PicClass::from_basis(const LatticeContext& ctx, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != ctx.k + 1) throw DimensionError("coordinate vector has wrong length");
  std::vector<Rational> c(coords);
  for (size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return PicClass(ctx, std::move(c));
}

std::vector<Rational> PicClass::basis_coords() const {
  std::vector<Rational> v(c_);
  for (size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
  return v;
}

bool PicClass::integral() const {
  for (const auto& q : c_)
    if (!is_integral(q)) return false;
  return true;
}

void require_same_context(const PicClass& a, const PicClass& b) {
  if (!(a.ctx() == b.ctx()))
    throw ContextError("classes live in different lattices: (" + std::to_string(a.ctx().n) + "," +
                       std::to_string(a.ctx().k) + ") vs (" + std::to_string(b.ctx().n) + "," +
                       std::to_string(b.ctx().k) + ")");
}

PicClass PicClass::operator+(const PicClass& o) const {
  require_same_context(*this, o);
  std::vector<Rational> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return PicClass(ctx_, std::move(r));
}

PicClass PicClass::operator-(const PicClass& o) const {
  require_same_context(*this, o);
  std::vector<Rational> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return PicClass(ctx_, std::move(r));
}

PicClass PicClass::operator-() const { return scaled(Rational(-1)); }

PicClass PicClass::scaled(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& q : r) q *= s;
  return PicClass(ctx_, std::move(r));
}

bool PicClass::operator<(const PicClass& o) const {
  if (ctx_.n != o.ctx_.n) return ctx_.n < o.ctx_.n;
  if (ctx_.k != o.ctx_.k) return ctx_.k < o.ctx_.k;
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

PicClass H(const LatticeContext& ctx) {
  auto v = PicClass::zero(ctx).coeffs();
  v[0] = 1;
  return PicClass(ctx, v);
}

PicClass E(const LatticeContext& ctx, int i) {
  if (i < 1 || i > ctx.k) throw IndexError("exceptional index out of range: " + std::to_string(i));
  auto v = PicClass::zero(ctx).coeffs();
  v[static_cast<size_t>(i)] = -1;
  return PicClass(ctx, v);
}

PicClass sum_E(const LatticeContext& ctx) {
  std::vector<Rational> v(static_cast<size_t>(ctx.k + 1), Rational(-1));
  v[0] = 0;
  return PicClass(ctx, v);
}

PicClass canonical_class(const LatticeContext& ctx) {
  // K = -(n+1) H + (n-1) sum E_i
  std::vector<Rational> v(static_cast<size_t>(ctx.k + 1), Rational(-(ctx.n - 1)));
  v[0] = -(ctx.n + 1);
  return PicClass(ctx, v);
}

PicClass cls(const LatticeContext& ctx, std::initializer_list<long long> coeffs) {
  std::vector<Rational> v;
  for (long long c : coeffs) v.emplace_back(static_cast<long>(c));
  return PicClass(ctx, std::move(v));
}

Rational coble_pair(const PicClass& a, const PicClass& b) {
  require_same_context(a, b);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  Rational r = Rational(a.ctx().n - 1) * x[0] * y[0];
  for (size_t i = 1; i < x.size(); ++i) r -= x[i] * y[i];
  return r;
}

BilinearForm::BilinearForm(const LatticeContext& ctx, std::vector<std::vector<Rational>> gram)
    : ctx_(ctx), gram_(std::move(gram)) {
  const size_t r = static_cast<size_t>(ctx.k + 1);
  if (gram_.size() != r) throw DimensionError("Gram matrix has wrong size");
  for (const auto& row : gram_)
    if (row.size() != r) throw DimensionError("Gram matrix has wrong size");
}

Rational BilinearForm::operator()(const PicClass& a, const PicClass& b) const {
  if (!(a.ctx() == ctx_) || !(b.ctx() == ctx_)) throw ContextError("form evaluated on foreign classes");
  auto x = a.basis_coords();
  auto y = b.basis_coords();
  Rational r = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) r += x[i] * gram_[i][j] * y[j];
  }
  return r;
}

BilinearForm coble_form(const LatticeContext& ctx) { return pairing_family(ctx, Rational(0)); }

BilinearForm pairing_family(const LatticeContext& ctx, const Rational& c) {
  const size_t r = static_cast<size_t>(ctx.k + 1);
  std::vector<std::vector<Rational>> g(r, std::vector<Rational>(r, Rational(0)));
  const Rational np1(ctx.n + 1);
  g[0][0] = np1 * np1 * c + Rational(ctx.n - 1);
  for (size_t i = 1; i < r; ++i) {
    g[0][i] = g[i][0] = np1 * c;
    for (size_t j = 1; j < r; ++j) g[i][j] = (i == j) ? Rational(c - 1) : c;
  }
  return BilinearForm(ctx, std::move(g));
}

Rational chi_line_bundle(const PicClass& D) {
  if (D.ctx().n != 2) throw DimensionError("chi_line_bundle needs a surface context");
  const auto K = canonical_class(D.ctx());
  return Rational(1) + (square(D) - coble_pair(D, K)) / 2;
}

Rational chi_sheaf(const ChernTriple& t) {
  if (t.c1.ctx().n != 2) throw DimensionError("chi_sheaf needs a surface context");
  if (t.rank < 0) throw DomainError("rank must be non-negative");
  const auto K = canonical_class(t.c1.ctx());
  return t.ch2 - coble_pair(t.c1, K) / 2 + Rational(t.rank);
}

int moduli_dimension(int k) {
  if (k < 6) throw DimensionError("moduli dimension formula needs k >= 6");
  return k - 4;
}

std::string to_string(const PicClass& D) {
  std::ostringstream os;
  os << "(" << to_string(D.d()) << ";";
  for (int i = 1; i <= D.ctx().k; ++i) os << (i == 1 ? " " : ", ") << to_string(D.m(i));
  os << ")";
  return os.str();
}

}  // namespace weylgale
