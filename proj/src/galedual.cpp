#include "weylgale/galedual.hpp"

#include <sstream>

namespace weylgale {

PointConfiguration PointConfiguration::from_rows(const std::vector<std::vector<Rational>>& rows) {
  PointConfiguration c;
  c.coords = Matrix(rows);
  c.k = static_cast<int>(c.coords.rows());
  c.s = static_cast<int>(c.coords.cols()) - 1;
  return c;
}

void validate(const PointConfiguration& cfg) {
  if (cfg.s < 0 || cfg.coords.rows() != static_cast<size_t>(cfg.k) ||
      cfg.coords.cols() != static_cast<size_t>(cfg.s + 1))
    throw DegenerateError("configuration shape does not match (s, k)");
  for (size_t i = 0; i < cfg.coords.rows(); ++i) {
    bool zero = true;
    for (size_t j = 0; j < cfg.coords.cols(); ++j) zero = zero && cfg.coords(i, j) == 0;
    if (zero) throw DegenerateError("configuration has a zero row");
  }
  if (cfg.coords.rank() != static_cast<size_t>(cfg.s + 1)) throw DegenerateError("configuration is not spanning");
}

namespace {

template <class F>
bool for_each_subset(int n, int r, F&& f) {
  std::vector<size_t> idx(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = static_cast<size_t>(i);
  if (r > n) return true;
  for (;;) {
    if (!f(idx)) return false;
    int i = r - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == static_cast<size_t>(n - r + i)) --i;
    if (i < 0) return true;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

bool general_position(const PointConfiguration& cfg) {
  if (cfg.coords.rows() != static_cast<size_t>(cfg.k) || cfg.coords.cols() != static_cast<size_t>(cfg.s + 1))
    return false;
  return for_each_subset(cfg.k, cfg.s + 1, [&](const std::vector<size_t>& idx) {
    return cfg.coords.select_rows(idx).det() != 0;
  });
}

PointConfiguration gale_dual(const PointConfiguration& cfg) {
  validate(cfg);
  if (!general_position(cfg)) throw DegenerateError("configuration is not in general linear position");
  if (cfg.k < cfg.s + 2) throw DegenerateError("Gale duality needs k >= s + 2");
  auto ker = cfg.coords.transpose().kernel();  // vectors in Q^k
  const size_t cols = ker.size();
  if (cols != static_cast<size_t>(cfg.k - cfg.s - 1)) throw DegenerateError("unexpected kernel dimension");
  PointConfiguration d;
  d.k = cfg.k;
  d.s = static_cast<int>(cols) - 1;
  d.coords = Matrix(static_cast<size_t>(cfg.k), cols);
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < static_cast<size_t>(cfg.k); ++i) d.coords(i, j) = ker[j][i];
  return d;
}

Matrix duality_product(const PointConfiguration& A, const PointConfiguration& B) {
  return B.coords.transpose() * A.coords;
}

PointConfiguration projective_normal_form(const PointConfiguration& cfg) {
  const size_t s1 = static_cast<size_t>(cfg.s + 1);
  if (cfg.k < cfg.s + 2) throw DegenerateError("normal form needs at least s+2 points");
  std::vector<size_t> base;
  for (size_t i = 0; i < s1; ++i) base.push_back(i);
  Matrix M = cfg.coords.select_rows(base);
  if (M.det() == 0) throw DegenerateError("first s+1 points are dependent");
  Matrix Minv = M.inverse();
  Matrix X = cfg.coords * Minv;  // first s+1 rows become the unit vectors
  std::vector<Rational> lam = X.row(s1);
  for (const auto& l : lam)
    if (l == 0) throw DegenerateError("point s+2 lies on a coordinate hyperplane of the first s+1");
  for (size_t i = 0; i < X.rows(); ++i)
    for (size_t j = 0; j < s1; ++j) X(i, j) /= lam[j];
  for (size_t i = 0; i < X.rows(); ++i) {
    Rational lead = 0;
    for (size_t j = 0; j < s1 && lead == 0; ++j) lead = X(i, j);
    if (lead == 0) throw DegenerateError("zero row in configuration");
    for (size_t j = 0; j < s1; ++j) X(i, j) /= lead;
  }
  PointConfiguration out{cfg.s, cfg.k, X};
  return out;
}

bool projective_equivalent(const PointConfiguration& c1, const PointConfiguration& c2) {
  if (c1.s != c2.s || c1.k != c2.k) return false;
  return projective_normal_form(c1).coords == projective_normal_form(c2).coords;
}

bool dual_round_trip(const PointConfiguration& cfg) {
  return projective_equivalent(gale_dual(gale_dual(cfg)), cfg);
}

bool cremona_batch_general(const PointConfiguration& cfg) {
  if (!general_position(cfg)) return false;
  const int s1 = cfg.s + 1;
  return for_each_subset(cfg.k, s1, [&](const std::vector<size_t>& idx) {
    Matrix M = cfg.coords.select_rows(idx);
    Matrix X = cfg.coords * M.inverse();
    std::vector<bool> in(static_cast<size_t>(cfg.k), false);
    for (size_t i : idx) in[i] = true;
    for (size_t i = 0; i < X.rows(); ++i) {
      if (in[i]) continue;
      for (size_t j = 0; j < X.cols(); ++j) {
        if (X(i, j) == 0) return false;  // point on a coordinate hyperplane
        X(i, j) = 1 / X(i, j);
      }
    }
    PointConfiguration img{cfg.s, cfg.k, X};
    return general_position(img);
  });
}

PointConfiguration parse_csv_configuration(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::vector<Rational> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_rational(cell));
    if (!rows.empty() && row.size() != rows[0].size()) throw DegenerateError("ragged CSV configuration");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DegenerateError("empty configuration");
  return PointConfiguration::from_rows(rows);
}

}  // namespace weylgale
