#pragma once
// Integer search kernels shared by the curve and wall enumerators. All bounds are
// square-root free: a Cauchy-Schwarz cut |sum l_i y_i| <= sqrt(R * Y) is applied as
// floor(sqrt(R * Y)) which is exact for integer-valued sums.

#include "weylgale/rational.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace weylgale::detail {

using i128 = __int128;
using ll = long long;

inline i128 isqrt128(i128 v) {
  if (v < 0) throw std::domain_error("isqrt128 of negative value");
  if (v < 2) return v;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline i128 to_i128(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coefficient too large for the integer search kernel");
  return static_cast<i128>(z.get_si());
}

// m in Z^k with sum m^2 = Q, sum m = S and, when y != nullptr, sum m_i y_i >= pmin.
inline void enumerate_m(int k, i128 Q, i128 S, const std::vector<ll>* y, i128 pmin,
                        const std::function<void(const std::vector<ll>&)>& out) {
  if (Q < 0) return;
  std::vector<i128> yrest(static_cast<size_t>(k) + 1, 0);
  if (y)
    for (int i = k - 1; i >= 0; --i)
      yrest[static_cast<size_t>(i)] = yrest[static_cast<size_t>(i) + 1] + static_cast<i128>((*y)[static_cast<size_t>(i)]) * (*y)[static_cast<size_t>(i)];
  std::vector<ll> m(static_cast<size_t>(k), 0);
  std::function<void(int, i128, i128, i128)> rec = [&](int i, i128 q, i128 s, i128 need) {
    const int c = k - i;
    if (c == 0) {
      if (q == 0 && s == 0 && (!y || need <= 0)) out(m);
      return;
    }
    if (s * s > static_cast<i128>(c) * q) return;
    if (y && need > 0 && need * need > q * yrest[static_cast<size_t>(i)]) return;
    const i128 r = isqrt128(q);
    for (i128 v = -r; v <= r; ++v) {
      const i128 q2 = q - v * v, s2 = s - v;
      const int c2 = c - 1;
      if (s2 * s2 > static_cast<i128>(c2) * q2) continue;
      i128 need2 = need;
      if (y) need2 -= v * (*y)[static_cast<size_t>(i)];
      m[static_cast<size_t>(i)] = static_cast<ll>(v);
      rec(i + 1, q2, s2, need2);
    }
    m[static_cast<size_t>(i)] = 0;
  };
  rec(0, Q, S, pmin);
}

struct Functional {
  std::vector<ll> y;  // value = offset + sum l_i y_i
  i128 offset = 0;
};

// Odd l in Z^k with sum l^2 = Q. feasible(lo, hi) receives, for every functional, an
// interval guaranteed to contain its final value on the current subtree.
inline void enumerate_odd(int k, i128 Q, const std::vector<Functional>& fs,
                          const std::function<bool(const std::vector<i128>&, const std::vector<i128>&)>& feasible,
                          const std::function<void(const std::vector<ll>&)>& out) {
  if (Q < k || (Q - k) % 8 != 0) return;  // odd squares are 1 mod 8
  const size_t nf = fs.size();
  std::vector<std::vector<i128>> yrest(nf, std::vector<i128>(static_cast<size_t>(k) + 1, 0));
  for (size_t j = 0; j < nf; ++j)
    for (int i = k - 1; i >= 0; --i) {
      i128 yi = fs[j].y[static_cast<size_t>(i)];
      yrest[j][static_cast<size_t>(i)] = yrest[j][static_cast<size_t>(i) + 1] + yi * yi;
    }
  std::vector<ll> l(static_cast<size_t>(k), 1);
  std::vector<i128> part(nf), lo(nf), hi(nf);
  for (size_t j = 0; j < nf; ++j) part[j] = fs[j].offset;
  std::function<void(int, i128)> rec = [&](int i, i128 q) {
    const int c = k - i;
    if (c == 0) {
      if (q == 0) out(l);
      return;
    }
    if (q < c || (q - c) % 8 != 0) return;
    for (size_t j = 0; j < nf; ++j) {
      i128 rad = isqrt128(q * yrest[j][static_cast<size_t>(i)]);
      lo[j] = part[j] - rad;
      hi[j] = part[j] + rad;
    }
    if (!feasible(lo, hi)) return;
    // the remaining c-1 entries need at least c-1 in squares
    i128 r = isqrt128(q - (c - 1));
    if (r % 2 == 0) --r;
    for (i128 v = -r; v <= r; v += 2) {
      l[static_cast<size_t>(i)] = static_cast<ll>(v);
      for (size_t j = 0; j < nf; ++j) part[j] += v * fs[j].y[static_cast<size_t>(i)];
      rec(i + 1, q - v * v);
      for (size_t j = 0; j < nf; ++j) part[j] -= v * fs[j].y[static_cast<size_t>(i)];
    }
    l[static_cast<size_t>(i)] = 1;
  };
  rec(0, Q);
}

}  // namespace weylgale::detail
