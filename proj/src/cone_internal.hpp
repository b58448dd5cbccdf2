#pragma once
// Helpers shared by conegeom and wallscan.

#include "weylgale/piclattice.hpp"
#include "weylgale/weylgroup.hpp"

#include <optional>
#include <vector>

namespace weylgale::detail {

inline void require_surface(const PicClass& D, const char* what) {
  if (D.ctx().n != 2) throw DimensionError(std::string(what) + " needs a surface context (n = 2)");
}

// Smallest positive integer multiple of a rational class with coprime integer coefficients.
PicClass primitive_multiple(const PicClass& D);

// A (-1)-class e with D.e < 0, or nothing when D pairs nonnegatively with every (-1)-class.
// Exact: uses the Cremona reduction (the reduced form of such a D is in the fundamental domain).
std::optional<PicClass> find_negative_line(const PicClass& D);

// Reduced form in the fundamental domain: sorted m_1 >= ... >= m_k >= 0 and d >= m_1 + m_2 + m_3.
bool in_fundamental_domain(const PicClass& c);

}  // namespace weylgale::detail
