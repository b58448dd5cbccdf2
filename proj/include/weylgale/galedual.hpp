#pragma once
// Gale duality of ordered point configurations over Q.

#include "weylgale/linalg.hpp"

#include <string>
#include <vector>

namespace weylgale {

struct PointConfiguration {
  int s = 0;  // ambient P^s
  int k = 0;  // number of points
  Matrix coords;  // k x (s+1), row i = homogeneous coordinates of point i

  static PointConfiguration from_rows(const std::vector<std::vector<Rational>>& rows);
};

// Throws DegenerateError when the shape/rank invariants fail.
void validate(const PointConfiguration& cfg);

bool general_position(const PointConfiguration& cfg);
PointConfiguration gale_dual(const PointConfiguration& cfg);
// B^T A as a matrix; zero for a valid dual pair.
Matrix duality_product(const PointConfiguration& A, const PointConfiguration& B);

// Marked normal form: first s+2 rows become e_1..e_{s+1}, (1,...,1); every other row
// is scaled so its first nonzero entry is 1.
PointConfiguration projective_normal_form(const PointConfiguration& cfg);
bool projective_equivalent(const PointConfiguration& c1, const PointConfiguration& c2);
bool dual_round_trip(const PointConfiguration& cfg);

// Finite Cremona test: for every (s+1)-subset, move it to the coordinate simplex,
// apply the standard inversion x_i -> 1/x_i to the other points and require the
// image configuration to stay in general position. Full Cremona generality is an
// infinite condition and is not decided here.
bool cremona_batch_general(const PointConfiguration& cfg);

PointConfiguration parse_csv_configuration(const std::string& text);

}  // namespace weylgale
