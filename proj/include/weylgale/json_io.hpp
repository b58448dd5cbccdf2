#pragma once
// JSON encodings. Rationals are numbers when integral and "p/q" strings otherwise.

#include "weylgale/galedual.hpp"
#include "weylgale/morimap.hpp"
#include "weylgale/wallscan.hpp"

#include <json.hpp>

namespace weylgale {

using Json = nlohmann::json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);  // throws std::invalid_argument

// {"n": n, "k": k, "coeffs": [d, m1, ..., mk]}
Json class_json(const PicClass& D);
PicClass class_from_json(const Json& j);

Json word_json(const WeylWord& w);
WeylWord word_from_json(const Json& j);

// {"s": s, "k": k, "rows": [[...], ...]}
Json configuration_json(const PointConfiguration& cfg);
PointConfiguration configuration_from_json(const Json& j);

Json matrix_json(const Matrix& m);
Json curve_json(const CurveClass& c);
Json wall_json(const Wall& w);
Json crossing_json(const WallCrossing& c);
Json membership_json(const Membership& m);
// nodes {id, rep}, edges {from, to, wall, kind, dims}
Json graph_json(const ChamberGraph& g);
// {"facets": [{normal_on_S, image_on_X, dual_curve}]}
Json cone_json(const MoriCone& c);

}  // namespace weylgale
