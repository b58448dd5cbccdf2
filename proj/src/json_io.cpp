#include "weylgale/json_io.hpp"

#include <stdexcept>

namespace weylgale {

Json rational_json(const Rational& x) {
  Rational q(x);
  q.canonicalize();
  if (is_integral(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Json class_json(const PicClass& D) {
  Json c = Json::array();
  for (const auto& q : D.coeffs()) c.push_back(rational_json(q));
  return Json{{"n", D.ctx().n}, {"k", D.ctx().k}, {"coeffs", c}};
}

PicClass class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("coeffs"))
    throw std::invalid_argument("class JSON needs \"k\" and \"coeffs\"");
  const int n = j.value("n", 2), k = j.at("k").get<int>();
  const LatticeContext ctx = n == 2 ? surface_context(k) : make_context(n, k);
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return PicClass(ctx, c);
}

Json word_json(const WeylWord& w) { return Json(w); }

WeylWord word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word JSON must be an array of generator indices");
  return j.get<WeylWord>();
}

Json configuration_json(const PointConfiguration& cfg) {
  Json rows = Json::array();
  for (const auto& r : cfg.coords.to_rows()) {
    Json row = Json::array();
    for (const auto& q : r) row.push_back(rational_json(q));
    rows.push_back(row);
  }
  return Json{{"s", cfg.s}, {"k", cfg.k}, {"rows", rows}};
}

PointConfiguration configuration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("configuration JSON needs \"rows\"");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j.at("rows")) {
    auto& row = rows.emplace_back();
    for (const auto& x : r) row.push_back(rational_from_json(x));
  }
  auto cfg = PointConfiguration::from_rows(rows);
  if (j.contains("s") && j.at("s").get<int>() != cfg.s) throw std::invalid_argument("\"s\" disagrees with the row width");
  if (j.contains("k") && j.at("k").get<int>() != cfg.k) throw std::invalid_argument("\"k\" disagrees with the row count");
  return cfg;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) {
    Json row = Json::array();
    for (const auto& q : r) row.push_back(rational_json(q));
    rows.push_back(row);
  }
  return rows;
}

Json curve_json(const CurveClass& c) {
  Json co = Json::array();
  for (const auto& z : c.coeffs) co.push_back(rational_json(Rational(z)));
  return Json{{"n", c.ctx.n}, {"k", c.ctx.k}, {"coeffs", co}, {"text", to_string(c)}};
}

Json wall_json(const Wall& w) {
  return Json{{"D", class_json(w.D)}, {"normal", class_json(w.normal)}, {"square", rational_json(w.square)}};
}

Json crossing_json(const WallCrossing& c) {
  return Json{{"wall", wall_json(c.wall)},
              {"kind", to_string(c.kind)},
              {"dims", Json::array({rational_json(c.dimP_D), rational_json(c.dimP_KD)})},
              {"iso_side", to_string(c.iso_side)},
              {"blown_up_side", to_string(c.blown_up_side)}};
}

Json membership_json(const Membership& m) {
  Json j{{"member", m.member}};
  if (m.certificate) j["certificate"] = class_json(*m.certificate);
  if (!m.violated_constraint.empty()) j["violated_constraint"] = m.violated_constraint;
  return j;
}

Json graph_json(const ChamberGraph& g) {
  Json nodes = Json::array(), edges = Json::array(), exits = Json::array();
  for (const auto& nd : g.nodes) {
    Json facets = Json::array();
    for (const auto& [w, s] : nd.facets) facets.push_back(Json{{"wall", class_json(w.D)}, {"sign", s}});
    nodes.push_back(Json{{"id", nd.id},
                         {"rep", class_json(nd.rep)},
                         {"expanded", nd.expanded},
                         {"touches_boundary", nd.touches_boundary},
                         {"facets", facets}});
  }
  for (const auto& e : g.edges)
    edges.push_back(Json{{"from", e.from},
                         {"to", e.to},
                         {"wall", class_json(e.crossing.wall.D)},
                         {"kind", to_string(e.crossing.kind)},
                         {"dims", Json::array({rational_json(e.crossing.dimP_D), rational_json(e.crossing.dimP_KD)})},
                         {"from_sign", e.from_sign}});
  for (const auto& x : g.exits) exits.push_back(Json{{"node", x.node}, {"wall", class_json(x.wall.D)}});
  return Json{{"nodes", nodes}, {"edges", edges}, {"exits", exits}, {"complete", g.complete}};
}

Json cone_json(const MoriCone& c) {
  Json facets = Json::array();
  for (const auto& f : c.facets)
    facets.push_back(Json{{"wall", class_json(f.wall.D)},
                          {"normal_on_S", class_json(f.normal_on_S)},
                          {"image_on_X", class_json(f.image_on_X)},
                          {"dual_curve", curve_json(f.dual_curve)}});
  return Json{{"facets", facets},
              {"outside_theorem_range", c.outside_theorem_range},
              {"outside_pi", c.outside_pi}};
}

}  // namespace weylgale
