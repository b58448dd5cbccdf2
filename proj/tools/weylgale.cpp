// weylgale: command-line front end.
#include "weylgale/config.hpp"
#include "weylgale/conegeom.hpp"
#include "weylgale/galedual.hpp"
#include "weylgale/json_io.hpp"
#include "weylgale/morimap.hpp"
#include "weylgale/verify.hpp"
#include "weylgale/wallscan.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace weylgale;

namespace {

struct RunConfig {
  int n = 5;
  int k = 9;
  int bound_slack = 2;
  int budget = 100;
  std::string format = "text";
  unsigned seed = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or @file.
Json read_json_arg(const std::string& arg) {
  const std::string text = !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg;
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
}

PicClass read_class(const std::string& arg) {
  try {
    return class_from_json(read_json_arg(arg));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const RunConfig& cfg, const Json& doc, const std::string& text, const std::string& out = {}) {
  const std::string body = cfg.format == "json" ? doc.dump(2) + "\n" : text;
  if (out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << (doc.dump(2) + "\n");
  std::cout << (cfg.format == "json" ? body : "wrote " + out + "\n");
}

LatticeContext surface(const RunConfig& cfg) { return make_context(2, cfg.k); }

PointConfiguration default_configuration() {
  return PointConfiguration::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 4, 9}});
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Weyl group orbits, stability walls and Gale duality on blowups of projective space"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", cfg.n, "dimension n of X = Bl_{n+4} P^n (default 5)");
  app.add_option("--k", cfg.k, "number of blown-up points (default 9)");
  app.add_option("--bound-slack", cfg.bound_slack, "extra degrees scanned past derived bounds (default 2)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", cfg.budget, "chamber graph node cap (default 100)");
  app.add_option("--format", cfg.format, "output format (default text)")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized trials (default 0)");

  int trials = 200;
  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--trials", trials, "random trials per property");

  std::string orbit_seed;
  long orbit_bound = 6;
  auto* orbit = app.add_subcommand("orbit", "enumerate a W-orbit up to an h-degree bound");
  orbit->add_option("--class", orbit_seed, "seed class JSON (default e1)");
  orbit->add_option("--bound", orbit_bound, "h-degree bound");

  std::string reduce_class;
  auto* reduce = app.add_subcommand("reduce", "Cremona-reduce a class");
  reduce->add_option("--class", reduce_class, "class JSON or @file")->required();

  std::string walls_class;
  auto* walls_at = app.add_subcommand("walls-at", "walls through a nef class");
  walls_at->add_option("--class", walls_class, "class JSON or @file")->required();

  std::string scan_from = "13/2", scan_to = "3/2";
  auto* scan = app.add_subcommand("scan", "walls met along L_a = (a+3)h - sum e_i");
  scan->add_option("--from", scan_from, "start value of a");
  scan->add_option("--to", scan_to, "end value of a");

  std::string graph_region = "pi", graph_out;
  auto* graph = app.add_subcommand("graph", "chamber graph from C0");
  graph->add_option("--region", graph_region, "pi or e")->check(CLI::IsMember({"pi", "e"}));
  graph->add_option("--out", graph_out, "write graph JSON here");

  auto* rho_cmd = app.add_subcommand("rho", "the determinant map rho");
  rho_cmd->require_subcommand(1);
  std::string rho_class;
  auto* rho_apply = rho_cmd->add_subcommand("apply", "apply rho to a class");
  rho_apply->add_option("--class", rho_class, "class JSON or @file")->required();
  int rho_trials = 50;
  auto* rho_verify = rho_cmd->add_subcommand("verify", "check the rho identities");
  rho_verify->add_option("--trials", rho_trials, "random trials");

  std::string mori_rep, mori_out;
  bool mori_outside = false;
  auto* mori = app.add_subcommand("mori", "image of a chamber under rho as a Mori cone");
  mori->add_option("--chamber-rep", mori_rep, "chamber representative JSON (default C0)");
  mori->add_option("--out", mori_out, "write cone JSON here");
  mori->add_flag("--allow-outside-pi", mori_outside, "accept chambers outside Pi");

  std::string gale_config, gale_csv;
  auto* gale = app.add_subcommand("gale", "Gale dual of a point configuration");
  gale->add_option("--config", gale_config, "configuration JSON or @file");
  gale->add_option("--csv", gale_csv, "configuration CSV file");

  std::string cones_class;
  auto* cones = app.add_subcommand("cones", "membership in the nef, E and Pi cones");
  cones->add_option("--class", cones_class, "class JSON or @file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  engine_config().bound_slack = cfg.bound_slack;

  try {
    if (*verify) {
      SuiteOptions opt{cfg.n, cfg.k, cfg.budget, cfg.seed, trials};
      const auto res = run_verification_suite(opt);
      Json doc = Json::array();
      std::string text;
      bool ok = true;
      for (const auto& r : res) {
        ok = ok && r.pass;
        doc.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text += std::string(r.pass ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name +
                (r.detail.empty() ? "" : " [" + r.detail + "]") + "\n";
      }
      emit(cfg, Json{{"results", doc}, {"pass", ok}}, text);
      return ok ? 0 : 2;
    }
    if (*orbit) {
      const auto ctx = surface(cfg);
      const PicClass s = orbit_seed.empty() ? E(ctx, 1) : read_class(orbit_seed);
      const auto orb = orbit_enumerate(s, orbit_bound);
      Json doc = Json::array();
      std::string text;
      for (const auto& c : orb) {
        doc.push_back(class_json(c));
        text += to_string(c) + "\n";
      }
      emit(cfg, doc, text + std::to_string(orb.size()) + " classes\n");
      return 0;
    }
    if (*reduce) {
      const auto D = read_class(reduce_class);
      const auto r = cremona_reduce(D);
      const char* type = to_string(match_canonical(r.canonical));
      emit(cfg, Json{{"input", class_json(D)}, {"canonical", class_json(r.canonical)}, {"word", word_json(r.word)},
                     {"stalled", r.stalled}, {"type", type}},
           "canonical " + to_string(r.canonical) + "\ntype " + type + "\nword " + word_json(r.word).dump() + "\n");
      return 0;
    }
    if (*walls_at) {
      const auto L = read_class(walls_class);
      const int n = L.ctx().k - 4;
      Json doc = Json::array();
      std::string text;
      for (const auto& w : local_walls(L)) {
        const auto c = crossing_data(w, n);
        doc.push_back(crossing_json(c));
        text += to_string(w) + "  " + to_string(c.kind) + "\n";
      }
      emit(cfg, doc, text + std::to_string(doc.size()) + " walls\n");
      return 0;
    }
    if (*scan) {
      const auto ctx = make_context(2, cfg.n + 4);
      const Rational a0 = parse_rational(scan_from), a1 = parse_rational(scan_to);
      const auto s = segment_scan(L_a(ctx, a0), L_a(ctx, a1));
      Json rows = Json::array();
      std::string text;
      for (const auto& x : s.crossings) {
        const Rational a = a0 + x.t * (a1 - a0);
        Json ws = Json::array();
        for (const auto& w : x.walls) ws.push_back(wall_json(w));
        rows.push_back(Json{{"a", rational_json(a)}, {"t", rational_json(x.t)}, {"count", x.walls.size()}, {"walls", ws}});
        text += "a = " + to_string(a) + "  " + std::to_string(x.walls.size()) + " walls, e.g. " +
                to_string(x.walls.front()) + "\n";
      }
      emit(cfg, Json{{"n", cfg.n}, {"k", cfg.n + 4}, {"from", rational_json(a0)}, {"to", rational_json(a1)},
                     {"degree_bound", s.degree_bound}, {"crossings", rows}},
           text);
      return 0;
    }
    if (*graph) {
      const auto ctx = make_context(2, cfg.n + 4);
      const auto g = chamber_graph(chamber_C0(ctx), cfg.budget, graph_region == "pi" ? Region::Pi : Region::E);
      emit(cfg, graph_json(g),
           std::to_string(g.nodes.size()) + " chambers, " + std::to_string(g.edges.size()) + " edges, " +
               std::to_string(g.exits.size()) + " exits, complete: " + (g.complete ? "yes" : "no") + "\n",
           graph_out);
      return 0;
    }
    if (*rho_cmd) {
      const auto map = rho(cfg.n);
      if (*rho_apply) {
        const auto L = read_class(rho_class);
        const auto img = map(L);
        emit(cfg, Json{{"input", class_json(L)}, {"image", class_json(img)}}, to_string(img) + "\n");
        return 0;
      }
      const auto rep = verify_rho_properties(map, rho_trials, cfg.seed);
      Json checks = Json::array();
      std::string text;
      for (const auto& c : rep.checks) {
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]") + "\n";
      }
      if (rep.outside_theorem_range) text += "note: n <= 3 lies outside the range where rho is an isomorphism of chamber structures\n";
      emit(cfg, Json{{"n", rep.n}, {"outside_theorem_range", rep.outside_theorem_range}, {"checks", checks}, {"pass", rep.all_pass}},
           text);
      return rep.all_pass ? 0 : 2;
    }
    if (*mori) {
      const auto ctx = make_context(2, cfg.n + 4);
      const Chamber ch = mori_rep.empty() ? chamber_C0(ctx) : chamber_of(read_class(mori_rep));
      const auto cone = nef_cone_image(ch, rho(cfg.n), mori_outside);
      std::string text;
      for (const auto& f : cone.facets) text += to_string(f.wall) + "  ->  " + to_string(f.dual_curve) + "\n";
      emit(cfg, cone_json(cone), text + std::to_string(cone.facets.size()) + " facets\n", mori_out);
      return 0;
    }
    if (*gale) {
      PointConfiguration A;
      if (!gale_csv.empty())
        A = parse_csv_configuration(slurp(gale_csv));
      else if (!gale_config.empty())
        A = configuration_from_json(read_json_arg(gale_config));
      else
        A = default_configuration();
      validate(A);
      const auto B = gale_dual(A);
      const bool zero = duality_product(A, B).is_zero();
      const bool gp = general_position(B);
      const bool round = dual_round_trip(A);
      emit(cfg, Json{{"input", configuration_json(A)}, {"dual", configuration_json(B)}, {"product_zero", zero},
                     {"dual_general_position", gp}, {"round_trip", round}},
           "dual rows:\n" + [&] {
             std::string t;
             for (const auto& r : B.coords.to_rows()) {
               for (const auto& q : r) t += " " + to_string(q);
               t += "\n";
             }
             return t;
           }() + "B^T A = 0: " + (zero ? "yes" : "no") + "\nround trip: " + (round ? "yes" : "no") + "\n");
      return zero && round ? 0 : 2;
    }
    if (*cones) {
      const auto L = read_class(cones_class);
      Json doc{{"class", class_json(L)}};
      std::string text;
      for (auto kind : {ConeKind::NefKneg, ConeKind::E, ConeKind::Pi}) {
        const auto m = cone_membership(L, kind);
        doc[to_string(kind)] = membership_json(m);
        text += std::string(to_string(kind)) + ": " + (m.member ? "yes" : "no");
        if (m.certificate) text += "  certificate " + to_string(*m.certificate) + " (" + m.violated_constraint + ")";
        text += "\n";
      }
      emit(cfg, doc, text);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
