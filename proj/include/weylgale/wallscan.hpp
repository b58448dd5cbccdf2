#pragma once
// K-negative stability walls (2D+K)^perp in N^1(Bl_k P^2) and the chambers they cut out.

#include "weylgale/conegeom.hpp"
#include "weylgale/piclattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylgale {

struct Wall {
  PicClass D;       // canonical representative: lexicographically smaller of D and -K-D
  PicClass normal;  // 2D + K
  Rational square;  // D^2

  bool operator==(const Wall& o) const { return D == o.D; }
  bool operator<(const Wall& o) const { return D < o.D; }
};

// Canonicalizes D; throws DomainError unless D.(D+K) = -2.
Wall make_wall(const PicClass& D);
std::string to_string(const Wall& w);

struct Chamber {
  PicClass rep;
  std::vector<std::pair<Wall, int>> known_walls;  // wall and sign of (2D+K).rep
};

enum class CrossingKind { EmptyToProjSpace, BlowDown, Flip, Flop, AntiFlip, ProjSpaceToEmpty };
enum class Side { Minus, Plus, Neither };
const char* to_string(CrossingKind k);
const char* to_string(Side s);

struct WallCrossing {
  Wall wall;
  Rational dsq;
  Rational dimP_D;   // -D^2
  Rational dimP_KD;  // n - 1 + D^2
  CrossingKind kind = CrossingKind::Flip;
  Side iso_side = Side::Neither;
  Side blown_up_side = Side::Neither;  // for BlowDown: the side carrying the blowup
};

bool is_wall_witness(const PicClass& D, const PicClass& L);

// Searches the hyperplane (2D+K)^perp for a verified ample K-negative point. When `near` is
// given, points close to it are tried first. Absence is a valid answer.
std::optional<PicClass> find_wall_witness(const PicClass& D, int search_bound = 8,
                                          const PicClass* near = nullptr);

// All K-negative walls through a nef L with L.K < 0, sorted.
// L^2 = 0: finite list on the W.(h - e1) rays, InfiniteWalls on the W.(3h - e1 - ... - e9) rays.
std::vector<Wall> local_walls(const PicClass& L);

// Largest d in the parametrization D = (1-d)h + sum m_i e_i that can pass through L.
long wall_degree_bound(const PicClass& L);

struct SegmentCrossing {
  Rational t;
  std::vector<Wall> walls;
};
struct SegmentScan {
  std::vector<SegmentCrossing> crossings;  // 0 < t < 1, increasing
  std::vector<Wall> at_start, at_end;      // walls through the endpoints
  long degree_bound = 0;
};
// Walls met by L_t = (1-t) L0 + t L1. Throws RegionError if the segment leaves L^2 > 0, K.L < 0.
SegmentScan segment_scan(const PicClass& L0, const PicClass& L1);

Chamber chamber_of(const PicClass& L);

// The bounding walls of the chamber C0 containing (n+1)h - sum e_i on Bl_{n+4} P^2, n >= 3,
// each verified by a witness on the wall adjacent to C0.
std::vector<Wall> chamber_walls_C0(const LatticeContext& ctx);
Chamber chamber_C0(const LatticeContext& ctx);
PicClass L_a(const LatticeContext& ctx, const Rational& a);  // (a+3)h - sum e_i

WallCrossing crossing_data(const Wall& w, int n);

// Bounding walls of the chamber through rep (on no wall), each with the sign of (2D+K).rep.
// Facets are found by probe rays and orthogonal projections and are each witness-verified.
std::vector<std::pair<Wall, int>> chamber_facets(const PicClass& rep);

enum class Region { Pi, E };
const char* to_string(Region r);

struct GraphNode {
  int id = 0;
  PicClass rep;
  std::vector<std::pair<Wall, int>> facets;  // bounding walls found, with sign at rep
  bool expanded = false;
  bool touches_boundary = false;  // a probe left the region without meeting a wall
};
struct GraphEdge {
  int from = 0, to = 0;
  WallCrossing crossing;
  int from_sign = 0;  // sign of (2D+K) on the `from` chamber
};
struct ExitFacet {
  int node = 0;
  Wall wall;
};
struct ChamberGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<ExitFacet> exits;  // facets whose other side leaves the region
  bool complete = true;
};
ChamberGraph chamber_graph(const Chamber& start, int max_steps, Region region);

}  // namespace weylgale
