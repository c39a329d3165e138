#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgematch/euler.hpp"
#include "edgematch/games.hpp"
#include "edgematch/model.hpp"

namespace edgematch::reductions {

// ------------------------------------------------------------ formula types

// Clauses hold DIMACS-style literals: +v / -v with 1-based variable indices.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool is_n3p() const;          // no clause consists of three positive literals
  bool is_2p() const;           // every variable has <= 2 positive occurrences
  bool is_e1n() const;          // every variable has exactly 1 negative occurrence
  bool is_31n() const;          // <= 3 occurrences per variable, <= 1 negative
  bool all_positive() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

struct Ipc {
  struct IntervalPair {
    int a = 0, b = 0; // first interval [a, b]
    int c = 0, d = 0; // second interval [c, d]
  };
  int universe = 0; // elements 1..universe
  std::vector<IntervalPair> pairs;
};

// ------------------------------------------------------------ formula chain

struct E1nResult {
  Cnf formula;
  int original_vars = 0;
  std::vector<int> forced_true; // original variables eliminated by setting true
  std::vector<int> var_map;     // new variable (1-based) -> original variable
};
// Repeatedly sets zero-negative variables true and compacts the variable set.
E1nResult enforce_e1n(const Cnf& f);
std::vector<bool> e1n_assignment_back(const E1nResult& r, const std::vector<bool>& a);

struct SharedLiteralGraph {
  euler::MultiGraph g;            // one vertex per clause
  std::vector<int> edge_literal;  // edge id -> the shared (positive) literal
};
SharedLiteralGraph shared_literal_graph(const Cnf& f);

struct LitMatchResult {
  Cnf formula;
  int original_vars = 0;
  struct Helper {
    int var = 0;      // helper variable index in the output formula
    int orig_var = 0; // the variable it replaced
    int clause = 0;   // clause whose occurrence was replaced
  };
  std::vector<Helper> helpers;
};
// Orients the shared-literal graph and rewrites one occurrence per edge so the
// output's shared-literal graph is a matching.
LitMatchResult to_literal_matching(const Cnf& f);
std::vector<bool> litmatch_assignment_back(const LitMatchResult& r, const std::vector<bool>& a);
std::vector<bool> litmatch_assignment_fwd(const LitMatchResult& r, const std::vector<bool>& a);

struct IpcResult {
  Ipc ipc;                       // pair j (0-based) corresponds to variable j+1
  std::vector<int> clause_coord; // clause index -> coordinate in 1..n
};
IpcResult lm_to_ipc(const Cnf& f);
// interval selection (true = second interval) -> satisfying assignment
std::vector<bool> ipc_selection_to_assignment(const IpcResult& r, const std::vector<bool>& second);

struct LtStripResult {
  Instance instance;
  std::vector<int> element_tile_ids; // 2 per element, element-major
  std::vector<int> pair_tile_ids;    // pair j -> tile id
};
LtStripResult ipc_to_lt_strip(const Ipc& p);
// strip solution -> interval selection (true = second interval chosen)
std::vector<bool> lt_strip_selection_back(const LtStripResult& r, const Solution& sol);

// ---------------------------------------------------------- Hamiltonicity

// The directed exclusive-or template: two corridors through one cluster, each
// traversable in exactly one way, covering all internal vertices; crossing or
// split traversals cannot complete.  Ports are indices into a 6-vertex block.
struct XorTemplate {
  int size = 6;
  std::vector<std::pair<int, int>> arcs; // internal arcs on vertices 0..5
  int left_in = 0;   // receives the arc from the left edge's tail
  int left_out = 5;  // sends the arc to the left edge's head
  int right_in = 4;  // receives from the right edge's tail
  int right_out = 1; // sends to the right edge's head
};
XorTemplate xor_template();

struct GadgetGraph {
  euler::MultiDigraph g;
  std::vector<int> var_false_edge;            // variable -> plain "false" arc id
  std::vector<std::vector<int>> clause_vertices;
  std::vector<std::string> vertex_names;      // debugging / certificates
};
// Parsimonious reduction from positive 1-in-3SAT to Hamiltonian cycle in
// 3-regular digraphs with max in/outdegree 2.  Throws unless every clause has
// exactly three positive literals.
GadgetGraph one_in_three_to_ham_cycle(const Cnf& f);
// arc-membership of a Hamiltonian cycle -> the 1-in-3 satisfying assignment
std::vector<bool> ham_cycle_assignment_back(const GadgetGraph& gg,
                                            const std::vector<char>& arc_in_cycle);

struct HamPathResult {
  euler::MultiDigraph g;
  int s = -1, t = -1;
  int split_tail = -1, split_head = -1;   // the forced edge that was split
  std::vector<int> gadget_vertices;       // all vertices added by the two gadgets
};
// Splits a forced edge and attaches the start/end gadgets; Hamiltonian cycles
// correspond bijectively to Hamiltonian s-t paths.
HamPathResult ham_cycle_to_ham_path(const euler::MultiDigraph& g);
// vertex sequence of a Ham s-t path -> vertex cycle of the source graph
std::vector<int> ham_path_cycle_back(const HamPathResult& r, const std::vector<int>& path);

struct SquareStripResult {
  Instance instance;
  std::vector<int> tile_vertex; // tile id -> graph vertex it belongs to
};
// Half-edge tiles: three per vertex minus the removed half-edges at s and t,
// board Strip(3|V|-4) with left boundary -s_O (signs dropped when unsigned).
SquareStripResult ham_path_to_square_strip(const euler::MultiDigraph& g, int s, int t,
                                           bool signed_variant);
// strip solution -> the vertex order of the corresponding Ham path
std::vector<int> square_strip_path_back(const SquareStripResult& r, const Solution& sol);

struct EqTriStripResult {
  Instance instance;
  std::vector<int> tile_vertex;
};
// Triangle tiles over an undirected max-degree-3 graph; with s,t the
// single-tile ends and boundary color s (ASP variant), without them the plain
// NP variant.
EqTriStripResult ham_path_to_eqtri_strip(const euler::MultiGraph& g, std::optional<int> s,
                                         std::optional<int> t, bool signed_variant);
std::vector<int> eqtri_strip_path_back(const EqTriStripResult& r, const Solution& sol);

struct HypTriResult {
  Instance instance; // HypStrip with two right triangles per square
};
HypTriResult square_strip_to_hyp_tri(const Instance& strip);
// hyp-strip solution -> square strip solution
Solution hyp_tri_solution_back(const HypTriResult& r, const Instance& strip, const Solution& sol);

struct LegStripResult {
  Instance instance;
  std::uint64_t blowup = 1; // c = 2^(m-1) * prod (deg(v)/2)!^2 for signed
};
// Pendant s,t attached to the minimum-id vertex, then endpoint,
// vertex, and edge tiles; bijective when unsigned, c-monious when signed.
LegStripResult euler_to_leg_strip(const euler::MultiGraph& g, bool signed_variant);

struct ShapelessResult {
  Instance instance;
  std::vector<int> frame_tile_ids;
  int tray_x0 = 0, tray_y = 0; // strip cell i sits at (tray_x0 + i, tray_y)
};
// Spiral frame around a 1xn strip with a left boundary color.
ShapelessResult strip_to_shapeless(const Instance& strip, bool rooted);
Solution shapeless_strip_back(const ShapelessResult& r, const Solution& sol);

// ------------------------------------------------------- game transforms

// Vertex gadget: a per-in-edge entry stub, then a forced two-move corridor.
games::GeoInstance vertex_geo_to_edge_geo(const games::GeoInstance& geo);

enum class PartizanMode { VertexFromBipartition, EdgeFromDirection, UndirectEdgePartizan };
games::GeoInstance partizanize(const games::GeoInstance& geo, PartizanMode mode);

enum class PoolMode { Shared, PerPlayer };
// Edge geography -> one tile per edge; directed vertex geography
// with the per-vertex tile triples -> shared-pool game.
games::GameInstance geo_to_matching_game(const games::GeoInstance& geo, PoolMode pools);

} // namespace edgematch::reductions
