#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edgematch/euler.hpp"
#include "edgematch/model.hpp"

namespace edgematch::games {

enum class Player { P1, P2 };

enum class GeoRule { Vertex, Edge };

// Geography on a directed or undirected graph.  Impartial unless one of the
// color maps is populated (vertex-partizan / edge-partizan).  P1 moves first;
// the start vertex counts as visited under the vertex rule and is not owned
// by either player.
struct GeoInstance {
  bool directed = true;
  euler::MultiDigraph graph; // endpoint order ignored when undirected
  int start = 0;
  GeoRule rule = GeoRule::Vertex;
  std::vector<Player> vertex_colors; // size == num_vertices when vertex-partizan
  std::vector<Player> edge_colors;   // size == num edges when edge-partizan

  bool vertex_partizan() const { return !vertex_colors.empty(); }
  bool edge_partizan() const { return !edge_colors.empty(); }
};

// The 2-player 1xn edge-matching game of Def 6.1.
struct GameInstance {
  std::vector<SquareTile> tiles;
  Label left_boundary;
  CompatRule rule = CompatRule::UnsignedEq; // UnsignedEq or SignedOpp
  bool shared_pool = true;
  std::vector<int> pool1, pool2; // tile ids, used when !shared_pool
};

struct GameOutcome {
  Player winner = Player::P1;
  // geography: (edge id, target vertex); match game: (tile id, rotation)
  std::optional<std::pair<int, int>> principal_move;
};

// Exact winner by memoized game-tree search; desk-scale instances only
// (vertex/edge sets are kept as 64-bit masks).
GameOutcome solve_geography(const GeoInstance& g);

// Polynomial route for undirected vertex geography: P1 wins iff the start
// vertex is covered by every maximum matching of the (bipartite) graph.
// Accepts bipartite impartial instances and vertex-partizan instances (whose
// monochromatic edges are deleted first); rejects everything else.
GameOutcome solve_geography_matching(const GeoInstance& g);

// Exact winner of the 2-player matching game via memoized search over
// canonical states (identical tiles are interchangeable).
GameOutcome solve_match_game(const GameInstance& g);

} // namespace edgematch::games
