#include "edgematch/games.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace edgematch::games {

namespace {

Player other(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }

struct GeoSearch {
  const GeoInstance& inst;
  std::map<std::tuple<int, std::uint64_t, int>, bool> memo;

  explicit GeoSearch(const GeoInstance& g) : inst(g) {
    if (g.graph.num_vertices > 64 || g.graph.edges.size() > 64)
      throw std::invalid_argument("geography solver is limited to 64 vertices/edges");
    if (g.vertex_partizan() &&
        static_cast<int>(g.vertex_colors.size()) != g.graph.num_vertices)
      throw std::invalid_argument("vertex color map must be total");
    if (g.edge_partizan() && g.edge_colors.size() != g.graph.edges.size())
      throw std::invalid_argument("edge color map must be total");
  }

  // moves from `cur` with the used-mask (vertices for the vertex rule, edges
  // for the edge rule); returns (edge id, target)
  std::vector<std::pair<int, int>> moves(int cur, std::uint64_t used, Player mover) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : inst.graph.edges) {
      int target = -1;
      if (e.a == cur) target = e.b;
      if (target == -1 && !inst.directed && e.b == cur) target = e.a;
      if (target == -1) continue;
      if (inst.rule == GeoRule::Vertex) {
        if (used >> target & 1) continue;
      } else {
        if (used >> e.id & 1) continue;
      }
      if (inst.vertex_partizan() && inst.vertex_colors[static_cast<size_t>(target)] != mover)
        continue;
      if (inst.edge_partizan() && inst.edge_colors[static_cast<size_t>(e.id)] != mover)
        continue;
      out.push_back({e.id, target});
    }
    return out;
  }

  bool wins(int cur, std::uint64_t used, Player mover) {
    const auto key = std::make_tuple(cur, used, mover == Player::P1 ? 0 : 1);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool w = false;
    for (const auto& [eid, target] : moves(cur, used, mover)) {
      const std::uint64_t next =
          inst.rule == GeoRule::Vertex ? (used | (1ull << target)) : (used | (1ull << eid));
      if (!wins(target, next, other(mover))) {
        w = true;
        break;
      }
    }
    memo.emplace(key, w);
    return w;
  }
};

} // namespace

GameOutcome solve_geography(const GeoInstance& g) {
  if (g.start < 0 || g.start >= g.graph.num_vertices)
    throw std::invalid_argument("start vertex does not exist");
  GeoSearch s(g);
  const std::uint64_t used0 =
      g.rule == GeoRule::Vertex ? (1ull << g.start) : 0ull;
  GameOutcome out;
  out.winner = Player::P2;
  for (const auto& [eid, target] : s.moves(g.start, used0, Player::P1)) {
    const std::uint64_t next = g.rule == GeoRule::Vertex ? (used0 | (1ull << target))
                                                         : (used0 | (1ull << eid));
    if (!s.wins(target, next, Player::P2)) {
      out.winner = Player::P1;
      out.principal_move = {eid, target};
      break;
    }
  }
  return out;
}

// ------------------------------------------------- matching-based solver

namespace {

// Kuhn's augmenting-path maximum matching on a bipartite graph given as an
// adjacency list over one side.
struct Bipartite {
  int n = 0;
  std::vector<std::vector<int>> adj; // over all vertices
  std::vector<int> match;            // vertex -> partner or -1

  int max_matching(const std::vector<char>& left_side, const std::vector<char>& alive) {
    match.assign(static_cast<size_t>(n), -1);
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (!left_side[static_cast<size_t>(v)] || !alive[static_cast<size_t>(v)]) continue;
      std::vector<char> seen(static_cast<size_t>(n), 0);
      if (augment(v, seen, alive)) ++size;
    }
    return size;
  }

  bool augment(int v, std::vector<char>& seen, const std::vector<char>& alive) {
    for (int w : adj[static_cast<size_t>(v)]) {
      if (!alive[static_cast<size_t>(w)] || seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      if (match[static_cast<size_t>(w)] == -1 || augment(match[static_cast<size_t>(w)], seen, alive)) {
        match[static_cast<size_t>(w)] = v;
        match[static_cast<size_t>(v)] = w;
        return true;
      }
    }
    return false;
  }
};

} // namespace

GameOutcome solve_geography_matching(const GeoInstance& g) {
  if (g.directed || g.rule != GeoRule::Vertex || g.edge_partizan())
    throw std::invalid_argument(
        "matching solver handles undirected vertex geography only");

  // keep playable edges.  Impartial: all of them.  Vertex-partizan: interior
  // monochromatic edges can never be played (colors must alternate), while
  // the start is color-neutral, so its edges are playable exactly when the
  // other endpoint carries P1's color (the first mover's).
  std::vector<euler::Edge> edges;
  for (const auto& e : g.graph.edges) {
    if (e.a == e.b) continue; // a loop is never a legal vertex-rule move
    if (g.vertex_partizan()) {
      if (e.a == g.start || e.b == g.start) {
        const int other = e.a == g.start ? e.b : e.a;
        if (g.vertex_colors[static_cast<size_t>(other)] != Player::P1) continue;
      } else if (g.vertex_colors[static_cast<size_t>(e.a)] ==
                 g.vertex_colors[static_cast<size_t>(e.b)]) {
        continue;
      }
    }
    edges.push_back(e);
  }

  const int n = g.graph.num_vertices;
  std::vector<char> side(static_cast<size_t>(n), 0), have(static_cast<size_t>(n), 0);
  if (g.vertex_partizan()) {
    for (int v = 0; v < n; ++v) {
      side[static_cast<size_t>(v)] = g.vertex_colors[static_cast<size_t>(v)] == Player::P1;
      have[static_cast<size_t>(v)] = 1;
    }
    side[static_cast<size_t>(g.start)] = 0; // neutral start plays from P2's side
  } else {
    // 2-color; reject odd cycles
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& e : edges) {
      adj[static_cast<size_t>(e.a)].push_back(e.b);
      adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    for (int v0 = 0; v0 < n; ++v0) {
      if (have[static_cast<size_t>(v0)]) continue;
      have[static_cast<size_t>(v0)] = 1;
      side[static_cast<size_t>(v0)] = 0;
      std::vector<int> stack{v0};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)]) {
          if (!have[static_cast<size_t>(w)]) {
            have[static_cast<size_t>(w)] = 1;
            side[static_cast<size_t>(w)] = !side[static_cast<size_t>(v)];
            stack.push_back(w);
          } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
            throw std::invalid_argument("graph is not bipartite");
          }
        }
      }
    }
  }

  Bipartite b;
  b.n = n;
  b.adj.assign(static_cast<size_t>(n), {});
  for (const auto& e : edges) {
    b.adj[static_cast<size_t>(e.a)].push_back(e.b);
    b.adj[static_cast<size_t>(e.b)].push_back(e.a);
  }
  for (auto& v : b.adj) std::sort(v.begin(), v.end());

  std::vector<char> alive(static_cast<size_t>(n), 1);
  const int full = b.max_matching(side, alive);
  const int partner = full > 0 ? b.match[static_cast<size_t>(g.start)] : -1;
  alive[static_cast<size_t>(g.start)] = 0;
  const int without = b.max_matching(side, alive);

  GameOutcome out;
  if (without < full) {
    out.winner = Player::P1;
    if (partner != -1) {
      for (const auto& e : edges)
        if ((e.a == g.start && e.b == partner) || (e.b == g.start && e.a == partner)) {
          out.principal_move = {e.id, partner};
          break;
        }
    }
  } else {
    out.winner = Player::P2;
  }
  return out;
}

// ------------------------------------------------------ 2-player tile game

namespace {

struct MatchSearch {
  const GameInstance& inst;
  std::vector<std::array<Label, 1>> dummy;
  // tile signature interning: identical tiles are interchangeable
  std::vector<int> sig_of_tile;            // tile index -> signature id
  std::vector<const SquareTile*> sig_tile; // signature id -> representative
  std::map<std::string, bool> memo;

  explicit MatchSearch(const GameInstance& g) : inst(g) {
    std::map<std::string, int> interned;
    for (const auto& t : inst.tiles) {
      std::string key =
          t.north.str() + "|" + t.east.str() + "|" + t.south.str() + "|" + t.west.str();
      auto it = interned.find(key);
      if (it == interned.end()) {
        it = interned.emplace(key, static_cast<int>(sig_tile.size())).first;
        sig_tile.push_back(&t);
      }
      sig_of_tile.push_back(it->second);
    }
  }

  int pool_of_tile(size_t idx) const {
    if (inst.shared_pool) return 0;
    const int id = inst.tiles[idx].id;
    for (int x : inst.pool1)
      if (x == id) return 1;
    for (int x : inst.pool2)
      if (x == id) return 2;
    throw std::invalid_argument("tile " + std::to_string(id) + " is in neither pool");
  }

  static std::string state_key(const Label& exposed, const std::vector<int>& rem1,
                               const std::vector<int>& rem2, Player mover) {
    std::ostringstream os;
    os << exposed.str() << '#';
    for (size_t i = 0; i < rem1.size(); ++i) os << rem1[i] << ',';
    os << '#';
    for (size_t i = 0; i < rem2.size(); ++i) os << rem2[i] << ',';
    os << '#' << (mover == Player::P1 ? 1 : 2);
    return os.str();
  }

  // rem1/rem2: per-signature remaining counts (rem2 unused for a shared pool)
  bool wins(const Label& exposed, std::vector<int>& rem1, std::vector<int>& rem2,
            Player mover) {
    const std::string key = state_key(exposed, rem1, rem2, mover);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool w = false;
    std::vector<int>& pool = (inst.shared_pool || mover == Player::P1) ? rem1 : rem2;
    for (size_t s = 0; s < pool.size() && !w; ++s) {
      if (pool[s] == 0) continue;
      const SquareTile& t = *sig_tile[s];
      for (int rot = 0; rot < 4 && !w; ++rot) {
        auto e = square_exposed(t, rot);
        if (!compatible(exposed, e[West], inst.rule)) continue;
        pool[s]--;
        if (!wins(e[East], rem1, rem2, other(mover))) w = true;
        pool[s]++;
      }
    }
    memo.emplace(key, w);
    return w;
  }
};

} // namespace

GameOutcome solve_match_game(const GameInstance& g) {
  MatchSearch s(g);
  const size_t nsig = s.sig_tile.size();
  std::vector<int> rem1(nsig, 0), rem2(nsig, 0);
  for (size_t i = 0; i < g.tiles.size(); ++i) {
    if (g.shared_pool || s.pool_of_tile(i) == 1)
      rem1[static_cast<size_t>(s.sig_of_tile[i])]++;
    else
      rem2[static_cast<size_t>(s.sig_of_tile[i])]++;
  }

  GameOutcome out;
  out.winner = Player::P2;
  std::vector<int>& pool = rem1; // P1 moves first
  for (size_t sig = 0; sig < pool.size(); ++sig) {
    if (pool[sig] == 0) continue;
    const SquareTile& t = *s.sig_tile[sig];
    for (int rot = 0; rot < 4; ++rot) {
      auto e = square_exposed(t, rot);
      if (!compatible(g.left_boundary, e[West], g.rule)) continue;
      pool[sig]--;
      const bool opp = s.wins(e[East], rem1, rem2, Player::P2);
      pool[sig]++;
      if (!opp) {
        out.winner = Player::P1;
        // smallest remaining tile id with this signature
        int best = -1;
        for (size_t i = 0; i < g.tiles.size(); ++i)
          if (s.sig_of_tile[i] == static_cast<int>(sig) &&
              (g.shared_pool || s.pool_of_tile(i) == 1))
            if (best == -1 || g.tiles[i].id < best) best = g.tiles[i].id;
        out.principal_move = {best, rot};
        return out;
      }
    }
  }
  return out;
}

} // namespace edgematch::games
