#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgematch/games.hpp"
#include "testutil.hpp"

using namespace edgematch;
using games::GameInstance;
using games::GeoInstance;
using games::GeoRule;
using games::Player;
using testutil::Rng;

namespace {

GeoInstance undirected_path2() {
  GeoInstance g;
  g.directed = false;
  g.rule = GeoRule::Vertex;
  g.graph.num_vertices = 2;
  g.graph.add_edge(0, 1);
  g.start = 0;
  return g;
}

} // namespace

TEST_CASE("geography basics") {
  CHECK(games::solve_geography(undirected_path2()).winner == Player::P1);

  GeoInstance isolated;
  isolated.directed = true;
  isolated.rule = GeoRule::Vertex;
  isolated.graph.num_vertices = 2;
  isolated.graph.add_edge(1, 0);
  isolated.start = 0;
  CHECK(games::solve_geography(isolated).winner == Player::P2);

  // directed triangle, edge rule: P1 s->a, P2 a->b, P1 b->s, P2 stuck
  GeoInstance tri;
  tri.directed = true;
  tri.rule = GeoRule::Edge;
  tri.graph.num_vertices = 3;
  tri.graph.add_edge(0, 1);
  tri.graph.add_edge(1, 2);
  tri.graph.add_edge(2, 0);
  tri.start = 0;
  CHECK(games::solve_geography(tri).winner == Player::P1);
}

TEST_CASE("geography is isomorphism-invariant") {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uni(2, 5);
    auto g = testutil::random_multidigraph(rng, n, rng.uni(1, 7));
    GeoInstance a;
    a.directed = true;
    a.rule = rng.coin() ? GeoRule::Vertex : GeoRule::Edge;
    a.graph = g;
    a.start = rng.uni(0, n - 1);
    // relabel vertices by a random permutation
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng.eng);
    GeoInstance b = a;
    b.graph.edges.clear();
    for (const auto& e : a.graph.edges)
      b.graph.add_edge(perm[static_cast<size_t>(e.a)], perm[static_cast<size_t>(e.b)]);
    b.start = perm[static_cast<size_t>(a.start)];
    CHECK(games::solve_geography(a).winner == games::solve_geography(b).winner);
  }
}

TEST_CASE("matching solver basics") {
  // star with two leaves: the center is covered by every maximum matching
  GeoInstance star;
  star.directed = false;
  star.rule = GeoRule::Vertex;
  star.graph.num_vertices = 3;
  star.graph.add_edge(0, 1);
  star.graph.add_edge(0, 2);
  star.start = 0;
  CHECK(games::solve_geography_matching(star).winner == Player::P1);
  CHECK(games::solve_geography(star).winner == Player::P1);

  CHECK(games::solve_geography_matching(undirected_path2()).winner == Player::P1);

  GeoInstance directed;
  directed.directed = true;
  directed.rule = GeoRule::Vertex;
  directed.graph.num_vertices = 2;
  directed.graph.add_edge(0, 1);
  directed.start = 0;
  CHECK_THROWS_AS(games::solve_geography_matching(directed), std::invalid_argument);

  GeoInstance odd;
  odd.directed = false;
  odd.rule = GeoRule::Vertex;
  odd.graph.num_vertices = 3;
  odd.graph.add_edge(0, 1);
  odd.graph.add_edge(1, 2);
  odd.graph.add_edge(2, 0);
  odd.start = 0;
  CHECK_THROWS_AS(games::solve_geography_matching(odd), std::invalid_argument);
}

TEST_CASE("matching solver agrees with search on random bipartite graphs") {
  Rng rng(31);
  int done = 0;
  while (done < 500) {
    const int left = rng.uni(1, 4), right = rng.uni(1, 4);
    const int n = left + right;
    GeoInstance g;
    g.directed = false;
    g.rule = GeoRule::Vertex;
    g.graph.num_vertices = n;
    std::set<std::pair<int, int>> used;
    const int edges = rng.uni(1, left * right);
    for (int i = 0; i < edges; ++i) {
      const int a = rng.uni(0, left - 1), b = left + rng.uni(0, right - 1);
      if (used.insert({a, b}).second) g.graph.add_edge(a, b);
    }
    g.start = rng.uni(0, n - 1);
    CHECK(games::solve_geography_matching(g).winner == games::solve_geography(g).winner);
    ++done;
  }
}

TEST_CASE("matching route agrees with search on random vertex-partizan instances") {
  Rng rng(43);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uni(2, 6);
    GeoInstance g;
    g.directed = false;
    g.rule = GeoRule::Vertex;
    g.graph.num_vertices = n;
    std::set<std::pair<int, int>> used;
    for (int i = rng.uni(1, 8); i > 0; --i) {
      int a = rng.uni(0, n - 1), b = rng.uni(0, n - 1);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (used.insert({a, b}).second) g.graph.add_edge(a, b);
    }
    g.start = rng.uni(0, n - 1);
    for (int v = 0; v < n; ++v)
      g.vertex_colors.push_back(rng.coin() ? Player::P1 : Player::P2);
    CHECK(games::solve_geography_matching(g).winner == games::solve_geography(g).winner);
  }
}

TEST_CASE("vertex-partizan instances drop monochromatic edges") {
  // path 0-1-2 with colors P1, P2, P1 plus a monochromatic chord 0-2
  GeoInstance g;
  g.directed = false;
  g.rule = GeoRule::Vertex;
  g.graph.num_vertices = 3;
  g.graph.add_edge(0, 1);
  g.graph.add_edge(1, 2);
  g.graph.add_edge(0, 2); // monochromatic, never playable
  g.start = 0;
  g.vertex_colors = {Player::P2, Player::P1, Player::P2};
  CHECK(games::solve_geography_matching(g).winner == games::solve_geography(g).winner);
}

TEST_CASE("match game basics") {
  GameInstance g;
  g.rule = CompatRule::UnsignedEq;
  g.left_boundary = Label::uns("s");
  g.tiles.push_back({0, Label::uns("x"), Label::uns("y"), Label::uns("s"), Label::uns("z")});
  CHECK(games::solve_match_game(g).winner == Player::P1);
  auto out = games::solve_match_game(g);
  REQUIRE(out.principal_move);
  CHECK(out.principal_move->first == 0);

  GameInstance bad = g;
  bad.tiles[0] = {0, Label::uns("x"), Label::uns("y"), Label::uns("q"), Label::uns("z")};
  CHECK(games::solve_match_game(bad).winner == Player::P2);
}

TEST_CASE("match game state canonicalization is sound") {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    GameInstance g;
    g.rule = CompatRule::UnsignedEq;
    g.left_boundary = Label::uns("c0");
    const int n = rng.uni(2, 6);
    auto rnd = [&]() { return Label::uns("c" + std::to_string(rng.uni(0, 2))); };
    for (int i = 0; i < n; ++i) g.tiles.push_back({i, rnd(), rnd(), rnd(), rnd()});
    // duplicate one tile so identical signatures exist
    SquareTile dup = g.tiles[0];
    dup.id = n;
    g.tiles.push_back(dup);

    GameInstance relabeled = g;
    std::swap(relabeled.tiles.front().id, relabeled.tiles.back().id);
    CHECK(games::solve_match_game(g).winner == games::solve_match_game(relabeled).winner);
  }
}

TEST_CASE("per-player pools partition the tiles") {
  GameInstance g;
  g.rule = CompatRule::UnsignedEq;
  g.left_boundary = Label::uns("s");
  g.tiles.push_back({0, Label::uns("a"), Label::uns("a"), Label::uns("a"), Label::uns("s")});
  g.tiles.push_back({1, Label::uns("c"), Label::uns("b"), Label::uns("b"), Label::uns("b")});
  g.shared_pool = false;
  g.pool1 = {0};
  g.pool2 = {1};
  auto out = games::solve_match_game(g);
  // P1 plays tile 0 (only fit), P2 cannot place tile 1 against its exposure
  CHECK(out.winner == Player::P1);

  GameInstance broken = g;
  broken.pool2.clear();
  CHECK_THROWS_AS(games::solve_match_game(broken), std::invalid_argument);
}

TEST_CASE("all eight partizan variants terminate with a definite winner") {
  Rng rng(61);
  for (bool directed : {false, true})
    for (bool vertex_partizan : {false, true})
      for (auto rule : {GeoRule::Vertex, GeoRule::Edge}) {
        GeoInstance g;
        g.directed = directed;
        g.rule = rule;
        const int n = 5;
        g.graph.num_vertices = n;
        for (int i = 0; i < 6; ++i) {
          int a = rng.uni(0, n - 1), b = rng.uni(0, n - 1);
          if (a == b) b = (b + 1) % n;
          g.graph.add_edge(a, b);
        }
        g.start = 0;
        if (vertex_partizan) {
          for (int v = 0; v < n; ++v)
            g.vertex_colors.push_back(rng.coin() ? Player::P1 : Player::P2);
        } else {
          for (size_t e = 0; e < g.graph.edges.size(); ++e)
            g.edge_colors.push_back(rng.coin() ? Player::P1 : Player::P2);
        }
        auto out = games::solve_geography(g);
        const bool winner_defined = out.winner == Player::P1 || out.winner == Player::P2;
        CHECK(winner_defined);
        // the polynomial route covers exactly the undirected vertex-partizan
        // vertex row here (bipartite undirected edge geography stays on the
        // search solver)
        if (!directed && vertex_partizan && rule == GeoRule::Vertex)
          CHECK(games::solve_geography_matching(g).winner == out.winner);
      }
}
