#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgematch/io.hpp"
#include "edgematch/oracles.hpp"
#include "edgematch/reductions.hpp"
#include "testutil.hpp"

using namespace edgematch;
using testutil::Rng;

namespace {

Instance sample_square_instance() {
  Instance inst;
  inst.rule = CompatRule::StrictLess;
  inst.board = BoardSpec::strip(2, Label::num(0), std::nullopt);
  inst.squares.push_back({0, Label::num(1), Label::num(2), Label::num(3), Label::num(4)});
  inst.squares.push_back({1, Label::num(5), Label::num(6), Label::num(7), Label::num(8)});
  return inst;
}

Instance sample_tri_instance() {
  Instance inst;
  inst.rule = CompatRule::SignedOpp;
  inst.board = BoardSpec::eqtri_strip(2, Label::sgn("s", -1), false);
  inst.allow_reflection = true;
  inst.triangles.push_back(
      {0, {Label::sgn("a", +1), Label::sgn("b", -1), Label::sgn("c", +1)}});
  inst.triangles.push_back(
      {1, {Label::sgn("a", -1), Label::sgn("b", +1), Label::sgn("c", -1)}});
  return inst;
}

Instance sample_leg_instance() {
  Instance inst;
  inst.rule = CompatRule::UnsignedEq;
  inst.board = BoardSpec::leg_strip(2, false);
  inst.rtriangles.push_back({0, Label::uns("a"), Label::uns("b"), Label::uns("H")});
  inst.rtriangles.push_back({1, Label::uns("a"), Label::uns("b"), Label::uns("H")});
  return inst;
}

Instance sample_shapeless_instance() {
  Instance inst;
  inst.rule = CompatRule::UnsignedEq;
  inst.board = BoardSpec::shapeless_rooted(0, 2);
  inst.squares.push_back({0, Label::uns("x"), Label::uns("x"), Label::uns("x"), Label::uns("x")});
  inst.squares.push_back({1, Label::uns("x"), Label::uns("y"), Label::uns("x"), Label::uns("y")});
  return inst;
}

} // namespace

TEST_CASE("instance round trips") {
  for (const Instance& inst : {sample_square_instance(), sample_tri_instance(),
                               sample_leg_instance(), sample_shapeless_instance()}) {
    const std::string text = io::serialize_instance(inst);
    Instance back = io::parse_instance(text);
    CHECK(io::serialize_instance(back) == text);
  }
}

TEST_CASE("solution round trips and verify is serialization-stable") {
  Instance inst = sample_leg_instance();
  auto sols = oracles::enumerate_strip_solutions(inst, std::nullopt, 1);
  REQUIRE(!sols.found.empty());
  const Solution& sol = sols.found[0];
  CHECK(verify(inst, sol).ok());

  const std::string stext = io::serialize_solution(sol, false);
  Solution back = io::parse_solution(stext);
  CHECK(back == sol);
  CHECK(verify(io::parse_instance(io::serialize_instance(inst)), back).ok());
  CHECK(io::serialize_solution(back, false) == stext);

  Solution grid;
  grid.grid = {{0, 0, 0, 2}, {1, 0, 1, 0}};
  const std::string gtext = io::serialize_solution(grid, true);
  CHECK(io::parse_solution(gtext) == grid);
}

TEST_CASE("cnf and ipc round trips") {
  reductions::Cnf f;
  f.num_vars = 4;
  f.clauses = {{1, -2, 3}, {-4}, {2, 4}};
  const std::string text = io::serialize_cnf(f);
  auto back = io::parse_cnf(text);
  CHECK(back.num_vars == f.num_vars);
  CHECK(back.clauses == f.clauses);
  CHECK(io::serialize_cnf(back) == text);

  reductions::Ipc p;
  p.universe = 5;
  p.pairs = {{1, 1, 2, 3}, {4, 4, 4, 4}};
  const std::string ptext = io::serialize_ipc(p);
  auto pback = io::parse_ipc(ptext);
  CHECK(io::serialize_ipc(pback) == ptext);
}

TEST_CASE("graph round trips with partitions") {
  euler::MultiDigraph g;
  g.num_vertices = 3;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 2);
  io::GraphFile gf = io::GraphFile::of(g);
  gf.partitions = euler::PartitionSystem::empty(3);
  gf.partitions.groups[2] = {{euler::out_incidence(2)}, {euler::in_incidence(1), euler::in_incidence(2)}};
  const std::string text = io::serialize_graph(gf);
  auto back = io::parse_graph(text);
  CHECK(back.directed);
  CHECK(back.num_vertices == 3);
  CHECK(back.edges.size() == 3);
  CHECK(io::serialize_graph(back) == text);
}

TEST_CASE("geo and game round trips") {
  games::GeoInstance geo;
  geo.directed = false;
  geo.rule = games::GeoRule::Edge;
  geo.graph.num_vertices = 3;
  geo.graph.add_edge(0, 1);
  geo.graph.add_edge(1, 2);
  geo.start = 1;
  geo.edge_colors = {games::Player::P1, games::Player::P2};
  const std::string text = io::serialize_geo(geo);
  auto back = io::parse_geo(text);
  CHECK(io::serialize_geo(back) == text);
  CHECK(back.edge_colors == geo.edge_colors);

  games::GameInstance game;
  game.rule = CompatRule::SignedOpp;
  game.left_boundary = Label::sgn("s", +1);
  game.tiles.push_back({0, Label::sgn("a", +1), Label::sgn("b", -1), Label::sgn("c", +1),
                        Label::sgn("s", -1)});
  game.shared_pool = false;
  game.pool1 = {0};
  game.pool2 = {};
  const std::string gtext = io::serialize_game(game);
  auto gback = io::parse_game(gtext);
  CHECK(io::serialize_game(gback) == gtext);
}

TEST_CASE("parsers reject malformed documents") {
  CHECK_THROWS_AS(io::parse_instance("not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_instance("{\"kind\": \"cnf\", \"version\": 1}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::parse_cnf("{\"kind\": \"cnf\", \"version\": 2, \"num_vars\": 1, \"clauses\": []}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      io::parse_cnf("{\"kind\": \"cnf\", \"version\": 1, \"num_vars\": 1, \"clauses\": [[2]]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(io::parse_graph("{\"kind\": \"graph\", \"version\": 1, \"directed\": true, "
                                  "\"vertices\": [0], \"edges\": [[0, 0, 5]]}"),
                  std::invalid_argument);
}

TEST_CASE("serialization is deterministic on generated fixtures") {
  Rng rng(7);
  auto g = testutil::random_multidigraph(rng, 4, 6);
  games::GeoInstance geo;
  geo.graph = g;
  geo.start = 0;
  auto game = reductions::geo_to_matching_game(
      [&] {
        games::GeoInstance e = geo;
        e.rule = games::GeoRule::Edge;
        return e;
      }(),
      reductions::PoolMode::Shared);
  CHECK(io::serialize_game(game) == io::serialize_game(game));
}
