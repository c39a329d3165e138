#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgematch/oracles.hpp"
#include "edgematch/tri_solver.hpp"
#include "testutil.hpp"

using namespace edgematch;
using testutil::Rng;

namespace {

Instance leg_instance(std::vector<RightTriTile> tiles, CompatRule rule, bool acute_bottom) {
  Instance inst;
  inst.rule = rule;
  inst.board = BoardSpec::leg_strip(static_cast<int>(tiles.size()), acute_bottom);
  inst.rtriangles = std::move(tiles);
  return inst;
}

RightTriTile uns_tile(int id, const std::string& l, const std::string& r) {
  return {id, Label::uns(l), Label::uns(r), Label::uns("H" + std::to_string(id))};
}

RightTriTile sgn_tile(int id, const std::string& l, int sl, const std::string& r, int sr) {
  return {id, Label::sgn(l, sl), Label::sgn(r, sr), Label::sgn("H", +1)};
}

} // namespace

TEST_CASE("to_digraph translation") {
  auto tr = tri_solver::to_digraph({uns_tile(0, "a", "b")}, CompatRule::UnsignedEq);
  CHECK(tr.g.num_vertices == 2);
  REQUIRE(tr.g.edges.size() == 1);
  CHECK(tr.g.edges[0].a == 0);
  CHECK(tr.g.edges[0].b == 1);
  CHECK(tr.vertex_colors[0] == "a");

  auto empty = tri_solver::to_digraph({}, CompatRule::UnsignedEq);
  CHECK(empty.g.edges.empty());

  // signed legL = +a lands in the outgoing/+ group (P_{a,3})
  auto trs = tri_solver::to_digraph({sgn_tile(0, "a", +1, "b", -1)}, CompatRule::SignedOpp);
  REQUIRE(trs.parts.groups.size() == 2);
  bool found = false;
  for (const auto& grp : trs.parts.groups[0])
    for (int code : grp)
      if (code == euler::out_incidence(0)) found = true;
  CHECK(found);
}

TEST_CASE("two-tile unsigned strip") {
  // {(a,b,H1), (a,b,H2)}: one tile hyp-down, the other hyp-up
  std::vector<RightTriTile> tiles = {uns_tile(0, "a", "b"), uns_tile(1, "a", "b")};
  Instance inst = leg_instance(tiles, CompatRule::UnsignedEq, true);
  auto sol = tri_solver::solve_leg_contact(inst);
  REQUIRE(sol);
  CHECK(verify(inst, *sol).ok());
  CHECK(sol->cells[0].orient == HypDown);
  CHECK(sol->cells[1].orient == HypUp);
  CHECK(oracles::enumerate_strip_solutions(inst).count == 2);
}

TEST_CASE("directed path has no leg-contact packing") {
  std::vector<RightTriTile> tiles = {uns_tile(0, "a", "b"), uns_tile(1, "b", "c")};
  Instance inst = leg_instance(tiles, CompatRule::UnsignedEq, true);
  CHECK_FALSE(tri_solver::solve_leg_contact(inst));
  CHECK(oracles::enumerate_strip_solutions(inst).count == 0);
}

TEST_CASE("signed adjacency needs opposite signs") {
  // both tiles carry +c legs, so every arrangement meets +c against +c;
  // flipping one of them to -c fixes it
  std::vector<RightTriTile> bad = {sgn_tile(0, "a", +1, "c", +1),
                                   sgn_tile(1, "a", -1, "c", +1)};
  Instance ib = leg_instance(bad, CompatRule::SignedOpp, true);
  CHECK_FALSE(tri_solver::solve_leg_contact(ib));
  CHECK(oracles::enumerate_strip_solutions(ib).count == 0);

  std::vector<RightTriTile> good = {sgn_tile(0, "a", +1, "c", +1),
                                    sgn_tile(1, "a", -1, "c", -1)};
  Instance ig = leg_instance(good, CompatRule::SignedOpp, true);
  auto sol = tri_solver::solve_leg_contact(ig);
  REQUIRE(sol);
  CHECK(verify(ig, *sol).ok());
  CHECK(oracles::enumerate_strip_solutions(ig).count > 0);
}

TEST_CASE("solver preconditions") {
  Instance inst;
  inst.rule = CompatRule::UnsignedEq;
  inst.board = BoardSpec::strip(1);
  CHECK_THROWS_AS(tri_solver::solve_leg_contact(inst), std::invalid_argument);

  Instance mixed = leg_instance({uns_tile(0, "a", "b")}, CompatRule::SignedOpp, true);
  CHECK_THROWS_AS(tri_solver::solve_leg_contact(mixed), std::invalid_argument);
}

namespace {

// exhaustive multisets of n tiles over `colors` leg colors, canonical up to
// renaming (colors appear in first-use order); signed variants also
// canonicalize each color's first sign to +
template <typename Fn>
void for_each_unsigned_multiset(int n, int colors, Fn&& fn) {
  std::vector<std::pair<int, int>> types; // (legL, legR)
  for (int a = 0; a < colors; ++a)
    for (int b = 0; b < colors; ++b) types.push_back({a, b});
  std::vector<int> pick;
  auto canonical = [&]() {
    std::vector<int> first;
    auto order_of = [&](int c) {
      for (size_t i = 0; i < first.size(); ++i)
        if (first[i] == c) return static_cast<int>(i);
      first.push_back(c);
      return static_cast<int>(first.size()) - 1;
    };
    for (int idx : pick) {
      const auto [a, b] = types[static_cast<size_t>(idx)];
      if (order_of(a) > static_cast<int>(first.size())) return false;
      order_of(b);
    }
    // colors must appear as 0, 1, 2 in first-use order
    for (size_t i = 0; i < first.size(); ++i)
      if (first[i] != static_cast<int>(i)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int min_idx, int left) -> void {
    if (left == 0) {
      if (canonical()) fn(pick);
      return;
    }
    for (int i = min_idx; i < static_cast<int>(types.size()); ++i) {
      pick.push_back(i);
      self(self, i, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, n);
}

} // namespace

TEST_CASE("unsigned solver agrees with exhaustive search (scaled-down)") {
  int cases = 0, solvable = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_unsigned_multiset(n, 2, [&](const std::vector<int>& pick) {
      for (bool acute_bottom : {true, false}) {
        std::vector<RightTriTile> tiles;
        for (size_t i = 0; i < pick.size(); ++i) {
          const int a = pick[i] / 2, b = pick[i] % 2;
          tiles.push_back(uns_tile(static_cast<int>(i), "c" + std::to_string(a),
                                   "c" + std::to_string(b)));
        }
        Instance inst = leg_instance(tiles, CompatRule::UnsignedEq, acute_bottom);
        const bool brute = oracles::enumerate_strip_solutions(inst, 1).count > 0;
        auto sol = tri_solver::solve_leg_contact(inst);
        CHECK(sol.has_value() == brute);
        if (sol) {
          CHECK(verify(inst, *sol).ok());
          const bool want_down = inst.board.leg_cell_hyp_down(0);
          CHECK((sol->cells[0].orient == HypDown) == want_down);
          ++solvable;
        }
        ++cases;
      }
    });
  }
  CHECK(cases > 100);
  CHECK(solvable > 10);
}

TEST_CASE("signed solver agrees with exhaustive search (scaled-down)") {
  Rng rng(5);
  int cases = 0, solvable = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = rng.uni(1, 5);
    std::vector<RightTriTile> tiles;
    for (int i = 0; i < n; ++i)
      tiles.push_back(sgn_tile(i, "c" + std::to_string(rng.uni(0, 1)), rng.coin() ? 1 : -1,
                               "c" + std::to_string(rng.uni(0, 1)), rng.coin() ? 1 : -1));
    for (bool acute_bottom : {true, false}) {
      Instance inst = leg_instance(tiles, CompatRule::SignedOpp, acute_bottom);
      const bool brute = oracles::enumerate_strip_solutions(inst, 1).count > 0;
      auto sol = tri_solver::solve_leg_contact(inst);
      CHECK_MESSAGE(sol.has_value() == brute, "n=" << n << " acute=" << acute_bottom);
      if (sol) {
        CHECK(verify(inst, *sol).ok());
        ++solvable;
      }
      ++cases;
    }
  }
  CHECK(solvable > 50);
}
