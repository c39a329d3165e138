// Command-line surface for the edge-matching workbench: solvers, oracles,
// reductions, games, verification, and reproducible instance generators.
// Exit codes: 0 solved/ok, 1 no-solution/violation, 2 parse error or bad
// input, 3 size-guard refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgematch/io.hpp"
#include "edgematch/oracles.hpp"
#include "edgematch/order_solvers.hpp"
#include "edgematch/reductions.hpp"
#include "edgematch/tri_solver.hpp"

using namespace edgematch;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

struct CliError {
  int code;
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError{kExitParse, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError{kExitParse, "cannot open " + path + " for writing"};
  out << text;
}

bool all_labels_distinct(const std::vector<SquareTile>& tiles) {
  std::set<std::int64_t> seen;
  for (const auto& t : tiles)
    for (int s = 0; s < 4; ++s)
      if (!seen.insert(t.side(s).value).second) return false;
  return true;
}

bool every_tile_has_unequal_pair(const std::vector<SquareTile>& tiles) {
  for (const auto& t : tiles)
    if (t.west == t.east && t.north == t.south) return false;
  return true;
}

// exhaustive fallback over the shaped boards; shapeless handled separately
std::optional<Solution> exact_solve(const Instance& inst) {
  auto r = oracles::enumerate_strip_solutions(inst, 1, 1);
  if (r.found.empty()) return std::nullopt;
  return r.found[0];
}

std::optional<Solution> solve_dispatch(const Instance& inst, bool force_exact, int exact_limit) {
  const auto kind = inst.board.kind;
  if (!force_exact) {
    if (inst.rule == CompatRule::LessOrEq &&
        (kind == BoardSpec::Kind::Rect || kind == BoardSpec::Kind::Strip) &&
        !inst.board.left_boundary && !inst.board.right_boundary) {
      const int m = kind == BoardSpec::Kind::Rect ? inst.board.rows : 1;
      return order_solvers::solve_leq_rect(m, inst.board.cols, inst.squares);
    }
    if (inst.rule == CompatRule::StrictLess &&
        (kind == BoardSpec::Kind::Rect || kind == BoardSpec::Kind::Strip) &&
        !inst.board.left_boundary && !inst.board.right_boundary) {
      if (all_labels_distinct(inst.squares)) {
        const int m = kind == BoardSpec::Kind::Rect ? inst.board.rows : 1;
        return order_solvers::solve_lt_distinct_rect(m, inst.board.cols, inst.squares);
      }
      if (kind == BoardSpec::Kind::Strip && every_tile_has_unequal_pair(inst.squares))
        return order_solvers::solve_lt_strip(inst.squares);
    }
    if (kind == BoardSpec::Kind::LegStrip &&
        (inst.rule == CompatRule::UnsignedEq || inst.rule == CompatRule::SignedOpp))
      return tri_solver::solve_leg_contact(inst);
  }
  if (inst.tile_count() > exact_limit)
    throw CliError{kExitGuard, "exact search refused: " + std::to_string(inst.tile_count()) +
                                   " tiles exceed the limit of " + std::to_string(exact_limit) +
                                   " (raise with --exact-limit)"};
  if (kind == BoardSpec::Kind::Shapeless) {
    Instance work = inst;
    if (!work.board.rooted && !work.squares.empty())
      work.board = BoardSpec::shapeless_rooted(work.squares.front().id, 0);
    auto sol = oracles::solve_shapeless(work);
    return sol;
  }
  return exact_solve(inst);
}

std::string player_name(games::Player p) { return p == games::Player::P1 ? "P1" : "P2"; }

// ------------------------------------------------------------- generators

Instance gen_rect_leq(std::mt19937_64& eng, int m, int n, int max_label) {
  std::uniform_int_distribution<int> d(0, max_label);
  Instance inst;
  inst.rule = CompatRule::LessOrEq;
  inst.board = m == 1 ? BoardSpec::strip(n) : BoardSpec::rect(m, n);
  for (int i = 0; i < m * n; ++i)
    inst.squares.push_back({i, Label::num(d(eng)), Label::num(d(eng)), Label::num(d(eng)),
                            Label::num(d(eng))});
  return inst;
}

Instance gen_strip_lt(std::mt19937_64& eng, int n, int max_label) {
  std::uniform_int_distribution<int> d(0, max_label);
  Instance inst;
  inst.rule = CompatRule::StrictLess;
  inst.board = BoardSpec::strip(n);
  for (int i = 0; i < n; ++i) {
    SquareTile t{i, Label::num(d(eng)), Label::num(d(eng)), Label::num(d(eng)),
                 Label::num(d(eng))};
    if (t.west == t.east && t.north == t.south) t.west = Label::num(t.east.value + 1);
    inst.squares.push_back(t);
  }
  return inst;
}

Instance gen_leg_tiles(std::mt19937_64& eng, int n, int colors, bool signed_variant) {
  std::uniform_int_distribution<int> c(0, colors - 1);
  std::uniform_int_distribution<int> s(0, 1);
  Instance inst;
  inst.rule = signed_variant ? CompatRule::SignedOpp : CompatRule::UnsignedEq;
  inst.board = BoardSpec::leg_strip(n, true);
  for (int i = 0; i < n; ++i) {
    auto leg = [&]() {
      const std::string name = "c" + std::to_string(c(eng));
      return signed_variant ? Label::sgn(name, s(eng) ? 1 : -1) : Label::uns(name);
    };
    const Label hyp = signed_variant ? Label::sgn("H", 1) : Label::uns("H");
    inst.rtriangles.push_back({i, leg(), leg(), hyp});
  }
  return inst;
}

reductions::Cnf gen_cnf_n3p(std::mt19937_64& eng, int max_vars, int max_clauses) {
  for (;;) {
    std::uniform_int_distribution<int> dv(1, max_vars), dc(1, max_clauses);
    const int n = dv(eng), m = dc(eng);
    reductions::Cnf f;
    f.num_vars = n;
    f.clauses.assign(static_cast<size_t>(m), {});
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int v = 1; v <= n; ++v)
      f.clauses[static_cast<size_t>(pick(eng))].push_back(-v);
    std::uniform_int_distribution<int> occ(0, 2);
    for (int v = 1; v <= n; ++v)
      for (int k = occ(eng); k > 0; --k)
        f.clauses[static_cast<size_t>(pick(eng))].push_back(v);
    bool ok = true;
    for (auto& cl : f.clauses) {
      std::sort(cl.begin(), cl.end());
      cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
      if (cl.empty() || cl.size() > 3) ok = false;
      for (int lit : cl)
        if (std::find(cl.begin(), cl.end(), -lit) != cl.end()) ok = false;
    }
    if (ok && f.is_n3p() && f.is_2p() && f.is_e1n()) return f;
  }
}

io::GraphFile gen_digraph_3reg(std::mt19937_64& eng, int half) {
  for (;;) {
    const int n = 2 * half;
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), eng);
    std::vector<int> outs, ins;
    for (int i = 0; i < n; ++i) {
      const bool out2 = i < half;
      const int v = idx[static_cast<size_t>(i)];
      for (int k = 0; k < (out2 ? 2 : 1); ++k) outs.push_back(v);
      for (int k = 0; k < (out2 ? 1 : 2); ++k) ins.push_back(v);
    }
    std::shuffle(ins.begin(), ins.end(), eng);
    std::set<std::pair<int, int>> used;
    bool ok = true;
    for (size_t i = 0; i < outs.size() && ok; ++i)
      if (outs[i] == ins[i] || !used.insert({outs[i], ins[i]}).second) ok = false;
    if (!ok) continue;
    euler::MultiDigraph g;
    g.num_vertices = n;
    for (size_t i = 0; i < outs.size(); ++i) g.add_edge(outs[i], ins[i]);
    return io::GraphFile::of(g);
  }
}

games::GeoInstance gen_geo(std::mt19937_64& eng, int vertices, int edges, bool directed,
                           const std::string& rule) {
  std::uniform_int_distribution<int> dv(0, vertices - 1);
  games::GeoInstance g;
  g.directed = directed;
  g.rule = rule == "edge" ? games::GeoRule::Edge : games::GeoRule::Vertex;
  g.graph.num_vertices = vertices;
  for (int i = 0; i < edges; ++i) {
    int a = dv(eng), b = dv(eng);
    if (a == b) b = (b + 1) % vertices;
    g.graph.add_edge(a, b);
  }
  g.start = dv(eng);
  return g;
}

// ------------------------------------------------------------- reductions

struct ReduceResult {
  std::string output;
  std::string certmap; // empty when the stage defines no certificate mapping
};

ReduceResult run_reduce(const std::string& stage, const std::string& input, bool signed_variant,
                        bool rooted, const std::string& mode, const std::string& pools) {
  using nlohmann::ordered_json;
  ReduceResult out;
  auto cert = [&](ordered_json data) {
    ordered_json j;
    j["kind"] = "certmap";
    j["version"] = 1;
    j["stage"] = stage;
    j["data"] = std::move(data);
    out.certmap = j.dump(2) + "\n";
  };

  if (stage == "e1n") {
    auto r = reductions::enforce_e1n(io::parse_cnf(input));
    out.output = io::serialize_cnf(r.formula);
    cert({{"original_vars", r.original_vars},
          {"forced_true", r.forced_true},
          {"var_map", r.var_map}});
  } else if (stage == "litmatch") {
    auto r = reductions::to_literal_matching(io::parse_cnf(input));
    out.output = io::serialize_cnf(r.formula);
    ordered_json helpers = ordered_json::array();
    for (const auto& h : r.helpers)
      helpers.push_back({{"var", h.var}, {"orig_var", h.orig_var}, {"clause", h.clause}});
    cert({{"original_vars", r.original_vars}, {"helpers", helpers}});
  } else if (stage == "ipc") {
    auto r = reductions::lm_to_ipc(io::parse_cnf(input));
    out.output = io::serialize_ipc(r.ipc);
    cert({{"clause_coord", r.clause_coord}});
  } else if (stage == "lt-strip") {
    auto r = reductions::ipc_to_lt_strip(io::parse_ipc(input));
    out.output = io::serialize_instance(r.instance);
    cert({{"element_tile_ids", r.element_tile_ids}, {"pair_tile_ids", r.pair_tile_ids}});
  } else if (stage == "ham-cycle") {
    auto r = reductions::one_in_three_to_ham_cycle(io::parse_cnf(input));
    out.output = io::serialize_graph(io::GraphFile::of(r.g));
    cert({{"var_false_edge", r.var_false_edge}});
  } else if (stage == "ham-path") {
    auto gf = io::parse_graph(input);
    if (!gf.directed) throw CliError{kExitParse, "ham-path expects a digraph"};
    auto r = reductions::ham_cycle_to_ham_path(gf.to_directed());
    out.output = io::serialize_graph(io::GraphFile::of(r.g));
    cert({{"s", r.s},
          {"t", r.t},
          {"split_tail", r.split_tail},
          {"split_head", r.split_head},
          {"gadget_vertices", r.gadget_vertices}});
  } else if (stage == "square-strip") {
    auto gf = io::parse_graph(input);
    if (!gf.directed) throw CliError{kExitParse, "square-strip expects a digraph"};
    auto g = gf.to_directed();
    int s = -1, t = -1;
    for (int v = 0; v < g.num_vertices; ++v) {
      if (g.outdeg(v) == 1 && g.indeg(v) == 2 && s == -1) s = v;
      if (g.indeg(v) == 1 && g.outdeg(v) == 2) t = v;
    }
    if (s == -1 || t == -1)
      throw CliError{kExitParse, "no s (outdeg 1) / t (indeg 1) endpoints found"};
    auto r = reductions::ham_path_to_square_strip(g, s, t, signed_variant);
    out.output = io::serialize_instance(r.instance);
    cert({{"s", s}, {"t", t}, {"tile_vertex", r.tile_vertex}});
  } else if (stage == "eqtri-strip") {
    auto gf = io::parse_graph(input);
    auto g = gf.to_undirected();
    std::optional<int> s, t;
    std::vector<int> deg1;
    for (int v = 0; v < g.num_vertices; ++v)
      if (g.degree(v) == 1) deg1.push_back(v);
    if (deg1.size() == 2) {
      s = deg1[0];
      t = deg1[1];
    }
    auto r = reductions::ham_path_to_eqtri_strip(g, s, t, signed_variant);
    out.output = io::serialize_instance(r.instance);
    cert({{"tile_vertex", r.tile_vertex}});
  } else if (stage == "hyp-tri") {
    auto r = reductions::square_strip_to_hyp_tri(io::parse_instance(input));
    out.output = io::serialize_instance(r.instance);
    cert(ordered_json::object());
  } else if (stage == "leg-strip") {
    auto gf = io::parse_graph(input);
    auto r = reductions::euler_to_leg_strip(gf.to_undirected(), signed_variant);
    out.output = io::serialize_instance(r.instance);
    cert({{"blowup", r.blowup}});
  } else if (stage == "shapeless") {
    auto r = reductions::strip_to_shapeless(io::parse_instance(input), rooted);
    out.output = io::serialize_instance(r.instance);
    cert({{"frame_tile_ids", r.frame_tile_ids},
          {"tray_x0", r.tray_x0},
          {"tray_y", r.tray_y}});
  } else if (stage == "geo-edge") {
    out.output = io::serialize_geo(reductions::vertex_geo_to_edge_geo(io::parse_geo(input)));
  } else if (stage == "partizan") {
    reductions::PartizanMode m;
    if (mode == "vertex")
      m = reductions::PartizanMode::VertexFromBipartition;
    else if (mode == "edge")
      m = reductions::PartizanMode::EdgeFromDirection;
    else if (mode == "undirect")
      m = reductions::PartizanMode::UndirectEdgePartizan;
    else
      throw CliError{kExitParse, "--mode must be vertex, edge, or undirect"};
    out.output = io::serialize_geo(reductions::partizanize(io::parse_geo(input), m));
  } else if (stage == "match-game") {
    const auto pm = pools == "per-player" ? reductions::PoolMode::PerPlayer
                                          : reductions::PoolMode::Shared;
    out.output = io::serialize_game(reductions::geo_to_matching_game(io::parse_geo(input), pm));
  } else {
    throw CliError{kExitParse, "unknown reduce stage " + stage};
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"edgematch: edge-matching solvers, reductions, oracles, and games"};
  app.require_subcommand(1);

  std::string in_path, out_path = "-", sol_path, stage;
  bool force_exact = false;
  int exact_limit = 12;
  std::uint64_t limit = 0;
  bool signed_variant = true, rooted = false;
  std::string mode = "vertex", pools = "shared";
  std::uint64_t seed = 1;
  std::string gen_kind;
  int gm = 2, gn = 4, gmax = 99, gcolors = 3, ghalf = 2, gvertices = 4, gedges = 5;
  bool gsigned = false, gdirected = true;
  std::string grule = "vertex";

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", in_path)->required();
  solve->add_option("-o,--out", out_path, "solution file (default stdout)");
  solve->add_flag("--exact", force_exact, "skip the polynomial solvers");
  solve->add_option("--exact-limit", exact_limit, "tile cap for exact search (default 12)");

  auto* count = app.add_subcommand("count", "count solutions exactly");
  count->add_option("instance", in_path)->required();
  count->add_option("--limit", limit, "stop counting at this many");

  auto* reduce = app.add_subcommand("reduce", "apply a named instance transform");
  reduce->add_option("stage", stage,
                     "e1n|litmatch|ipc|lt-strip|ham-cycle|ham-path|square-strip|"
                     "eqtri-strip|hyp-tri|leg-strip|shapeless|geo-edge|partizan|match-game")
      ->required();
  reduce->add_option("input", in_path)->required();
  reduce->add_option("output", out_path)->required();
  reduce->add_flag("--unsigned{false},--signed{true}", signed_variant,
                   "tile variant for the strip reductions (default signed)");
  reduce->add_flag("--rooted", rooted, "rooted shapeless output");
  reduce->add_option("--mode", mode, "partizan mode: vertex|edge|undirect");
  reduce->add_option("--pools", pools, "match-game pools: shared|per-player");

  int game_tile_limit = 12, geo_edge_limit = 14;
  auto* game = app.add_subcommand("game", "solve 2-player games");
  auto* game_solve = game->add_subcommand("solve", "solve a matching-game file");
  game_solve->add_option("game", in_path)->required();
  game_solve->add_option("--exact-limit", game_tile_limit,
                         "tile cap for the game search (default 12)");
  auto* game_geo = game->add_subcommand("geo", "solve a geography file");
  game_geo->add_option("geo", in_path)->required();
  game_geo->add_flag("--matching", force_exact,
                     "use the bipartite maximum-matching route");
  game_geo->add_option("--exact-limit", geo_edge_limit,
                       "edge cap for the geography search (default 14)");

  auto* verify_cmd = app.add_subcommand("verify", "check a solution against an instance");
  verify_cmd->add_option("instance", in_path)->required();
  verify_cmd->add_option("solution", sol_path)->required();

  auto* gen = app.add_subcommand("gen", "generate a reproducible random input");
  gen->add_option("kind", gen_kind, "rect-leq|strip-lt|leg-tiles|cnf-n3p|digraph-3reg|geo")
      ->required();
  gen->add_option("--seed", seed, "random seed (default 1)");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");
  gen->add_option("--m", gm);
  gen->add_option("--n", gn);
  gen->add_option("--max-label", gmax);
  gen->add_option("--colors", gcolors);
  gen->add_option("--half", ghalf, "3-regular digraph half-size (|V| = 2*half)");
  gen->add_option("--vertices", gvertices);
  gen->add_option("--edges", gedges);
  gen->add_flag("--signed", gsigned);
  gen->add_flag("--undirected{false}", gdirected, "generate an undirected geography");
  gen->add_option("--rule", grule, "vertex|edge");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      Instance inst = io::parse_instance(slurp(in_path));
      auto sol = solve_dispatch(inst, force_exact, exact_limit);
      if (!sol) {
        std::cout << "UNSAT\n";
        return kExitNoSolution;
      }
      const bool shapeless = inst.board.kind == BoardSpec::Kind::Shapeless;
      if (!shapeless) {
        auto v = verify(inst, *sol);
        if (!v.ok()) throw CliError{kExitParse, "internal: solver output failed verify: " + v.detail};
      }
      spit(out_path, io::serialize_solution(*sol, shapeless));
      return kExitSolved;
    }
    if (count->parsed()) {
      Instance inst = io::parse_instance(slurp(in_path));
      std::optional<std::uint64_t> lim;
      if (limit > 0) lim = limit;
      if (inst.board.kind == BoardSpec::Kind::Shapeless) {
        std::cout << oracles::enumerate_shapeless(inst) << "\n";
      } else {
        std::cout << oracles::enumerate_strip_solutions(inst, lim).count << "\n";
      }
      return kExitSolved;
    }
    if (reduce->parsed()) {
      auto r = run_reduce(stage, slurp(in_path), signed_variant, rooted, mode, pools);
      spit(out_path, r.output);
      if (!r.certmap.empty() && out_path != "-") spit(out_path + ".certmap.json", r.certmap);
      return kExitSolved;
    }
    if (game_solve->parsed()) {
      auto g = io::parse_game(slurp(in_path));
      if (static_cast<int>(g.tiles.size()) > game_tile_limit)
        throw CliError{kExitGuard, "game search refused: " + std::to_string(g.tiles.size()) +
                                       " tiles exceed the limit of " +
                                       std::to_string(game_tile_limit) +
                                       " (raise with --exact-limit)"};
      auto outcome = games::solve_match_game(g);
      std::cout << player_name(outcome.winner);
      if (outcome.principal_move)
        std::cout << " tile " << outcome.principal_move->first << " rot "
                  << outcome.principal_move->second;
      std::cout << "\n";
      return kExitSolved;
    }
    if (game_geo->parsed()) {
      auto g = io::parse_geo(slurp(in_path));
      if (!force_exact && static_cast<int>(g.graph.edges.size()) > geo_edge_limit)
        throw CliError{kExitGuard, "geography search refused: " +
                                       std::to_string(g.graph.edges.size()) +
                                       " edges exceed the limit of " +
                                       std::to_string(geo_edge_limit) +
                                       " (raise with --exact-limit)"};
      auto outcome = force_exact ? games::solve_geography_matching(g) : games::solve_geography(g);
      std::cout << player_name(outcome.winner);
      if (outcome.principal_move)
        std::cout << " edge " << outcome.principal_move->first << " to "
                  << outcome.principal_move->second;
      std::cout << "\n";
      return kExitSolved;
    }
    if (verify_cmd->parsed()) {
      Instance inst = io::parse_instance(slurp(in_path));
      Solution sol = io::parse_solution(slurp(sol_path));
      auto v = verify(inst, sol);
      if (v.ok()) {
        std::cout << "ok\n";
        return kExitSolved;
      }
      std::cout << (v.status == Verdict::Status::Structural ? "structural: " : "violation: ")
                << v.detail << "\n";
      return kExitNoSolution;
    }
    if (gen->parsed()) {
      std::mt19937_64 eng(seed);
      std::string text;
      if (gen_kind == "rect-leq")
        text = io::serialize_instance(gen_rect_leq(eng, gm, gn, gmax));
      else if (gen_kind == "strip-lt")
        text = io::serialize_instance(gen_strip_lt(eng, gn, gmax));
      else if (gen_kind == "leg-tiles")
        text = io::serialize_instance(gen_leg_tiles(eng, gn, gcolors, gsigned));
      else if (gen_kind == "cnf-n3p")
        text = io::serialize_cnf(gen_cnf_n3p(eng, gm > 0 ? gm : 4, gn));
      else if (gen_kind == "digraph-3reg")
        text = io::serialize_graph(gen_digraph_3reg(eng, ghalf));
      else if (gen_kind == "geo")
        text = io::serialize_geo(gen_geo(eng, gvertices, gedges, gdirected, grule));
      else
        throw CliError{kExitParse, "unknown gen kind " + gen_kind};
      spit(out_path, text);
      return kExitSolved;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
