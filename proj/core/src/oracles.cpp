#include "edgematch/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace edgematch::oracles {

using euler::Edge;
using euler::MultiDigraph;
using euler::MultiGraph;
using euler::StepDir;

// ------------------------------------------------ strip/rect enumeration

namespace {

struct StripSearch {
  const Instance& inst;
  std::optional<std::uint64_t> limit;
  std::size_t keep;
  StripCount result;
  // existence mode (limit == 1): identical tiles and identical-exposure
  // orientations are interchangeable, so canonicalize them away
  bool existence = false;
  std::vector<size_t> first_identical; // tile index -> smallest identical index

  bool done() const { return limit && result.count >= *limit; }

  bool skip_duplicate(const std::vector<char>& used, size_t k) const {
    return existence && first_identical[k] != k && !used[first_identical[k]];
  }

  void record(const std::vector<Placement>& cells) {
    ++result.count;
    if (result.found.size() < keep) {
      Solution s;
      s.cells = cells;
      result.found.push_back(std::move(s));
    }
  }
};

void search_rect(StripSearch& ss, std::vector<Placement>& cells,
                 std::vector<std::array<Label, 4>>& exp, std::vector<char>& used) {
  if (ss.done()) return;
  const Instance& inst = ss.inst;
  const int m = inst.board.rows, n = inst.board.cols;
  const int i = static_cast<int>(cells.size());
  if (i == m * n) {
    ss.record(cells);
    return;
  }
  const int r = i / n, c = i % n;
  for (size_t k = 0; k < inst.squares.size(); ++k) {
    if (used[k] || ss.skip_duplicate(used, k)) continue;
    const SquareTile& t = inst.squares[k];
    for (int rot = 0; rot < 4; ++rot) {
      auto e = square_exposed(t, rot);
      if (ss.existence) {
        bool repeat = false;
        for (int prev = 0; prev < rot && !repeat; ++prev)
          if (square_exposed(t, prev) == e) repeat = true;
        if (repeat) continue;
      }
      if (c > 0 && !compatible(exp[static_cast<size_t>(i - 1)][East], e[West], inst.rule))
        continue;
      if (r > 0 && !compatible(exp[static_cast<size_t>(i - n)][South], e[North], inst.rule,
                               Axis::Vertical))
        continue;
      if (inst.board.kind == BoardSpec::Kind::Strip) {
        if (c == 0 && inst.board.left_boundary &&
            !compatible(*inst.board.left_boundary, e[West], inst.rule))
          continue;
        if (c == n - 1 && inst.board.right_boundary &&
            !compatible(e[East], *inst.board.right_boundary, inst.rule))
          continue;
      }
      used[k] = 1;
      cells.push_back({t.id, rot});
      exp.push_back(e);
      search_rect(ss, cells, exp, used);
      exp.pop_back();
      cells.pop_back();
      used[k] = 0;
      if (ss.done()) return;
    }
  }
}

void search_eqtri(StripSearch& ss, std::vector<Placement>& cells,
                  std::vector<Label>& rights, std::vector<char>& used) {
  if (ss.done()) return;
  const Instance& inst = ss.inst;
  const int n = inst.board.cols;
  const int i = static_cast<int>(cells.size());
  if (i == n) {
    ss.record(cells);
    return;
  }
  const bool up = inst.board.eqtri_cell_up(i);
  const int max_orient = inst.allow_reflection ? 6 : 3;
  for (size_t k = 0; k < inst.triangles.size(); ++k) {
    if (used[k] || ss.skip_duplicate(used, k)) continue;
    const EqTriTile& t = inst.triangles[k];
    for (int code = 0; code < max_orient; ++code) {
      EqTriOrient o = decode_eqtri_orient(code);
      if (ss.existence) {
        bool repeat = false;
        for (int prev = 0; prev < code && !repeat; ++prev)
          if (eqtri_exposed(t, decode_eqtri_orient(prev)) == eqtri_exposed(t, o)) repeat = true;
        if (repeat) continue;
      }
      const Label left = eqtri_left(t, o, up);
      if (i == 0) {
        if (inst.board.left_boundary &&
            !compatible(*inst.board.left_boundary, left, inst.rule))
          continue;
      } else if (!compatible(rights[static_cast<size_t>(i - 1)], left, inst.rule)) {
        continue;
      }
      used[k] = 1;
      cells.push_back({t.id, code});
      rights.push_back(eqtri_right(t, o, up));
      search_eqtri(ss, cells, rights, used);
      rights.pop_back();
      cells.pop_back();
      used[k] = 0;
      if (ss.done()) return;
    }
  }
}

void search_legstrip(StripSearch& ss, std::vector<Placement>& cells,
                     std::vector<Label>& rights, std::vector<char>& used) {
  if (ss.done()) return;
  const Instance& inst = ss.inst;
  const int n = inst.board.cols;
  const int i = static_cast<int>(cells.size());
  if (i == n) {
    ss.record(cells);
    return;
  }
  const int orient = inst.board.leg_cell_hyp_down(i) ? HypDown : HypUp;
  for (size_t k = 0; k < inst.rtriangles.size(); ++k) {
    if (used[k] || ss.skip_duplicate(used, k)) continue;
    const RightTriTile& t = inst.rtriangles[k];
    const Label left = legstrip_left(t, orient);
    if (i > 0 && !compatible(rights[static_cast<size_t>(i - 1)], left, inst.rule)) continue;
    used[k] = 1;
    cells.push_back({t.id, orient});
    rights.push_back(legstrip_right(t, orient));
    search_legstrip(ss, cells, rights, used);
    rights.pop_back();
    cells.pop_back();
    used[k] = 0;
    if (ss.done()) return;
  }
}

void search_hypstrip(StripSearch& ss, std::vector<Placement>& cells,
                     std::vector<Label>& easts, std::vector<char>& used) {
  if (ss.done()) return;
  const Instance& inst = ss.inst;
  const int n = inst.board.cols;
  const int pos = static_cast<int>(cells.size());
  if (pos == 2 * n) {
    ss.record(cells);
    return;
  }
  const int cell = pos / 2;
  const bool first_of_cell = pos % 2 == 0;
  for (size_t k = 0; k < inst.rtriangles.size(); ++k) {
    if (used[k] || ss.skip_duplicate(used, k)) continue;
    const RightTriTile& t = inst.rtriangles[k];
    if (first_of_cell) {
      for (int slot : {HypUL, HypLL}) {
        const Label west = *hypslot_west(t, slot);
        if (cell > 0 && !compatible(easts[static_cast<size_t>(cell - 1)], west, inst.rule))
          continue;
        used[k] = 1;
        cells.push_back({t.id, slot});
        search_hypstrip(ss, cells, easts, used);
        cells.pop_back();
        used[k] = 0;
        if (ss.done()) return;
      }
    } else {
      const int first_slot = cells[static_cast<size_t>(pos - 1)].orient;
      const int slot = first_slot == HypUL ? HypLR : HypUR;
      const RightTriTile* tfirst =
          inst.find_rtriangle(cells[static_cast<size_t>(pos - 1)].tile_id);
      if (!compatible(tfirst->hyp, t.hyp, inst.rule)) continue;
      used[k] = 1;
      cells.push_back({t.id, slot});
      easts.push_back(*hypslot_east(t, slot));
      search_hypstrip(ss, cells, easts, used);
      easts.pop_back();
      cells.pop_back();
      used[k] = 0;
      if (ss.done()) return;
    }
  }
}

} // namespace

StripCount enumerate_strip_solutions(const Instance& inst,
                                     std::optional<std::uint64_t> limit, std::size_t keep) {
  if (inst.board.kind == BoardSpec::Kind::Shapeless)
    throw std::invalid_argument("enumerate_strip_solutions needs a shaped board");
  if (inst.tile_count() != inst.board.tile_capacity())
    throw std::invalid_argument("tile count does not match board capacity");

  StripSearch ss{inst, limit, keep, {}, false, {}};
  ss.existence = limit && *limit == 1 && keep == 0;
  if (ss.existence) {
    auto sig_of = [&](size_t k) -> std::string {
      switch (inst.shape()) {
        case TileShape::Square: {
          const auto& t = inst.squares[k];
          return t.north.str() + "|" + t.east.str() + "|" + t.south.str() + "|" + t.west.str();
        }
        case TileShape::EqTri: {
          const auto& t = inst.triangles[k];
          return t.edges[0].str() + "|" + t.edges[1].str() + "|" + t.edges[2].str();
        }
        default: {
          const auto& t = inst.rtriangles[k];
          return t.leg_left.str() + "|" + t.leg_right.str() + "|" + t.hyp.str();
        }
      }
    };
    const size_t count = static_cast<size_t>(inst.tile_count());
    ss.first_identical.resize(count);
    std::map<std::string, size_t> first;
    for (size_t k = 0; k < count; ++k)
      ss.first_identical[k] = first.emplace(sig_of(k), k).first->second;
  }
  std::vector<Placement> cells;
  std::vector<char> used;
  switch (inst.board.kind) {
    case BoardSpec::Kind::Rect:
    case BoardSpec::Kind::Strip: {
      used.assign(inst.squares.size(), 0);
      std::vector<std::array<Label, 4>> exp;
      search_rect(ss, cells, exp, used);
      break;
    }
    case BoardSpec::Kind::EqTriStrip: {
      used.assign(inst.triangles.size(), 0);
      std::vector<Label> rights;
      search_eqtri(ss, cells, rights, used);
      break;
    }
    case BoardSpec::Kind::LegStrip: {
      used.assign(inst.rtriangles.size(), 0);
      std::vector<Label> rights;
      search_legstrip(ss, cells, rights, used);
      break;
    }
    case BoardSpec::Kind::HypStrip: {
      used.assign(inst.rtriangles.size(), 0);
      std::vector<Label> easts;
      search_hypstrip(ss, cells, easts, used);
      break;
    }
    default: break;
  }
  return std::move(ss.result);
}

// ---------------------------------------------------- shapeless enumeration

namespace {

struct ShapelessSearch {
  const Instance& inst;
  int bound;
  std::uint64_t count = 0;
  bool capture_first = false;
  std::optional<Solution> captured;

  std::map<std::pair<int, int>, std::array<Label, 4>> occupied;
  std::map<std::pair<int, int>, Placement> placed;
  std::set<std::pair<int, int>> seen; // occupied or ever-frontier cells
  std::vector<std::pair<int, int>> frontier;
  std::vector<char> used;

  bool in_bounds(const std::pair<int, int>& c) const {
    return std::abs(c.first) <= bound && std::abs(c.second) <= bound;
  }

  bool fits(const std::pair<int, int>& c, const std::array<Label, 4>& e) const {
    auto right = occupied.find({c.first + 1, c.second});
    if (right != occupied.end() && !compatible(e[East], right->second[West], inst.rule))
      return false;
    auto left = occupied.find({c.first - 1, c.second});
    if (left != occupied.end() && !compatible(left->second[East], e[West], inst.rule))
      return false;
    auto above = occupied.find({c.first, c.second + 1});
    if (above != occupied.end() &&
        !compatible(above->second[South], e[North], inst.rule, Axis::Vertical))
      return false;
    auto below = occupied.find({c.first, c.second - 1});
    if (below != occupied.end() &&
        !compatible(e[South], below->second[North], inst.rule, Axis::Vertical))
      return false;
    return true;
  }

  void push_neighbors(const std::pair<int, int>& c) {
    const std::pair<int, int> nbrs[4] = {{c.first + 1, c.second},
                                         {c.first - 1, c.second},
                                         {c.first, c.second + 1},
                                         {c.first, c.second - 1}};
    for (const auto& nb : nbrs)
      if (in_bounds(nb) && seen.insert(nb).second) frontier.push_back(nb);
  }

  // Redelmeier-style: each connected shape is generated once because cells
  // are adopted in frontier order and skipped cells stay skipped downstream.
  void rec(size_t start_idx, int remaining) {
    if (remaining == 0) {
      ++count;
      if (capture_first && !captured) {
        Solution s;
        for (const auto& [cell, p] : placed)
          s.grid.push_back({cell.first, cell.second, p.tile_id, p.orient});
        captured = std::move(s);
      }
      return;
    }
    if (capture_first && captured) return;
    for (size_t i = start_idx; i < frontier.size(); ++i) {
      const auto cell = frontier[i];
      const size_t old_len = frontier.size();
      for (size_t k = 0; k < inst.squares.size(); ++k) {
        if (used[k]) continue;
        const SquareTile& t = inst.squares[k];
        for (int rot = 0; rot < 4; ++rot) {
          auto e = square_exposed(t, rot);
          if (!fits(cell, e)) continue;
          used[k] = 1;
          occupied.emplace(cell, e);
          placed.emplace(cell, Placement{t.id, rot});
          push_neighbors(cell);
          rec(i + 1, remaining - 1);
          while (frontier.size() > old_len) {
            seen.erase(frontier.back());
            frontier.pop_back();
          }
          occupied.erase(cell);
          placed.erase(cell);
          used[k] = 0;
        }
      }
    }
  }
};

ShapelessSearch make_shapeless_search(const Instance& inst, int bound) {
  if (inst.board.kind != BoardSpec::Kind::Shapeless)
    throw std::invalid_argument("enumerate_shapeless needs a shapeless board");
  if (!inst.board.rooted)
    throw std::invalid_argument("unrooted shapeless instances have no finite count");
  const SquareTile* root = inst.find_square(inst.board.root_tile);
  if (!root) throw std::invalid_argument("rooted tile is not part of the instance");
  if (bound < 0) bound = inst.tile_count();

  ShapelessSearch ss{inst, bound};
  ss.used.assign(inst.squares.size(), 0);
  for (size_t k = 0; k < inst.squares.size(); ++k)
    if (inst.squares[k].id == inst.board.root_tile) ss.used[k] = 1;
  const std::pair<int, int> origin{0, 0};
  ss.occupied.emplace(origin, square_exposed(*root, inst.board.root_orient));
  ss.placed.emplace(origin, Placement{inst.board.root_tile, inst.board.root_orient});
  ss.seen.insert(origin);
  ss.push_neighbors(origin);
  return ss;
}

} // namespace

std::uint64_t enumerate_shapeless(const Instance& inst, int bound) {
  ShapelessSearch ss = make_shapeless_search(inst, bound);
  ss.rec(0, inst.tile_count() - 1);
  return ss.count;
}

std::optional<Solution> solve_shapeless(const Instance& inst, int bound) {
  ShapelessSearch ss = make_shapeless_search(inst, bound);
  ss.capture_first = true;
  ss.rec(0, inst.tile_count() - 1);
  return ss.captured;
}

// --------------------------------------------------------- Hamiltonicity

namespace {

struct HamSearch {
  int n = 0;
  bool directed = true;
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> out; // vertex -> (edge id, target)
  std::vector<char> visited;
  std::uint64_t count = 0;

  // prune on degree bookkeeping: every unvisited vertex still needs a way in,
  // and a way out except the path's final vertex (cycles exempt nobody).
  bool dead(int cur, int cycle_start, std::optional<int> path_end) const {
    std::vector<int> in_avail(static_cast<size_t>(n), 0), out_avail(static_cast<size_t>(n), 0);
    auto tally = [&](int from, int to) {
      const bool from_ok = !visited[static_cast<size_t>(from)] || from == cur;
      const bool to_ok = !visited[static_cast<size_t>(to)] ||
                         (cycle_start >= 0 && to == cycle_start);
      if (from_ok && to_ok) {
        out_avail[static_cast<size_t>(from)]++;
        in_avail[static_cast<size_t>(to)]++;
      }
    };
    for (const auto& e : edges) {
      if (e.a == e.b) continue;
      tally(e.a, e.b);
      if (!directed) tally(e.b, e.a);
    }
    int lacking_out = 0;
    for (int v = 0; v < n; ++v) {
      if (visited[static_cast<size_t>(v)]) continue;
      if (in_avail[static_cast<size_t>(v)] == 0) return true;
      if (out_avail[static_cast<size_t>(v)] == 0) {
        if (cycle_start >= 0) return true;             // cycles: everyone needs out
        if (path_end && v != *path_end) return true;   // fixed end: only t may lack
        ++lacking_out;
        if (lacking_out >= 2) return true;             // free end: at most one may lack
      }
    }
    return false;
  }

  void cycles_from(int cur, int start, int left) {
    if (left == 0) {
      for (const auto& [eid, w] : out[static_cast<size_t>(cur)])
        if (w == start) ++count;
      return;
    }
    if (dead(cur, start, std::nullopt)) return;
    for (const auto& [eid, w] : out[static_cast<size_t>(cur)]) {
      if (visited[static_cast<size_t>(w)]) continue;
      visited[static_cast<size_t>(w)] = 1;
      cycles_from(w, start, left - 1);
      visited[static_cast<size_t>(w)] = 0;
    }
  }

  void paths_from(int cur, std::optional<int> t, int left) {
    if (left == 0) {
      if (!t || cur == *t) ++count;
      return;
    }
    if (dead(cur, -1, t)) return;
    for (const auto& [eid, w] : out[static_cast<size_t>(cur)]) {
      if (visited[static_cast<size_t>(w)]) continue;
      visited[static_cast<size_t>(w)] = 1;
      paths_from(w, t, left - 1);
      visited[static_cast<size_t>(w)] = 0;
    }
  }
};

HamSearch make_search(int n, const std::vector<Edge>& edges, bool directed) {
  HamSearch h;
  h.n = n;
  h.directed = directed;
  h.edges = edges;
  h.out.assign(static_cast<size_t>(n), {});
  for (const auto& e : edges) {
    h.out[static_cast<size_t>(e.a)].push_back({e.id, e.b});
    if (!directed && e.a != e.b) h.out[static_cast<size_t>(e.b)].push_back({e.id, e.a});
  }
  for (auto& v : h.out) std::sort(v.begin(), v.end());
  h.visited.assign(static_cast<size_t>(n), 0);
  return h;
}

std::uint64_t count_ham_impl(int n, const std::vector<Edge>& edges, bool directed,
                             HamMode mode, std::optional<int> s, std::optional<int> t) {
  if (n == 0) return 0;
  HamSearch h = make_search(n, edges, directed);
  if (mode == HamMode::Cycle) {
    if (n == 1) {
      std::uint64_t loops = 0;
      for (const auto& e : edges)
        if (e.a == e.b) ++loops;
      return loops;
    }
    const int start = 0;
    h.visited[static_cast<size_t>(start)] = 1;
    h.cycles_from(start, start, n - 1);
    // an undirected cycle is traversed once per direction from the fixed start
    return directed ? h.count : h.count / 2;
  }
  std::uint64_t total = 0;
  for (int v = 0; v < n; ++v) {
    if (s && v != *s) continue;
    h.visited.assign(static_cast<size_t>(n), 0);
    h.visited[static_cast<size_t>(v)] = 1;
    h.paths_from(v, t, n - 1);
    total += h.count;
    h.count = 0;
  }
  return total;
}

} // namespace

std::uint64_t count_ham(const MultiDigraph& g, HamMode mode, std::optional<int> s,
                        std::optional<int> t) {
  return count_ham_impl(g.num_vertices, g.edges, true, mode, s, t);
}

std::uint64_t count_ham(const MultiGraph& g, HamMode mode, std::optional<int> s,
                        std::optional<int> t) {
  return count_ham_impl(g.num_vertices, g.edges, false, mode, s, t);
}

// --------------------------------------------------------- Eulerian counts

namespace {

struct EulerSearch {
  const std::vector<Edge>& edges;
  bool directed_graph;
  const EulerCountOptions& opt;
  // group id per incidence code (2e = a/tail side, 2e+1 = b/head side), or -1
  std::vector<int> group_of;
  std::vector<char> used;
  std::uint64_t count = 0;

  int first_edge = -1;
  StepDir first_dir = StepDir::Forward;

  bool wrap_ok(int cur, int last_edge, StepDir last_dir, int first_vertex) const {
    if (cur != first_vertex) return false;
    if (group_of.empty()) return true;
    const int last_code = 2 * last_edge + (last_dir == StepDir::Forward ? 1 : 0);
    const int this_code = 2 * first_edge + (first_dir == StepDir::Forward ? 0 : 1);
    const int g1 = group_of[static_cast<size_t>(last_code)];
    const int g2 = group_of[static_cast<size_t>(this_code)];
    return g1 == -1 || g1 != g2;
  }

  // last step: edge id + traversal dir
  void rec(int placed, int cur, int last_edge, StepDir last_dir, int first_vertex) {
    if (placed == static_cast<int>(edges.size())) {
      if (!opt.cycles_only || wrap_ok(cur, last_edge, last_dir, first_vertex)) ++count;
      return;
    }
    for (const auto& e : edges) {
      if (used[static_cast<size_t>(e.id)]) continue;
      // an undirected loop has only one distinguishable traversal; a directed
      // loop still has two (with vs against its direction)
      const int ndirs = (!directed_graph && e.a == e.b) ? 1 : 2;
      for (int d = 0; d < ndirs; ++d) {
        const StepDir dir = d == 0 ? StepDir::Forward : StepDir::Backward;
        const int from = dir == StepDir::Forward ? e.a : e.b;
        const int to = dir == StepDir::Forward ? e.b : e.a;
        if (placed > 0 && from != cur) continue;
        if (directed_graph) {
          if (opt.mode == EulerMode::Plain && dir == StepDir::Backward) continue;
          if (opt.mode == EulerMode::Antidirected && placed > 0 && dir == last_dir) continue;
        } else if (opt.mode == EulerMode::Antidirected) {
          throw std::invalid_argument("antidirected counting needs a digraph");
        }
        if (placed == 0 && opt.start_dir && dir != *opt.start_dir) continue;
        if (placed + 1 == static_cast<int>(edges.size()) && opt.end_dir &&
            dir != *opt.end_dir)
          continue;
        if (!group_of.empty() && placed > 0) {
          // transition at `cur`: arriving incidence of last_edge vs the
          // departing incidence of e
          const int last_code = 2 * last_edge + (last_dir == StepDir::Forward ? 1 : 0);
          const int this_code = 2 * e.id + (dir == StepDir::Forward ? 0 : 1);
          const int g1 = group_of[static_cast<size_t>(last_code)];
          const int g2 = group_of[static_cast<size_t>(this_code)];
          if (g1 != -1 && g1 == g2) continue;
        }
        used[static_cast<size_t>(e.id)] = 1;
        if (placed == 0) {
          first_edge = e.id;
          first_dir = dir;
        }
        rec(placed + 1, to, e.id, dir, placed == 0 ? from : first_vertex);
        used[static_cast<size_t>(e.id)] = 0;
      }
    }
  }
};

std::uint64_t count_euler_impl(int n, const std::vector<Edge>& edges, bool directed,
                               const EulerCountOptions& opt) {
  (void)n;
  if (edges.empty()) return 1;
  EulerSearch es{edges, directed, opt, {}, {}, 0};
  if (opt.partitions) {
    es.group_of.assign(2 * edges.size(), -1);
    int next = 0;
    for (int v = 0; v < static_cast<int>(opt.partitions->groups.size()); ++v) {
      for (const auto& grp : opt.partitions->groups[v]) {
        const int gid = next++;
        for (int entry : grp) {
          if (directed && opt.antidirected_groups) {
            es.group_of[static_cast<size_t>(entry)] = gid; // incidence codes
          } else {
            // undirected groups list edge ids; mark the incidences at v
            const Edge& e = edges[static_cast<size_t>(entry)];
            if (e.a == v) es.group_of[static_cast<size_t>(2 * entry)] = gid;
            if (e.b == v) es.group_of[static_cast<size_t>(2 * entry + 1)] = gid;
          }
        }
      }
    }
  }
  es.used.assign(edges.size(), 0);
  es.rec(0, -1, -1, StepDir::Forward, -1);
  return es.count;
}

} // namespace

std::uint64_t count_euler_paths(const MultiGraph& g, const EulerCountOptions& opt) {
  return count_euler_impl(g.num_vertices, g.edges, false, opt);
}

std::uint64_t count_euler_paths(const MultiDigraph& g, const EulerCountOptions& opt) {
  return count_euler_impl(g.num_vertices, g.edges, true, opt);
}

// ------------------------------------------------------------------- SAT

std::uint64_t count_sat(const reductions::Cnf& f, SatMode mode) {
  if (f.num_vars > 30) throw std::invalid_argument("too many variables for exhaustion");
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (1ull << f.num_vars); ++m) {
    std::vector<bool> a(static_cast<size_t>(f.num_vars));
    for (int v = 0; v < f.num_vars; ++v) a[static_cast<size_t>(v)] = m >> v & 1;
    bool ok = true;
    for (const auto& cl : f.clauses) {
      int sat = 0;
      for (int lit : cl) {
        const bool val = a[static_cast<size_t>(std::abs(lit) - 1)];
        if ((lit > 0) == val) ++sat;
      }
      if (mode == SatMode::Sat ? sat == 0 : sat != 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

IpcAnswer enumerate_ipc(const reductions::Ipc& p) {
  if (p.pairs.size() > 30) throw std::invalid_argument("too many pairs for exhaustion");
  IpcAnswer ans;
  const size_t m = p.pairs.size();
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<char> covered(static_cast<size_t>(p.universe + 1), 0);
    for (size_t j = 0; j < m; ++j) {
      const auto& pr = p.pairs[j];
      const int lo = (mask >> j & 1) ? pr.c : pr.a;
      const int hi = (mask >> j & 1) ? pr.d : pr.b;
      for (int x = lo; x <= hi && x <= p.universe; ++x)
        if (x >= 1) covered[static_cast<size_t>(x)] = 1;
    }
    bool all = true;
    for (int x = 1; x <= p.universe; ++x)
      if (!covered[static_cast<size_t>(x)]) {
        all = false;
        break;
      }
    if (all) {
      ans.coverable = true;
      ans.cover_count++;
    }
  }
  return ans;
}

} // namespace edgematch::oracles
