#include "edgematch/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace edgematch::reductions {

using euler::Edge;
using euler::MultiDigraph;
using euler::MultiGraph;

// ---------------------------------------------------------------- formulas

namespace {

std::map<int, std::pair<int, int>> occurrence_counts(const Cnf& f) {
  std::map<int, std::pair<int, int>> occ; // var -> (positive, negative)
  for (int v = 1; v <= f.num_vars; ++v) occ[v] = {0, 0};
  for (const auto& cl : f.clauses)
    for (int lit : cl) {
      if (lit > 0)
        occ[lit].first++;
      else
        occ[-lit].second++;
    }
  return occ;
}

Label mk(bool signed_variant, const std::string& name, int sign) {
  return signed_variant ? Label::sgn(name, sign) : Label::uns(name);
}

} // namespace

bool Cnf::is_n3p() const {
  for (const auto& cl : clauses) {
    int pos = 0;
    for (int lit : cl)
      if (lit > 0) ++pos;
    if (pos >= 3) return false;
  }
  return true;
}

bool Cnf::is_2p() const {
  for (const auto& [v, pn] : occurrence_counts(*this))
    if (pn.first > 2) return false;
  return true;
}

bool Cnf::is_e1n() const {
  for (const auto& [v, pn] : occurrence_counts(*this))
    if (pn.second != 1) return false;
  return true;
}

bool Cnf::is_31n() const {
  for (const auto& [v, pn] : occurrence_counts(*this))
    if (pn.first + pn.second > 3 || pn.second > 1) return false;
  return true;
}

bool Cnf::all_positive() const {
  for (const auto& cl : clauses)
    for (int lit : cl)
      if (lit < 0) return false;
  return true;
}

bool Cnf::satisfied_by(const std::vector<bool>& a) const {
  for (const auto& cl : clauses) {
    bool sat = false;
    for (int lit : cl) {
      const bool val = a.at(static_cast<size_t>(std::abs(lit) - 1));
      if ((lit > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

// ------------------------------------------------------------- enforce_e1n

E1nResult enforce_e1n(const Cnf& f) {
  if (!f.is_n3p() || !f.is_31n())
    throw std::invalid_argument("enforce_e1n expects an N3P-3SAT-3-1N formula");

  E1nResult r;
  r.original_vars = f.num_vars;

  for (const auto& cl : f.clauses)
    if (cl.empty()) { // defensively: an empty clause is unsatisfiable
      r.formula.num_vars = 1;
      r.formula.clauses = {{1}, {-1}};
      r.var_map = {0};
      return r;
    }

  std::vector<std::vector<int>> clauses = f.clauses;
  std::set<int> eliminated;
  for (;;) {
    std::map<int, std::pair<int, int>> occ;
    for (const auto& cl : clauses)
      for (int lit : cl) {
        auto& pn = occ[std::abs(lit)];
        (lit > 0 ? pn.first : pn.second)++;
      }
    int pick = 0;
    for (const auto& [v, pn] : occ)
      if (pn.second == 0) {
        pick = v;
        break;
      }
    if (pick == 0) break;
    eliminated.insert(pick);
    std::vector<std::vector<int>> next;
    for (const auto& cl : clauses)
      if (std::find(cl.begin(), cl.end(), pick) == cl.end()) next.push_back(cl);
    clauses = std::move(next);
  }
  for (int v : eliminated) r.forced_true.push_back(v);

  // compact the surviving variables
  std::set<int> survivors;
  for (const auto& cl : clauses)
    for (int lit : cl) survivors.insert(std::abs(lit));
  std::map<int, int> renum;
  for (int v : survivors) {
    renum[v] = static_cast<int>(renum.size()) + 1;
    r.var_map.push_back(v);
  }
  r.formula.num_vars = static_cast<int>(survivors.size());
  for (const auto& cl : clauses) {
    std::vector<int> out;
    for (int lit : cl) out.push_back(lit > 0 ? renum[lit] : -renum[-lit]);
    r.formula.clauses.push_back(std::move(out));
  }
  return r;
}

std::vector<bool> e1n_assignment_back(const E1nResult& r, const std::vector<bool>& a) {
  std::vector<bool> out(static_cast<size_t>(r.original_vars), true);
  for (size_t i = 0; i < r.var_map.size(); ++i)
    out[static_cast<size_t>(r.var_map[i] - 1)] = a.at(i);
  return out;
}

// --------------------------------------------------- shared-literal graph

SharedLiteralGraph shared_literal_graph(const Cnf& f) {
  SharedLiteralGraph out;
  out.g.num_vertices = static_cast<int>(f.clauses.size());
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (size_t d = c + 1; d < f.clauses.size(); ++d)
      for (int lit : f.clauses[c])
        if (std::find(f.clauses[d].begin(), f.clauses[d].end(), lit) != f.clauses[d].end()) {
          out.g.add_edge(static_cast<int>(c), static_cast<int>(d));
          out.edge_literal.push_back(lit);
        }
  return out;
}

// ---------------------------------------------------- to_literal_matching

LitMatchResult to_literal_matching(const Cnf& f) {
  if (!f.is_n3p() || !f.is_2p() || !f.is_e1n())
    throw std::invalid_argument("to_literal_matching expects an N3P-3SAT-2P-E1N formula");

  const SharedLiteralGraph slg = shared_literal_graph(f);
  const int nc = slg.g.num_vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nc)); // (edge, other)
  for (const auto& e : slg.g.edges) {
    adj[static_cast<size_t>(e.a)].push_back({e.id, e.b});
    adj[static_cast<size_t>(e.b)].push_back({e.id, e.a});
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  for (int c = 0; c < nc; ++c)
    if (adj[static_cast<size_t>(c)].size() > 2)
      throw std::invalid_argument("shared-literal graph has degree > 2");

  LitMatchResult r;
  r.formula = f;
  r.original_vars = f.num_vars;

  // collect components; orient paths end-to-end and cycles cyclically
  std::vector<char> vseen(static_cast<size_t>(nc), 0);
  std::vector<char> eused(slg.g.edges.size(), 0);
  for (int c0 = 0; c0 < nc; ++c0) {
    if (vseen[static_cast<size_t>(c0)] || adj[static_cast<size_t>(c0)].empty()) continue;
    // component of c0
    std::vector<int> comp;
    {
      std::vector<int> stack{c0};
      std::set<int> s{c0};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (const auto& [eid, w] : adj[static_cast<size_t>(v)])
          if (s.insert(w).second) stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.front() != c0) continue; // handle once, from its min vertex
    for (int v : comp) vseen[static_cast<size_t>(v)] = 1;

    int start = -1;
    for (int v : comp)
      if (adj[static_cast<size_t>(v)].size() == 1) {
        start = v;
        break;
      }
    if (start == -1) start = comp.front(); // cycle

    // walk from start along unused edges; for cycles prefer the lower-index
    // neighbor first (ties by edge id via the sorted adjacency)
    int cur = start;
    for (;;) {
      int pick_edge = -1, pick_other = -1;
      for (const auto& [eid, w] : adj[static_cast<size_t>(cur)])
        if (!eused[static_cast<size_t>(eid)] &&
            (pick_edge == -1 || w < pick_other ||
             (w == pick_other && eid < pick_edge))) {
          pick_edge = eid;
          pick_other = w;
        }
      if (pick_edge == -1) break;
      eused[static_cast<size_t>(pick_edge)] = 1;
      // directed edge (cur -> pick_other) carrying literal x: replace x in the
      // head clause with a helper and add the implication clause
      const int x = slg.edge_literal[static_cast<size_t>(pick_edge)];
      const int h = ++r.formula.num_vars;
      auto& head = r.formula.clauses[static_cast<size_t>(pick_other)];
      auto it = std::find(head.begin(), head.end(), x);
      if (it == head.end()) throw std::logic_error("shared literal missing from head clause");
      *it = h;
      r.formula.clauses.push_back({-h, x});
      r.helpers.push_back({h, x, pick_other});
      cur = pick_other;
    }
  }
  return r;
}

std::vector<bool> litmatch_assignment_back(const LitMatchResult& r, const std::vector<bool>& a) {
  return std::vector<bool>(a.begin(), a.begin() + r.original_vars);
}

std::vector<bool> litmatch_assignment_fwd(const LitMatchResult& r, const std::vector<bool>& a) {
  std::vector<bool> out(a.begin(), a.end());
  out.resize(static_cast<size_t>(r.formula.num_vars));
  for (const auto& h : r.helpers)
    out[static_cast<size_t>(h.var - 1)] = a.at(static_cast<size_t>(h.orig_var - 1));
  return out;
}

// -------------------------------------------------------------- lm_to_ipc

IpcResult lm_to_ipc(const Cnf& f) {
  if (!f.is_n3p() || !f.is_2p() || !f.is_e1n())
    throw std::invalid_argument("lm_to_ipc expects an N3P-3SAT-2P-E1N formula");
  const SharedLiteralGraph slg = shared_literal_graph(f);
  for (int v = 0; v < slg.g.num_vertices; ++v)
    if (slg.g.degree(v) > 1)
      throw std::invalid_argument("formula is not literal-matching");

  const int nc = static_cast<int>(f.clauses.size());
  IpcResult r;
  r.clause_coord.assign(static_cast<size_t>(nc), 0);

  std::vector<std::pair<int, int>> matched; // (c, d) with c < d
  std::vector<char> inpair(static_cast<size_t>(nc), 0);
  for (const auto& e : slg.g.edges) {
    const int c = std::min(e.a, e.b), d = std::max(e.a, e.b);
    matched.push_back({c, d});
    inpair[static_cast<size_t>(c)] = inpair[static_cast<size_t>(d)] = 1;
  }
  std::sort(matched.begin(), matched.end());
  int coord = 0;
  for (const auto& [c, d] : matched) {
    r.clause_coord[static_cast<size_t>(c)] = ++coord;
    r.clause_coord[static_cast<size_t>(d)] = ++coord;
  }
  for (int c = 0; c < nc; ++c)
    if (!inpair[static_cast<size_t>(c)]) r.clause_coord[static_cast<size_t>(c)] = ++coord;

  r.ipc.universe = nc;
  for (int v = 1; v <= f.num_vars; ++v) {
    int neg_clause = -1;
    std::vector<int> pos_clauses;
    for (int c = 0; c < nc; ++c)
      for (int lit : f.clauses[static_cast<size_t>(c)]) {
        if (lit == -v) neg_clause = c;
        if (lit == v) pos_clauses.push_back(c);
      }
    assert(neg_clause != -1);
    Ipc::IntervalPair pr;
    pr.a = pr.b = r.clause_coord[static_cast<size_t>(neg_clause)];
    if (pos_clauses.empty()) {
      pr.c = pr.a;
      pr.d = pr.b;
    } else {
      int lo = r.clause_coord[static_cast<size_t>(pos_clauses.front())];
      int hi = lo;
      for (int c : pos_clauses) {
        lo = std::min(lo, r.clause_coord[static_cast<size_t>(c)]);
        hi = std::max(hi, r.clause_coord[static_cast<size_t>(c)]);
      }
      assert(hi - lo <= 1);
      pr.c = lo;
      pr.d = hi;
    }
    r.ipc.pairs.push_back(pr);
  }
  return r;
}

std::vector<bool> ipc_selection_to_assignment(const IpcResult& r, const std::vector<bool>& second) {
  // variable j+1 is true iff the second interval of pair j is chosen; a
  // duplicated pair (no positive occurrence) always means false
  std::vector<bool> out(second);
  for (size_t j = 0; j < r.ipc.pairs.size() && j < out.size(); ++j) {
    const auto& pr = r.ipc.pairs[j];
    if (pr.a == pr.c && pr.b == pr.d) out[j] = false;
  }
  return out;
}

// --------------------------------------------------------- ipc_to_lt_strip

LtStripResult ipc_to_lt_strip(const Ipc& p) {
  LtStripResult r;
  int next_id = 0;
  for (int i = 1; i <= p.universe; ++i)
    for (int copy = 0; copy < 2; ++copy) {
      SquareTile t;
      t.id = next_id++;
      t.north = t.east = t.south = t.west = Label::num(i);
      r.instance.squares.push_back(t);
      r.element_tile_ids.push_back(t.id);
    }
  for (const auto& pr : p.pairs) {
    SquareTile t;
    t.id = next_id++;
    t.west = Label::num(pr.a - 1);
    t.north = Label::num(pr.c - 1);
    t.east = Label::num(pr.b + 1);
    t.south = Label::num(pr.d + 1);
    r.instance.squares.push_back(t);
    r.pair_tile_ids.push_back(t.id);
  }
  r.instance.board = BoardSpec::strip(2 * p.universe + static_cast<int>(p.pairs.size()));
  r.instance.rule = CompatRule::StrictLess;
  return r;
}

std::vector<bool> lt_strip_selection_back(const LtStripResult& r, const Solution& sol) {
  std::vector<bool> second(r.pair_tile_ids.size(), false);
  for (const auto& pl : sol.cells)
    for (size_t j = 0; j < r.pair_tile_ids.size(); ++j)
      if (pl.tile_id == r.pair_tile_ids[j]) second[j] = pl.orient % 2 == 1;
  return second;
}

// ---------------------------------------------------------- XOR template

XorTemplate xor_template() {
  XorTemplate t;
  t.arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {3, 0}};
  return t;
}

// ----------------------------------------------- one_in_three_to_ham_cycle

namespace {

// logical edges are realized as chains of XOR-block corridors
struct LogicalEdge {
  std::vector<int> blocks; // constraint ids anchored here, in creation order
  int child1 = -1, child2 = -1;
};

struct XorConstraint {
  int edge_a = -1, edge_b = -1;
  bool alive = true;
  int block_base = -1; // first of its 6 vertices once instantiated
};

struct Builder {
  MultiDigraph g;
  std::vector<std::string> names;

  int vertex(const std::string& name) {
    const int v = g.add_vertex();
    names.push_back(name);
    return v;
  }
};

} // namespace

GadgetGraph one_in_three_to_ham_cycle(const Cnf& f) {
  for (const auto& cl : f.clauses) {
    if (cl.size() != 3) throw std::invalid_argument("clauses must have exactly 3 literals");
    for (int lit : cl)
      if (lit <= 0) throw std::invalid_argument("clauses must be positive");
  }
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());

  // logical edges: 0..n-1 variable true-edges, then 3 per clause, then
  // phantoms appended by crossing elimination
  std::vector<LogicalEdge> ledges(static_cast<size_t>(n + 3 * m));
  auto true_edge = [&](int var) { return var - 1; };
  auto right_edge = [&](int clause, int slot) { return n + 3 * clause + slot; };

  std::vector<XorConstraint> cons;
  std::vector<int> phantom_edges;
  struct Anchor {
    int vpos, cpos;
  };
  std::vector<Anchor> anchors; // for original constraints only

  {
    // original constraints in (clause, slot) order
    std::vector<std::tuple<int, int, int>> by_var; // (var, clause, slot)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < 3; ++k) {
        const int var = f.clauses[static_cast<size_t>(j)][static_cast<size_t>(k)];
        XorConstraint c;
        c.edge_a = true_edge(var);
        c.edge_b = right_edge(j, k);
        const int cid = static_cast<int>(cons.size());
        cons.push_back(c);
        ledges[static_cast<size_t>(c.edge_a)].blocks.push_back(cid);
        ledges[static_cast<size_t>(c.edge_b)].blocks.push_back(cid);
        by_var.push_back({var, j, k});
        anchors.push_back({0, 3 * j + k});
      }
    std::vector<int> order(cons.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return by_var[static_cast<size_t>(a)] < by_var[static_cast<size_t>(b)];
    });
    for (size_t rank = 0; rank < order.size(); ++rank)
      anchors[static_cast<size_t>(order[rank])].vpos = static_cast<int>(rank);
  }

  // crossing elimination: split the first line of each discordant pair and
  // equalize its halves through a phantom edge pair
  const int num_original = static_cast<int>(cons.size());
  std::vector<int> cur(static_cast<size_t>(num_original));
  for (int i = 0; i < num_original; ++i) cur[static_cast<size_t>(i)] = i;
  auto split_constraint = [&](int cid) {
    XorConstraint old = cons[static_cast<size_t>(cid)];
    cons[static_cast<size_t>(cid)].alive = false;
    auto remove_from = [&](int eid) {
      auto& blocks = ledges[static_cast<size_t>(eid)].blocks;
      blocks.erase(std::remove(blocks.begin(), blocks.end(), cid), blocks.end());
    };
    remove_from(old.edge_a);
    remove_from(old.edge_b);

    auto split_edge = [&](int eid) {
      const int c1 = static_cast<int>(ledges.size());
      ledges.push_back({});
      const int c2 = static_cast<int>(ledges.size());
      ledges.push_back({});
      ledges[static_cast<size_t>(eid)].child1 = c1;
      ledges[static_cast<size_t>(eid)].child2 = c2;
      return std::pair<int, int>{c1, c2};
    };
    auto [a1, a2] = split_edge(old.edge_a);
    auto [b1, b2] = split_edge(old.edge_b);
    const int p = static_cast<int>(ledges.size());
    ledges.push_back({});
    phantom_edges.push_back(p);

    auto add_cons = [&](int ea, int eb) {
      const int cid2 = static_cast<int>(cons.size());
      cons.push_back({ea, eb, true, -1});
      ledges[static_cast<size_t>(ea)].blocks.push_back(cid2);
      ledges[static_cast<size_t>(eb)].blocks.push_back(cid2);
      return cid2;
    };
    add_cons(a1, b1);
    const int tail = add_cons(a2, b2);
    add_cons(a1, p);
    add_cons(p, a2);
    return tail;
  };
  for (int i = 0; i < num_original; ++i)
    for (int j = i + 1; j < num_original; ++j) {
      const long dv = anchors[static_cast<size_t>(i)].vpos - anchors[static_cast<size_t>(j)].vpos;
      const long dc = anchors[static_cast<size_t>(i)].cpos - anchors[static_cast<size_t>(j)].cpos;
      if (dv * dc < 0) cur[static_cast<size_t>(i)] = split_constraint(cur[static_cast<size_t>(i)]);
    }

  // instantiate one XOR block per alive constraint
  Builder b;
  const XorTemplate xt = xor_template();
  for (size_t cid = 0; cid < cons.size(); ++cid) {
    if (!cons[cid].alive) continue;
    cons[cid].block_base = b.g.num_vertices;
    for (int k = 0; k < xt.size; ++k)
      b.vertex("xor" + std::to_string(cid) + "." + std::to_string(k));
    for (const auto& [x, y] : xt.arcs)
      b.g.add_edge(cons[cid].block_base + x, cons[cid].block_base + y);
  }

  // realize a logical edge from one host vertex to another through its chain
  auto chain_of = [&](auto&& self, int eid) -> std::vector<std::pair<int, int>> {
    std::vector<std::pair<int, int>> ports; // (in vertex, out vertex) per block
    const LogicalEdge& e = ledges[static_cast<size_t>(eid)];
    for (int cid : e.blocks) {
      const XorConstraint& c = cons[static_cast<size_t>(cid)];
      assert(c.alive);
      if (c.edge_a == eid)
        ports.push_back({c.block_base + xt.left_in, c.block_base + xt.left_out});
      else
        ports.push_back({c.block_base + xt.right_in, c.block_base + xt.right_out});
    }
    if (e.child1 != -1) {
      auto c1 = self(self, e.child1);
      auto c2 = self(self, e.child2);
      ports.insert(ports.end(), c1.begin(), c1.end());
      ports.insert(ports.end(), c2.begin(), c2.end());
    }
    return ports;
  };
  auto realize = [&](int eid, int from, int to) {
    auto ports = chain_of(chain_of, eid);
    int cur_v = from;
    for (const auto& [pin, pout] : ports) {
      b.g.add_edge(cur_v, pin);
      cur_v = pout;
    }
    return b.g.add_edge(cur_v, to); // id of the final arc (the whole arc when empty)
  };

  GadgetGraph gg;
  std::vector<std::pair<int, int>> var_pair(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) {
    const int va = b.vertex("va" + std::to_string(x));
    const int vb = b.vertex("vb" + std::to_string(x));
    var_pair[static_cast<size_t>(x - 1)] = {va, vb};
  }
  std::vector<std::pair<int, int>> ph_pair;
  for (size_t k = 0; k < phantom_edges.size(); ++k) {
    const int pa = b.vertex("pa" + std::to_string(k));
    const int pb = b.vertex("pb" + std::to_string(k));
    ph_pair.push_back({pa, pb});
  }
  struct ClauseV {
    std::array<int, 3> t, bb;
    std::array<int, 6> loop;
  };
  std::vector<ClauseV> cv(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < 3; ++k) {
      cv[static_cast<size_t>(j)].t[static_cast<size_t>(k)] =
          b.vertex("c" + std::to_string(j) + ".t" + std::to_string(k));
      cv[static_cast<size_t>(j)].bb[static_cast<size_t>(k)] =
          b.vertex("c" + std::to_string(j) + ".b" + std::to_string(k));
    }
    for (int k = 0; k < 6; ++k)
      cv[static_cast<size_t>(j)].loop[static_cast<size_t>(k)] =
          b.vertex("c" + std::to_string(j) + ".L" + std::to_string(k));
  }

  gg.var_false_edge.resize(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) {
    const auto [va, vb] = var_pair[static_cast<size_t>(x - 1)];
    gg.var_false_edge[static_cast<size_t>(x - 1)] = b.g.add_edge(va, vb); // false arc
    realize(true_edge(x), va, vb);
  }
  for (size_t k = 0; k < phantom_edges.size(); ++k) {
    const auto [pa, pb] = ph_pair[k];
    b.g.add_edge(pa, pb); // absorber arc
    realize(phantom_edges[k], pa, pb);
  }
  gg.clause_vertices.resize(static_cast<size_t>(m));
  // hexagon k's loop slot deliberately does not follow the chain order;
  // with aligned slots the three left detours of an all-true traversal can
  // tile the loop in three segments, while this permutation strands a vertex
  // whenever more than one hexagon enters
  const int loop_slot[3] = {0, 4, 2};
  for (int j = 0; j < m; ++j) {
    const ClauseV& c = cv[static_cast<size_t>(j)];
    for (int k = 0; k < 3; ++k) {
      realize(right_edge(j, k), c.t[static_cast<size_t>(k)], c.bb[static_cast<size_t>(k)]);
      b.g.add_edge(c.t[static_cast<size_t>(k)], c.loop[static_cast<size_t>(loop_slot[k])]);
      b.g.add_edge(c.loop[static_cast<size_t>((loop_slot[k] + 5) % 6)],
                   c.bb[static_cast<size_t>(k)]);
      if (k < 2)
        b.g.add_edge(c.bb[static_cast<size_t>(k)], c.t[static_cast<size_t>(k + 1)]);
    }
    for (int k = 0; k < 6; ++k)
      b.g.add_edge(c.loop[static_cast<size_t>(k)], c.loop[static_cast<size_t>((k + 1) % 6)]);
    for (int k = 0; k < 3; ++k) {
      gg.clause_vertices[static_cast<size_t>(j)].push_back(c.t[static_cast<size_t>(k)]);
      gg.clause_vertices[static_cast<size_t>(j)].push_back(c.bb[static_cast<size_t>(k)]);
    }
    for (int k = 0; k < 6; ++k)
      gg.clause_vertices[static_cast<size_t>(j)].push_back(c.loop[static_cast<size_t>(k)]);
  }

  // the master chain: variables, phantoms, clauses, back to the start
  std::vector<std::pair<int, int>> chain;
  for (int x = 1; x <= n; ++x) chain.push_back(var_pair[static_cast<size_t>(x - 1)]);
  for (const auto& p : ph_pair) chain.push_back(p);
  for (int j = 0; j < m; ++j)
    chain.push_back({cv[static_cast<size_t>(j)].t[0], cv[static_cast<size_t>(j)].bb[2]});
  if (chain.empty()) throw std::invalid_argument("empty formula has no gadget graph");
  for (size_t i = 0; i < chain.size(); ++i)
    b.g.add_edge(chain[i].second, chain[(i + 1) % chain.size()].first);

  gg.g = std::move(b.g);
  gg.vertex_names = std::move(b.names);
  return gg;
}

std::vector<bool> ham_cycle_assignment_back(const GadgetGraph& gg,
                                            const std::vector<char>& arc_in_cycle) {
  std::vector<bool> out;
  for (int fe : gg.var_false_edge)
    out.push_back(!arc_in_cycle.at(static_cast<size_t>(fe)));
  return out;
}

// ----------------------------------------------------- ham_cycle_to_ham_path

HamPathResult ham_cycle_to_ham_path(const MultiDigraph& g) {
  for (int v = 0; v < g.num_vertices; ++v) {
    const int i = g.indeg(v), o = g.outdeg(v);
    if (i + o != 3 || i > 2 || o > 2 || i < 1 || o < 1)
      throw std::invalid_argument("graph is not 3-regular with max in/outdegree 2");
  }
  // a forced edge: the out-arc of an indegree-2 vertex, else an in-arc of an
  // outdegree-2 vertex
  int forced = -1;
  for (int v = 0; v < g.num_vertices && forced == -1; ++v)
    if (g.indeg(v) == 2)
      for (const auto& e : g.edges)
        if (e.a == v) {
          forced = e.id;
          break;
        }
  for (int v = 0; v < g.num_vertices && forced == -1; ++v)
    if (g.outdeg(v) == 2)
      for (const auto& e : g.edges)
        if (e.b == v) {
          forced = e.id;
          break;
        }
  if (forced == -1) throw std::invalid_argument("no forced edge found");

  HamPathResult r;
  r.split_tail = g.edge(forced).a;
  r.split_head = g.edge(forced).b;
  r.g.num_vertices = g.num_vertices;
  for (const auto& e : g.edges)
    if (e.id != forced) r.g.add_edge(e.a, e.b);

  auto add = [&](const std::string&) { return r.g.add_vertex(); };
  // end gadget at u = split_tail: u -> w1 -> w2 -> w3 -> w4 -> t
  const int w1 = add("w1"), w2 = add("w2"), w3 = add("w3"), w4 = add("w4"), t = add("t");
  r.g.add_edge(r.split_tail, w1);
  r.g.add_edge(w1, w2);
  r.g.add_edge(w2, w3);
  r.g.add_edge(w3, w4);
  r.g.add_edge(w4, w1);
  r.g.add_edge(w4, t);
  r.g.add_edge(t, w2);
  r.g.add_edge(t, w3);
  // start gadget at v = split_head: s -> m4 -> m3 -> m2 -> m1 -> v
  const int m1 = add("m1"), m2 = add("m2"), m3 = add("m3"), m4 = add("m4"), s = add("s");
  r.g.add_edge(m1, r.split_head);
  r.g.add_edge(m2, m1);
  r.g.add_edge(m3, m2);
  r.g.add_edge(m4, m3);
  r.g.add_edge(m1, m4);
  r.g.add_edge(s, m4);
  r.g.add_edge(m2, s);
  r.g.add_edge(m3, s);
  r.s = s;
  r.t = t;
  r.gadget_vertices = {w1, w2, w3, w4, t, m1, m2, m3, m4, s};
  return r;
}

std::vector<int> ham_path_cycle_back(const HamPathResult& r, const std::vector<int>& path) {
  std::set<int> gadget(r.gadget_vertices.begin(), r.gadget_vertices.end());
  std::vector<int> cycle;
  for (int v : path)
    if (!gadget.count(v)) cycle.push_back(v);
  // the path runs s .. v .. u .. t; the source cycle is v .. u plus the edge u->v
  return cycle;
}

// --------------------------------------------------- ham_path_to_square_strip

namespace {

struct VertexProfile {
  std::vector<int> in, out; // edge ids sorted
};

std::vector<VertexProfile> profiles(const MultiDigraph& g) {
  std::vector<VertexProfile> ps(static_cast<size_t>(g.num_vertices));
  for (const auto& e : g.edges) {
    ps[static_cast<size_t>(e.b)].in.push_back(e.id);
    ps[static_cast<size_t>(e.a)].out.push_back(e.id);
  }
  for (auto& p : ps) {
    std::sort(p.in.begin(), p.in.end());
    std::sort(p.out.begin(), p.out.end());
  }
  return ps;
}

} // namespace

SquareStripResult ham_path_to_square_strip(const MultiDigraph& g, int s, int t,
                                           bool signed_variant) {
  auto ps = profiles(g);
  for (int v = 0; v < g.num_vertices; ++v) {
    const size_t i = ps[static_cast<size_t>(v)].in.size();
    const size_t o = ps[static_cast<size_t>(v)].out.size();
    if (i + o != 3 || i > 2 || o > 2 || i < 1 || o < 1)
      throw std::invalid_argument("graph is not 3-regular with max in/outdegree 2");
  }
  if (ps[static_cast<size_t>(s)].out.size() != 1)
    throw std::invalid_argument("s must have outdegree 1");
  if (ps[static_cast<size_t>(t)].in.size() != 1)
    throw std::invalid_argument("t must have indegree 1");

  auto vi = [&](int v) { return "vI(" + std::to_string(v) + ")"; };
  auto vo = [&](int v) { return "vO(" + std::to_string(v) + ")"; };
  auto vx = [&](int v) { return "vX(" + std::to_string(v) + ")"; };
  auto ec = [&](int e) { return "e(" + std::to_string(e) + ")"; };
  auto L = [&](const std::string& name, int sign) { return mk(signed_variant, name, sign); };

  SquareStripResult r;
  int next_id = 0;
  auto add_tile = [&](int v, Label w, Label n, Label e, Label sL) {
    SquareTile tile;
    tile.id = next_id++;
    tile.west = std::move(w);
    tile.north = std::move(n);
    tile.east = std::move(e);
    tile.south = std::move(sL);
    r.instance.squares.push_back(tile);
    r.tile_vertex.push_back(v);
  };

  for (int v = 0; v < g.num_vertices; ++v) {
    const auto& p = ps[static_cast<size_t>(v)];
    if (p.in.size() == 1) {
      // 1 in, 2 out: the vX-pinned in-tile plus one tile per out-edge
      if (v != s) add_tile(v, L(ec(p.in[0]), +1), L(vx(v), -1), L(vi(v), -1), L(vx(v), -1));
      if (v != t)
        for (int e : p.out)
          add_tile(v, L(vo(v), +1), L(vo(v), -1), L(vi(v), +1), L(ec(e), -1));
    } else {
      // 2 in, 1 out: one tile per in-edge plus the vX-pinned out-tile
      if (v != s)
        for (int e : p.in)
          add_tile(v, L(ec(e), +1), L(vi(v), +1), L(vi(v), -1), L(vo(v), -1));
      if (v != t) add_tile(v, L(vo(v), +1), L(vx(v), -1), L(ec(p.out[0]), -1), L(vx(v), -1));
    }
  }

  const int count = 3 * g.num_vertices - 4;
  assert(static_cast<int>(r.instance.squares.size()) == count);
  r.instance.board = BoardSpec::strip(count, L(vo(s), -1));
  r.instance.rule = signed_variant ? CompatRule::SignedOpp : CompatRule::UnsignedEq;
  return r;
}

std::vector<int> square_strip_path_back(const SquareStripResult& r, const Solution& sol) {
  std::vector<int> order;
  for (const auto& pl : sol.cells) {
    int v = -1;
    for (size_t i = 0; i < r.instance.squares.size(); ++i)
      if (r.instance.squares[i].id == pl.tile_id) v = r.tile_vertex[i];
    if (order.empty() || order.back() != v) order.push_back(v);
  }
  return order;
}

// --------------------------------------------------- ham_path_to_eqtri_strip

namespace {

EqTriStripResult unsolvable_eqtri(bool signed_variant) {
  EqTriStripResult r;
  for (int i = 0; i < 2; ++i) {
    EqTriTile t;
    t.id = i;
    for (int k = 0; k < 3; ++k)
      t.edges[static_cast<size_t>(k)] =
          mk(signed_variant, "U(" + std::to_string(3 * i + k) + ")", +1);
    r.instance.triangles.push_back(t);
    r.tile_vertex.push_back(-1);
  }
  r.instance.board = BoardSpec::eqtri_strip(2);
  r.instance.rule = signed_variant ? CompatRule::SignedOpp : CompatRule::UnsignedEq;
  return r;
}

} // namespace

EqTriStripResult ham_path_to_eqtri_strip(const MultiGraph& g, std::optional<int> s,
                                         std::optional<int> t, bool signed_variant) {
  for (const auto& e : g.edges)
    if (e.a == e.b) throw std::invalid_argument("self-loops are not supported");
  std::vector<std::vector<int>> inc(static_cast<size_t>(g.num_vertices));
  for (const auto& e : g.edges) {
    inc[static_cast<size_t>(e.a)].push_back(e.id);
    inc[static_cast<size_t>(e.b)].push_back(e.id);
  }
  for (auto& v : inc) std::sort(v.begin(), v.end());
  for (int v = 0; v < g.num_vertices; ++v)
    if (inc[static_cast<size_t>(v)].size() > 3)
      throw std::invalid_argument("maximum degree 3 exceeded");
  if (s.has_value() != t.has_value())
    throw std::invalid_argument("s and t must be given together");
  if (s) {
    if (inc[static_cast<size_t>(*s)].size() != 1 || inc[static_cast<size_t>(*t)].size() != 1)
      throw std::invalid_argument("s and t must have degree 1");
  }
  // vertices that cannot lie on any Hamiltonian path make the instance
  // unsolvable; mirror that with a canonical unsolvable output
  for (int v = 0; v < g.num_vertices; ++v) {
    const bool is_end = (s && (*s == v || *t == v));
    if (!is_end && inc[static_cast<size_t>(v)].size() < 2) return unsolvable_eqtri(signed_variant);
  }

  // sign of an edge color at v: + when the (arbitrary, fixed) orientation
  // points into v; edges point from the smaller endpoint to the larger
  auto sign_at = [&](const Edge& e, int v) {
    const int head = std::max(e.a, e.b);
    return v == head ? +1 : -1;
  };
  auto vcol = [&](int v) { return "v(" + std::to_string(v) + ")"; };
  auto ecol = [&](int e) { return "e(" + std::to_string(e) + ")"; };

  EqTriStripResult r;
  int next_id = 0;
  int next_u = 0;
  auto ulabel = [&]() { return mk(signed_variant, "U(" + std::to_string(next_u++) + ")", +1); };
  auto add_tile = [&](int v, Label e0, Label e1, Label e2) {
    EqTriTile t3;
    t3.id = next_id++;
    t3.edges = {std::move(e0), std::move(e1), std::move(e2)};
    r.instance.triangles.push_back(t3);
    r.tile_vertex.push_back(v);
  };

  for (int v = 0; v < g.num_vertices; ++v) {
    if (s && *s == v) {
      // leftmost: boundary color on the left slant, the edge color on the
      // right slant, the unique color facing the box
      const Edge& e = g.edge(inc[static_cast<size_t>(v)][0]);
      add_tile(v, mk(signed_variant, "s", +1), ulabel(),
               mk(signed_variant, ecol(e.id), sign_at(e, v)));
      continue;
    }
    if (t && *t == v) {
      const Edge& e = g.edge(inc[static_cast<size_t>(v)][0]);
      add_tile(v, mk(signed_variant, ecol(e.id), sign_at(e, v)), ulabel(), ulabel());
      continue;
    }
    std::vector<Label> items;
    for (int eid : inc[static_cast<size_t>(v)])
      items.push_back(mk(signed_variant, ecol(eid), sign_at(g.edge(eid), v)));
    if (items.size() == 2) // half-edge pad for degree-2 vertices
      items.push_back(mk(signed_variant, "h(" + std::to_string(v) + ")", +1));
    for (auto& item : items)
      add_tile(v, mk(signed_variant, vcol(v), +1), item, mk(signed_variant, vcol(v), -1));
  }

  std::optional<Label> boundary;
  if (s) boundary = mk(signed_variant, "s", -1);
  r.instance.board =
      BoardSpec::eqtri_strip(static_cast<int>(r.instance.triangles.size()), boundary);
  r.instance.rule = signed_variant ? CompatRule::SignedOpp : CompatRule::UnsignedEq;
  r.instance.allow_reflection = false;
  return r;
}

std::vector<int> eqtri_strip_path_back(const EqTriStripResult& r, const Solution& sol) {
  std::vector<int> order;
  for (const auto& pl : sol.cells) {
    int v = -1;
    for (size_t i = 0; i < r.instance.triangles.size(); ++i)
      if (r.instance.triangles[i].id == pl.tile_id) v = r.tile_vertex[i];
    if (order.empty() || order.back() != v) order.push_back(v);
  }
  return order;
}

// --------------------------------------------------- square_strip_to_hyp_tri

HypTriResult square_strip_to_hyp_tri(const Instance& strip) {
  if (strip.board.kind != BoardSpec::Kind::Strip)
    throw std::invalid_argument("input must be a square strip");
  if (strip.board.left_boundary || strip.board.right_boundary)
    throw std::invalid_argument("boundary-bearing strips are not supported");
  if (strip.rule != CompatRule::UnsignedEq && strip.rule != CompatRule::SignedOpp)
    throw std::invalid_argument(
        "hypotenuse pairing needs unsigned or signed matching (unique colors)");

  HypTriResult r;
  r.instance.rule = strip.rule;
  const bool sgn = strip.rule == CompatRule::SignedOpp;
  int k = 0;
  for (const auto& sq : strip.squares) {
    const Label hyp = mk(sgn, "U(" + std::to_string(sq.id) + ")", +1);
    RightTriTile t1;
    t1.id = 2 * k;
    t1.leg_left = sq.west;
    t1.leg_right = sq.north;
    t1.hyp = hyp;
    RightTriTile t2;
    t2.id = 2 * k + 1;
    t2.leg_left = sq.east;
    t2.leg_right = sq.south;
    t2.hyp = hyp;
    r.instance.rtriangles.push_back(t1);
    r.instance.rtriangles.push_back(t2);
    ++k;
  }
  r.instance.board = BoardSpec::hyp_strip(strip.board.cols);
  return r;
}

Solution hyp_tri_solution_back(const HypTriResult& r, const Instance& strip,
                               const Solution& sol) {
  Solution out;
  for (size_t c = 0; 2 * c + 1 < sol.cells.size(); ++c) {
    const auto& a = sol.cells[2 * c];
    const auto& b = sol.cells[2 * c + 1];
    const int square_idx = a.tile_id / 2;
    const bool a_is_first = a.tile_id % 2 == 0; // tile carrying (west, north)
    const int square_id = strip.squares.at(static_cast<size_t>(square_idx)).id;
    int rot;
    if (a.orient == HypUL)
      rot = a_is_first ? 0 : 2;
    else // HypLL
      rot = a_is_first ? 3 : 1;
    (void)b;
    out.cells.push_back({square_id, rot});
  }
  return out;
}

// ------------------------------------------------------- euler_to_leg_strip

LegStripResult euler_to_leg_strip(const MultiGraph& g, bool signed_variant) {
  if (g.edges.empty()) throw std::invalid_argument("graph has no edges");
  for (int v = 0; v < g.num_vertices; ++v)
    if (g.degree(v) % 2 != 0) throw std::invalid_argument("all degrees must be even");
  {
    MultiGraph copy = g;
    auto trail = euler::eulerian_path(copy);
    if (!trail) throw std::invalid_argument("graph must be connected");
  }

  int attach = -1;
  for (int v = 0; v < g.num_vertices && attach == -1; ++v)
    if (g.degree(v) > 0) attach = v;

  MultiGraph gp = g;
  const int s = gp.add_vertex();
  const int t = gp.add_vertex();
  gp.add_edge(s, attach);
  gp.add_edge(t, attach);
  const int mprime = static_cast<int>(gp.edges.size());

  auto vcol = [&](int v) { return "v(" + std::to_string(v) + ")"; };
  auto vxcol = [&](int v) { return "vX(" + std::to_string(v) + ")"; };
  auto ecol = [&](int e) { return "e(" + std::to_string(e) + ")"; };

  LegStripResult r;
  int next_id = 0;
  auto add_tile = [&](Label l, Label rt, Label h) {
    RightTriTile tile;
    tile.id = next_id++;
    tile.leg_left = std::move(l);
    tile.leg_right = std::move(rt);
    tile.hyp = std::move(h);
    r.instance.rtriangles.push_back(tile);
  };
  const Label H = mk(signed_variant, "H", +1);

  if (!signed_variant) {
    add_tile(Label::uns("U1"), Label::uns(vcol(s)), H);
    add_tile(Label::uns("U2"), Label::uns(vcol(t)), H);
    for (const auto& e : gp.edges) {
      add_tile(Label::uns(ecol(e.id)), Label::uns(vcol(e.a)), H);
      add_tile(Label::uns(ecol(e.id)), Label::uns(vcol(e.b)), H);
    }
    r.blowup = 1;
  } else {
    add_tile(Label::sgn("U1", +1), Label::sgn(vcol(s), +1), H);
    add_tile(Label::sgn("U2", +1), Label::sgn(vcol(t), +1), H);
    for (int v = 0; v < g.num_vertices; ++v) {
      const int k = gp.degree(v);
      if (v == s || v == t || k == 0) continue;
      for (int c = 0; c < k / 2; ++c) {
        add_tile(Label::sgn(vxcol(v), -1), Label::sgn(vcol(v), +1), H);
        add_tile(Label::sgn(vxcol(v), +1), Label::sgn(vcol(v), +1), H);
      }
    }
    for (const auto& e : gp.edges) {
      const int u = std::min(e.a, e.b), v = std::max(e.a, e.b);
      add_tile(Label::sgn(ecol(e.id), -1), Label::sgn(vcol(u), -1), H);
      add_tile(Label::sgn(ecol(e.id), +1), Label::sgn(vcol(v), -1), H);
    }
    // c = 2^(m-1) * prod over inner vertices of (deg/2)!^2
    unsigned __int128 c = 1;
    for (int i = 0; i < mprime - 1; ++i) c *= 2;
    for (int v = 0; v < g.num_vertices; ++v) {
      const int k = gp.degree(v);
      if (v == s || v == t || k == 0) continue;
      for (int f = 2; f <= k / 2; ++f) {
        c *= static_cast<unsigned>(f);
        c *= static_cast<unsigned>(f);
      }
    }
    if (c > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("blowup factor exceeds 64 bits");
    r.blowup = static_cast<std::uint64_t>(c);
  }

  r.instance.board =
      BoardSpec::leg_strip(static_cast<int>(r.instance.rtriangles.size()), true);
  r.instance.rule = signed_variant ? CompatRule::SignedOpp : CompatRule::UnsignedEq;
  return r;
}

// ------------------------------------------------------- strip_to_shapeless

ShapelessResult strip_to_shapeless(const Instance& strip, bool rooted) {
  if (strip.board.kind != BoardSpec::Kind::Strip || !strip.board.left_boundary ||
      strip.board.right_boundary || strip.board.cols < 1)
    throw std::invalid_argument(
        "input must be a left-boundary strip without a right boundary");
  if (strip.rule != CompatRule::UnsignedEq && strip.rule != CompatRule::SignedOpp)
    throw std::invalid_argument("shapeless reduction needs unsigned or signed matching");
  for (const auto& t : strip.squares)
    for (int k = 0; k < 4; ++k)
      if (t.side(k).color.rfind("fr:", 0) == 0)
        throw std::invalid_argument("input colors may not use the reserved fr: prefix");

  const bool sgn = strip.rule == CompatRule::SignedOpp;
  const int n = strip.board.cols;

  ShapelessResult r;
  r.instance.rule = strip.rule;
  int next_id = 0;
  for (const auto& t : strip.squares)
    next_id = std::max(next_id, t.id + 1);
  int next_u = 0;
  auto U = [&]() { return mk(sgn, "fr:U(" + std::to_string(next_u++) + ")", +1); };
  // wall color k of chain `name`: indexed per position when rooted
  auto wall = [&](const std::string& name, int k, int sign) {
    return rooted ? mk(sgn, "fr:" + name + std::to_string(k), sign) : mk(sgn, "fr:" + name, sign);
  };
  int cap_id = -1;
  auto add_tile = [&](Label w, Label nn, Label e, Label ss) {
    SquareTile t;
    t.id = next_id++;
    t.west = std::move(w);
    t.north = std::move(nn);
    t.east = std::move(e);
    t.south = std::move(ss);
    r.instance.squares.push_back(t);
    r.frame_tile_ids.push_back(t.id);
    return t.id;
  };

  // cap at (0,0); top wall (1..n+1, 0); TR corner (n+2, 0); right wall
  // (n+2, -1..-3); BR (n+2, -4); bottom wall (n+1..1, -4); BL (0, -4);
  // left wall (0, -3); the L tile (0, -2).  The tray is (1..n, -2).
  cap_id = add_tile(U(), U(), wall("TW", 1, -1), U());
  for (int i = 1; i <= n + 1; ++i)
    add_tile(wall("TW", i, +1), U(), wall("TW", i + 1, -1), U());
  add_tile(wall("TW", n + 2, +1), U(), U(), wall("RW", 1, -1));
  for (int j = 1; j <= 3; ++j)
    add_tile(U(), wall("RW", j, +1), U(), wall("RW", j + 1, -1));
  add_tile(wall("BW", 1, -1), wall("RW", 4, +1), U(), U());
  for (int i = 1; i <= n + 1; ++i)
    add_tile(wall("BW", i + 1, -1), U(), wall("BW", i, +1), U());
  add_tile(U(), wall("LW", 1, -1), wall("BW", n + 2, +1), U());
  add_tile(U(), wall("LW", 2, -1), U(), wall("LW", 1, +1));
  add_tile(U(), U(), *strip.board.left_boundary, wall("LW", 2, +1));

  for (const auto& t : strip.squares) r.instance.squares.push_back(t);

  r.instance.board = rooted ? BoardSpec::shapeless_rooted(cap_id, 0) : BoardSpec::shapeless();
  r.tray_x0 = 1;
  r.tray_y = -2;
  return r;
}

Solution shapeless_strip_back(const ShapelessResult& r, const Solution& sol) {
  const int n = static_cast<int>(r.instance.squares.size() - r.frame_tile_ids.size());
  std::map<int, Placement> by_x;
  for (const auto& p : sol.grid)
    if (p.y == r.tray_y && p.x >= r.tray_x0 && p.x < r.tray_x0 + n)
      by_x[p.x] = {p.tile_id, p.orient};
  Solution out;
  for (const auto& [x, pl] : by_x) out.cells.push_back(pl);
  return out;
}

// -------------------------------------------------------------- game transforms

games::GeoInstance vertex_geo_to_edge_geo(const games::GeoInstance& geo) {
  if (!geo.directed || geo.rule != games::GeoRule::Vertex || geo.vertex_partizan() ||
      geo.edge_partizan())
    throw std::invalid_argument("input must be impartial directed vertex geography");

  games::GeoInstance out;
  out.directed = true;
  out.rule = games::GeoRule::Edge;
  // per vertex: b (corridor middle) and c (corridor exit); per original edge a
  // fresh entry stub a_e
  std::vector<int> bv(static_cast<size_t>(geo.graph.num_vertices));
  std::vector<int> cv(static_cast<size_t>(geo.graph.num_vertices));
  for (int v = 0; v < geo.graph.num_vertices; ++v) {
    bv[static_cast<size_t>(v)] = out.graph.add_vertex();
    cv[static_cast<size_t>(v)] = out.graph.add_vertex();
  }
  // the start vertex counts as visited, so its corridor is already spent
  for (int v = 0; v < geo.graph.num_vertices; ++v)
    if (v != geo.start)
      out.graph.add_edge(bv[static_cast<size_t>(v)], cv[static_cast<size_t>(v)]);
  for (const auto& e : geo.graph.edges) {
    const int stub = out.graph.add_vertex();
    out.graph.add_edge(cv[static_cast<size_t>(e.a)], stub);
    out.graph.add_edge(stub, bv[static_cast<size_t>(e.b)]);
  }
  out.start = cv[static_cast<size_t>(geo.start)];
  return out;
}

games::GeoInstance partizanize(const games::GeoInstance& geo, PartizanMode mode) {
  using games::Player;
  if (mode == PartizanMode::VertexFromBipartition || mode == PartizanMode::EdgeFromDirection) {
    if (geo.vertex_partizan() || geo.edge_partizan())
      throw std::invalid_argument("input must be impartial");
    // 2-color the underlying undirected graph
    const int n = geo.graph.num_vertices;
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& e : geo.graph.edges) {
      if (e.a == e.b) throw std::invalid_argument("graph is not bipartite");
      adj[static_cast<size_t>(e.a)].push_back(e.b);
      adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    for (int v0 = 0; v0 < n; ++v0) {
      if (side[static_cast<size_t>(v0)] != -1) continue;
      side[static_cast<size_t>(v0)] = 0;
      std::vector<int> stack{v0};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)]) {
          if (side[static_cast<size_t>(w)] == -1) {
            side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
            stack.push_back(w);
          } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
            throw std::invalid_argument("graph is not bipartite");
          }
        }
      }
    }
    games::GeoInstance out = geo;
    const int start_side = side[static_cast<size_t>(geo.start)];
    if (mode == PartizanMode::VertexFromBipartition) {
      // P1 moves first, onto the side opposite the start
      out.vertex_colors.resize(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v)
        out.vertex_colors[static_cast<size_t>(v)] =
            side[static_cast<size_t>(v)] == start_side ? Player::P2 : Player::P1;
    } else {
      if (!geo.directed) throw std::invalid_argument("edge coloring needs a digraph");
      out.edge_colors.resize(geo.graph.edges.size());
      for (const auto& e : geo.graph.edges)
        out.edge_colors[static_cast<size_t>(e.id)] =
            side[static_cast<size_t>(e.a)] == start_side ? Player::P1 : Player::P2;
    }
    return out;
  }

  // UndirectEdgePartizan: simulate each directed colored edge with the
  // four-edge gadget (corridor plus a punish leaf)
  if (!geo.directed || geo.rule != games::GeoRule::Edge || !geo.edge_partizan())
    throw std::invalid_argument("input must be directed edge-partizan edge geography");
  games::GeoInstance out;
  out.directed = false;
  out.rule = games::GeoRule::Edge;
  out.start = geo.start;
  out.graph.num_vertices = geo.graph.num_vertices;
  for (const auto& e : geo.graph.edges) {
    const Player c = geo.edge_colors[static_cast<size_t>(e.id)];
    const Player notc = c == Player::P1 ? Player::P2 : Player::P1;
    const int a = out.graph.add_vertex();
    const int b = out.graph.add_vertex();
    const int leaf = out.graph.add_vertex();
    out.edge_colors.push_back(c);
    out.graph.add_edge(e.a, a);
    out.edge_colors.push_back(notc);
    out.graph.add_edge(a, b);
    out.edge_colors.push_back(c);
    out.graph.add_edge(b, e.b);
    out.edge_colors.push_back(notc);
    out.graph.add_edge(b, leaf);
  }
  return out;
}

games::GameInstance geo_to_matching_game(const games::GeoInstance& geo, PoolMode pools) {
  using games::Player;
  games::GameInstance out;

  if (geo.rule == games::GeoRule::Edge) {
    const bool sgn = geo.directed;
    if (pools == PoolMode::PerPlayer && !geo.edge_partizan())
      throw std::invalid_argument("per-player pools need an edge-partizan instance");
    if (pools == PoolMode::Shared && geo.edge_partizan())
      throw std::invalid_argument("shared pool needs an impartial instance");
    auto vcol = [&](int v) { return "v(" + std::to_string(v) + ")"; };
    int next_u = 0;
    for (const auto& e : geo.graph.edges) {
      SquareTile t;
      t.id = e.id;
      t.west = sgn ? Label::sgn(vcol(e.a), -1) : Label::uns(vcol(e.a));
      t.east = sgn ? Label::sgn(vcol(e.b), +1) : Label::uns(vcol(e.b));
      t.north = mk(sgn, "U(" + std::to_string(next_u++) + ")", +1);
      t.south = mk(sgn, "U(" + std::to_string(next_u++) + ")", +1);
      out.tiles.push_back(t);
      if (pools == PoolMode::PerPlayer) {
        if (geo.edge_colors[static_cast<size_t>(e.id)] == Player::P1)
          out.pool1.push_back(e.id);
        else
          out.pool2.push_back(e.id);
      }
    }
    out.left_boundary =
        sgn ? Label::sgn(vcol(geo.start), +1) : Label::uns(vcol(geo.start));
    out.rule = sgn ? CompatRule::SignedOpp : CompatRule::UnsignedEq;
    out.shared_pool = pools == PoolMode::Shared;
    return out;
  }

  // vertex geography via the per-vertex tile triples (shared pool only)
  if (pools != PoolMode::Shared)
    throw std::invalid_argument("the vertex-geography game uses a shared pool");
  if (!geo.directed || geo.vertex_partizan() || geo.edge_partizan())
    throw std::invalid_argument("the vertex-geography game needs an impartial digraph");
  auto ps = profiles(geo.graph);
  for (int v = 0; v < geo.graph.num_vertices; ++v) {
    const size_t i = ps[static_cast<size_t>(v)].in.size();
    const size_t o = ps[static_cast<size_t>(v)].out.size();
    if (i + o != 3 || i > 2 || o > 2 || i < 1 || o < 1)
      throw std::invalid_argument("graph must be 3-regular with max in/outdegree 2");
  }
  if (ps[static_cast<size_t>(geo.start)].out.size() != 2)
    throw std::invalid_argument("the start vertex must have outdegree 2");

  auto vi = [&](int v) { return "vI(" + std::to_string(v) + ")"; };
  auto vo = [&](int v) { return "vO(" + std::to_string(v) + ")"; };
  auto vx = [&](int v) { return "vX(" + std::to_string(v) + ")"; };
  auto ec = [&](int e) { return "e(" + std::to_string(e) + ")"; };
  int next_id = 0;
  auto add_tile = [&](Label w, Label nn, Label e, Label sL) {
    SquareTile tile;
    tile.id = next_id++;
    tile.west = std::move(w);
    tile.north = std::move(nn);
    tile.east = std::move(e);
    tile.south = std::move(sL);
    out.tiles.push_back(tile);
  };
  for (int v = 0; v < geo.graph.num_vertices; ++v) {
    const auto& p = ps[static_cast<size_t>(v)];
    const bool is_start = v == geo.start;
    if (p.in.size() == 1) {
      if (!is_start)
        add_tile(Label::sgn(ec(p.in[0]), +1), Label::sgn(vx(v), -1), Label::sgn(vi(v), -1),
                 Label::sgn(vx(v), -1));
      for (int e : p.out)
        add_tile(Label::sgn(vo(v), +1), Label::sgn(vo(v), -1), Label::sgn(vi(v), +1),
                 Label::sgn(ec(e), -1));
    } else {
      if (!is_start)
        for (int e : p.in)
          add_tile(Label::sgn(ec(e), +1), Label::sgn(vi(v), +1), Label::sgn(vi(v), -1),
                   Label::sgn(vo(v), -1));
      add_tile(Label::sgn(vo(v), +1), Label::sgn(vx(v), -1), Label::sgn(ec(p.out[0]), -1),
               Label::sgn(vx(v), -1));
    }
  }
  out.left_boundary = Label::sgn(vi(geo.start), -1);
  out.rule = CompatRule::SignedOpp;
  out.shared_pool = true;
  return out;
}

} // namespace edgematch::reductions
