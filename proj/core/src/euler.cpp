#include "edgematch/euler.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace edgematch::euler {

int MultiGraph::add_vertex() { return num_vertices++; }

int MultiGraph::add_edge(int a, int b) {
  if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices)
    throw std::invalid_argument("edge endpoint out of range");
  const int id = static_cast<int>(edges.size());
  edges.push_back({id, a, b});
  return id;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.a == v) ++d;
    if (e.b == v) ++d;
  }
  return d;
}

int MultiDigraph::add_vertex() { return num_vertices++; }

int MultiDigraph::add_edge(int tail, int head) {
  if (tail < 0 || tail >= num_vertices || head < 0 || head >= num_vertices)
    throw std::invalid_argument("edge endpoint out of range");
  const int id = static_cast<int>(edges.size());
  edges.push_back({id, tail, head});
  return id;
}

int MultiDigraph::outdeg(int v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.a == v) ++d;
  return d;
}

int MultiDigraph::indeg(int v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.b == v) ++d;
  return d;
}

PartitionSystem PartitionSystem::empty(int num_vertices) {
  PartitionSystem p;
  p.groups.resize(static_cast<size_t>(num_vertices));
  return p;
}

bool PartitionSystem::has_groups() const {
  for (const auto& v : groups)
    if (!v.empty()) return true;
  return false;
}

void validate_partition_system(const MultiGraph& g, const PartitionSystem& p) {
  if (static_cast<int>(p.groups.size()) > g.num_vertices)
    throw std::invalid_argument("partition system mentions unknown vertices");
  for (int v = 0; v < static_cast<int>(p.groups.size()); ++v) {
    if (p.groups[v].empty()) continue; // implicit singletons
    std::multiset<int> listed;
    for (const auto& grp : p.groups[v])
      for (int e : grp) listed.insert(e);
    std::multiset<int> incident;
    for (const auto& e : g.edges) {
      if (e.a == v || e.b == v) incident.insert(e.id); // loops listed once
    }
    if (listed != incident)
      throw std::invalid_argument("groups at vertex " + std::to_string(v) +
                                  " do not partition its incident edges");
  }
}

// ------------------------------------------------------------ plain Euler

namespace {

bool edge_bearing_connected(const MultiGraph& g) {
  if (g.edges.empty()) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices));
  for (const auto& e : g.edges) {
    adj[static_cast<size_t>(e.a)].push_back(e.b);
    adj[static_cast<size_t>(e.b)].push_back(e.a);
  }
  std::vector<char> seen(static_cast<size_t>(g.num_vertices), 0);
  std::vector<int> stack{g.edges[0].a};
  seen[static_cast<size_t>(g.edges[0].a)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (!seen[static_cast<size_t>(v)] && g.degree(v) > 0) return false;
  return true;
}

std::vector<int> odd_vertices(const MultiGraph& g) {
  std::vector<int> deg(static_cast<size_t>(g.num_vertices), 0);
  for (const auto& e : g.edges) {
    deg[static_cast<size_t>(e.a)]++;
    deg[static_cast<size_t>(e.b)]++;
  }
  std::vector<int> odd;
  for (int v = 0; v < g.num_vertices; ++v)
    if (deg[static_cast<size_t>(v)] % 2) odd.push_back(v);
  return odd;
}

} // namespace

std::optional<Trail> eulerian_path(const MultiGraph& g) {
  if (g.edges.empty()) return Trail{};
  const auto odd = odd_vertices(g);
  if (odd.size() != 0 && odd.size() != 2) return std::nullopt;
  if (!edge_bearing_connected(g)) return std::nullopt;

  struct Arc {
    int edge_id;
    int other;
  };
  std::vector<std::vector<Arc>> adj(static_cast<size_t>(g.num_vertices));
  for (const auto& e : g.edges) {
    adj[static_cast<size_t>(e.a)].push_back({e.id, e.b});
    adj[static_cast<size_t>(e.b)].push_back({e.id, e.a});
  }
  for (auto& v : adj)
    std::sort(v.begin(), v.end(),
              [](const Arc& x, const Arc& y) { return x.edge_id < y.edge_id; });

  int start = odd.empty() ? g.edges[0].a : *std::min_element(odd.begin(), odd.end());
  std::vector<size_t> ptr(static_cast<size_t>(g.num_vertices), 0);
  std::vector<char> used(g.edges.size(), 0);

  struct Frame {
    int vertex;
    int via_edge; // -1 for the start frame
    StepDir dir;
  };
  std::vector<Frame> stack{{start, -1, StepDir::Forward}};
  Trail out;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto& lst = adj[static_cast<size_t>(f.vertex)];
    size_t& i = ptr[static_cast<size_t>(f.vertex)];
    while (i < lst.size() && used[static_cast<size_t>(lst[i].edge_id)]) ++i;
    if (i == lst.size()) {
      if (f.via_edge >= 0) out.push_back({f.via_edge, f.dir});
      stack.pop_back();
    } else {
      const Arc a = lst[i++];
      used[static_cast<size_t>(a.edge_id)] = 1;
      const Edge& e = g.edge(a.edge_id);
      const StepDir d = (f.vertex == e.a) ? StepDir::Forward : StepDir::Backward;
      stack.push_back({a.other, a.edge_id, d});
    }
  }
  std::reverse(out.begin(), out.end());
  if (out.size() != g.edges.size()) return std::nullopt;
  return out;
}

// ----------------------------------------------------------------- split

MultiGraph split(const MultiDigraph& g) {
  MultiGraph s;
  s.num_vertices = 2 * g.num_vertices;
  for (const auto& e : g.edges) s.edges.push_back({e.id, 2 * e.a, 2 * e.b + 1});
  return s;
}

// --------------------------------------------------- endpoint post-analysis

namespace {

Trail reversed(const Trail& t) {
  Trail r(t.rbegin(), t.rend());
  for (auto& s : r)
    s.dir = (s.dir == StepDir::Forward) ? StepDir::Backward : StepDir::Forward;
  return r;
}

bool dirs_ok(const Trail& t, std::optional<StepDir> s, std::optional<StepDir> e) {
  if (t.empty()) return true;
  if (s && t.front().dir != *s) return false;
  if (e && t.back().dir != *e) return false;
  return true;
}

// Applies the Cor 4.6 case analysis to a trail found in the split graph.
// `rotatable` means the trail is a closed cycle whose rotations are all valid.
std::optional<Trail> constrain_endpoints(Trail t, bool rotatable,
                                         std::optional<StepDir> start_dir,
                                         std::optional<StepDir> end_dir) {
  if (t.empty()) return t;
  if (!rotatable) {
    if (dirs_ok(t, start_dir, end_dir)) return t;
    Trail r = reversed(t);
    if (dirs_ok(r, start_dir, end_dir)) return r;
    return std::nullopt;
  }
  // Closed trail: directions alternate, so both starting parities exist when
  // there are at least two steps; a rotation fixes the first direction and the
  // last is then forced.
  const size_t e = t.size();
  StepDir want_first;
  if (start_dir) {
    want_first = *start_dir;
  } else if (end_dir) {
    const bool flip = (e - 1) % 2 == 1;
    want_first = flip ? (*end_dir == StepDir::Forward ? StepDir::Backward : StepDir::Forward)
                      : *end_dir;
  } else {
    return t;
  }
  size_t k = 0;
  while (k < e && t[static_cast<size_t>(k)].dir != want_first) ++k;
  if (k == e) return std::nullopt;
  std::rotate(t.begin(), t.begin() + static_cast<long>(k), t.end());
  if (!dirs_ok(t, start_dir, end_dir)) return std::nullopt;
  return t;
}

} // namespace

std::optional<Trail> antidirected_eulerian(const MultiDigraph& g,
                                           std::optional<StepDir> start_dir,
                                           std::optional<StepDir> end_dir) {
  const MultiGraph gp = split(g);
  auto trail = eulerian_path(gp);
  if (!trail) return std::nullopt;
  const bool rotatable = odd_vertices(gp).empty() && !trail->empty();
  return constrain_endpoints(std::move(*trail), rotatable, start_dir, end_dir);
}

// ---------------------------------------------------- forbidden transitions

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

struct FtResult {
  Trail trail;
  bool rotatable = false;
};

// Kotzig-style construction.  Slots: edge e owns slots 2e (a side) and 2e+1
// (b side).  The pairing at each vertex is built group-contiguously, cycles
// are merged along a DFS, and at most one same-group pairing (only possible
// in the all-even case) ends up at the trail's cut point.
std::optional<FtResult> ft_eulerian_impl(const MultiGraph& g_in, const PartitionSystem& p_in,
                                         bool require_cycle) {
  validate_partition_system(g_in, p_in);
  if (g_in.edges.empty()) return FtResult{{}, false};
  if (!edge_bearing_connected(g_in)) return std::nullopt;
  auto odd = odd_vertices(g_in);
  if (odd.size() != 0 && odd.size() != 2) return std::nullopt;
  if (require_cycle && !odd.empty()) return std::nullopt;

  MultiGraph g = g_in;
  int virtual_edge = -1;
  if (odd.size() == 2) virtual_edge = g.add_edge(odd[0], odd[1]);

  const int n = g.num_vertices;
  const int m = static_cast<int>(g.edges.size());

  // slot -> vertex, slot -> global group id
  std::vector<int> slot_vertex(static_cast<size_t>(2 * m), -1);
  for (const auto& e : g.edges) {
    slot_vertex[static_cast<size_t>(2 * e.id)] = e.a;
    slot_vertex[static_cast<size_t>(2 * e.id + 1)] = e.b;
  }

  // groups per vertex as lists of slots; vertices without explicit groups get
  // implicit singletons (one group per incidence).
  std::vector<int> slot_group(static_cast<size_t>(2 * m), -1);
  std::vector<std::vector<int>> slots_at(static_cast<size_t>(n));
  std::vector<std::vector<std::pair<int, int>>> incidences(static_cast<size_t>(n));
  for (const auto& e : g.edges) {
    incidences[static_cast<size_t>(e.a)].push_back({e.id, 2 * e.id});
    incidences[static_cast<size_t>(e.b)].push_back({e.id, 2 * e.id + 1});
  }
  int next_group = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<int>> slot_groups; // this vertex's groups, as slots
    std::vector<std::pair<int, int>>& incident = incidences[static_cast<size_t>(v)];
    std::sort(incident.begin(), incident.end());
    const bool explicit_groups =
        v < static_cast<int>(p_in.groups.size()) && !p_in.groups[v].empty();
    if (explicit_groups && virtual_edge == -1) {
      for (const auto& grp : p_in.groups[v]) {
        std::vector<int> slots;
        for (int eid : grp)
          for (const auto& [id, slot] : incident)
            if (id == eid) slots.push_back(slot);
        std::sort(slots.begin(), slots.end());
        slot_groups.push_back(std::move(slots));
      }
    } else if (explicit_groups) {
      // same, but the virtual edge gets its own singleton group
      for (const auto& grp : p_in.groups[v]) {
        std::vector<int> slots;
        for (int eid : grp)
          for (const auto& [id, slot] : incident)
            if (id == eid && eid != virtual_edge) slots.push_back(slot);
        std::sort(slots.begin(), slots.end());
        if (!slots.empty()) slot_groups.push_back(std::move(slots));
      }
      for (const auto& [id, slot] : incident)
        if (id == virtual_edge) slot_groups.push_back({slot});
    } else {
      // implicit: each incidence is its own group, so no transition is
      // forbidden here (a bare loop still closes into a cycle)
      for (const auto& [id, slot] : incident) slot_groups.push_back({slot});
    }
    // group-contiguous ordering, groups keyed by smallest slot
    std::sort(slot_groups.begin(), slot_groups.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                if (x.empty() || y.empty()) return x.size() > y.size();
                return x.front() < y.front();
              });
    for (auto& grp : slot_groups) {
      const int gid = next_group++;
      for (int s : grp) {
        slot_group[static_cast<size_t>(s)] = gid;
        slots_at[static_cast<size_t>(v)].push_back(s);
      }
    }
  }

  // feasibility: total excess over the even-degree bound
  int excess = 0;
  for (int v = 0; v < n; ++v) {
    const int d = static_cast<int>(slots_at[static_cast<size_t>(v)].size());
    std::map<int, int> size_of;
    for (int s : slots_at[static_cast<size_t>(v)]) size_of[slot_group[static_cast<size_t>(s)]]++;
    for (const auto& [gid, sz] : size_of) excess += std::max(0, sz - d / 2);
  }
  const int budget = (require_cycle || virtual_edge != -1) ? 0 : 1;
  if (excess > budget) return std::nullopt;

  // pairing: slot j with slot j + d/2 in the contiguous order
  std::vector<int> pair_(static_cast<size_t>(2 * m), -1);
  for (int v = 0; v < n; ++v) {
    const auto& slots = slots_at[static_cast<size_t>(v)];
    const int d = static_cast<int>(slots.size());
    for (int j = 0; j < d / 2; ++j) {
      pair_[static_cast<size_t>(slots[static_cast<size_t>(j)])] = slots[static_cast<size_t>(j + d / 2)];
      pair_[static_cast<size_t>(slots[static_cast<size_t>(j + d / 2)])] = slots[static_cast<size_t>(j)];
    }
  }
  auto bad = [&](int x, int y) {
    return slot_group[static_cast<size_t>(x)] == slot_group[static_cast<size_t>(y)] ? 1 : 0;
  };

  // cycle decomposition: orbit of succ(s) = pair_[s ^ 1]
  auto succ = [&](int s) { return pair_[static_cast<size_t>(s ^ 1)]; };
  std::vector<int> cyc(static_cast<size_t>(m), -1);
  int num_cycles = 0;
  for (int s = 0; s < 2 * m; ++s) {
    const int e = s / 2;
    if (cyc[static_cast<size_t>(e)] != -1) continue;
    const int k = num_cycles++;
    int t = s;
    do {
      cyc[static_cast<size_t>(t / 2)] = k;
      t = succ(t);
    } while (t != s);
  }

  // merge cycles along a DFS of g
  UnionFind uf(num_cycles);
  std::vector<std::vector<std::pair<int, int>>> vertex_cycles(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::map<int, int> first_slot;
    for (int s : slots_at[static_cast<size_t>(v)])
      first_slot.emplace(cyc[static_cast<size_t>(s / 2)], s);
    for (const auto& [c, s] : first_slot)
      vertex_cycles[static_cast<size_t>(v)].push_back({c, s});
  }
  int start_v = -1;
  for (int v = 0; v < n && start_v == -1; ++v)
    if (!slots_at[static_cast<size_t>(v)].empty()) start_v = v;
  int merged = uf.find(cyc[static_cast<size_t>(slots_at[static_cast<size_t>(start_v)].front() / 2)]);

  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<int> stack{start_v};
  visited[static_cast<size_t>(start_v)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [c, sc] : vertex_cycles[static_cast<size_t>(v)]) {
      if (uf.find(c) == uf.find(merged)) continue;
      int s1 = -1;
      for (int s : slots_at[static_cast<size_t>(v)])
        if (uf.find(cyc[static_cast<size_t>(s / 2)]) == uf.find(merged)) {
          s1 = s;
          break;
        }
      assert(s1 != -1);
      const int s2 = pair_[static_cast<size_t>(s1)];
      const int s1p = sc;
      const int s2p = pair_[static_cast<size_t>(s1p)];
      const int oldbad = bad(s1, s2) + bad(s1p, s2p);
      const int abad = bad(s1, s2p) + bad(s1p, s2);
      const int bbad = bad(s1, s1p) + bad(s2, s2p);
      if (abad <= oldbad && abad <= bbad) {
        pair_[static_cast<size_t>(s1)] = s2p;
        pair_[static_cast<size_t>(s2p)] = s1;
        pair_[static_cast<size_t>(s1p)] = s2;
        pair_[static_cast<size_t>(s2)] = s1p;
      } else {
        assert(bbad <= oldbad);
        pair_[static_cast<size_t>(s1)] = s1p;
        pair_[static_cast<size_t>(s1p)] = s1;
        pair_[static_cast<size_t>(s2)] = s2p;
        pair_[static_cast<size_t>(s2p)] = s2;
      }
      uf.unite(c, merged);
      merged = uf.find(merged);
    }
    for (int s : slots_at[static_cast<size_t>(v)]) {
      const Edge& e = g.edge(s / 2);
      const int w = (s % 2 == 0) ? e.b : e.a;
      if (!visited[static_cast<size_t>(w)]) {
        visited[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int e = 0; e < m; ++e) assert(uf.find(cyc[static_cast<size_t>(e)]) == merged);

  // locate the single bad pairing, if any
  int bad_slot = -1;
  for (int s = 0; s < 2 * m && bad_slot == -1; ++s)
    if (pair_[static_cast<size_t>(s)] >= 0 && bad(s, pair_[static_cast<size_t>(s)])) bad_slot = s;

  // choose the cut and walk the single cycle
  int start_slot;
  bool rotatable = false;
  if (virtual_edge != -1) {
    start_slot = succ(2 * virtual_edge); // step after the virtual edge
  } else if (bad_slot != -1) {
    start_slot = bad_slot; // wrap transition = the one bad pairing
  } else {
    start_slot = 0;
    rotatable = true;
  }
  Trail out;
  int t = start_slot;
  do {
    const int e = t / 2;
    if (e != virtual_edge)
      out.push_back({e, (t % 2 == 0) ? StepDir::Forward : StepDir::Backward});
    t = succ(t);
  } while (t != start_slot);
  if (static_cast<int>(out.size()) != static_cast<int>(g_in.edges.size())) return std::nullopt;
  return FtResult{std::move(out), rotatable};
}

} // namespace

std::optional<Trail> ft_eulerian(const MultiGraph& g, const PartitionSystem& p,
                                 bool require_cycle) {
  auto r = ft_eulerian_impl(g, p, require_cycle);
  if (!r) return std::nullopt;
  return std::move(r->trail);
}

std::optional<Trail> ft_antidirected_eulerian(const MultiDigraph& g,
                                              const PartitionSystem& p,
                                              std::optional<StepDir> start_dir,
                                              std::optional<StepDir> end_dir) {
  const MultiGraph gp = split(g);
  // translate groups onto the split vertices: incidence codes put out-sides at
  // v+ and in-sides at v-
  PartitionSystem pp = PartitionSystem::empty(gp.num_vertices);
  for (int v = 0; v < static_cast<int>(p.groups.size()); ++v) {
    for (const auto& grp : p.groups[v]) {
      std::vector<int> plus, minus;
      for (int code : grp) {
        const int eid = code / 2;
        if (eid < 0 || eid >= static_cast<int>(g.edges.size()))
          throw std::invalid_argument("partition group mentions unknown edge");
        const Edge& e = g.edge(eid);
        if (code % 2 == 0) {
          if (e.a != v) throw std::invalid_argument("out-incidence listed at a non-tail vertex");
          plus.push_back(eid);
        } else {
          if (e.b != v) throw std::invalid_argument("in-incidence listed at a non-head vertex");
          minus.push_back(eid);
        }
      }
      if (!plus.empty()) pp.groups[static_cast<size_t>(2 * v)].push_back(std::move(plus));
      if (!minus.empty()) pp.groups[static_cast<size_t>(2 * v + 1)].push_back(std::move(minus));
    }
  }
  auto r = ft_eulerian_impl(gp, pp, false);
  if (!r) return std::nullopt;
  return constrain_endpoints(std::move(r->trail), r->rotatable, start_dir, end_dir);
}

} // namespace edgematch::euler
