#pragma once

#include <optional>
#include <string>
#include <vector>

namespace edgematch::euler {

struct Edge {
  int id = 0;
  int a = 0; // tail for directed edges
  int b = 0; // head for directed edges
};

// Undirected multigraph: parallel edges and self-loops permitted.
struct MultiGraph {
  int num_vertices = 0;
  std::vector<Edge> edges;

  int add_vertex();
  int add_edge(int a, int b); // returns the edge id (= index)
  const Edge& edge(int id) const { return edges.at(static_cast<size_t>(id)); }
  int degree(int v) const; // self-loops count 2
};

// Directed multigraph with the same storage; a is the tail, b the head.
struct MultiDigraph {
  int num_vertices = 0;
  std::vector<Edge> edges;

  int add_vertex();
  int add_edge(int tail, int head);
  const Edge& edge(int id) const { return edges.at(static_cast<size_t>(id)); }
  int outdeg(int v) const;
  int indeg(int v) const;
};

// Per-vertex grouping of incident edges; groups[v] partitions the edges at v.
// Undirected use (ft_eulerian): entries are edge ids; a self-loop appears once
// and counts 2 toward its group's size and the vertex degree.  Directed use
// (ft_antidirected_eulerian): entries are incidence codes (out_incidence /
// in_incidence below), so a self-loop's two sides can sit in different groups.
struct PartitionSystem {
  std::vector<std::vector<std::vector<int>>> groups; // [vertex][group] -> entries

  static PartitionSystem empty(int num_vertices);
  bool has_groups() const;
};

inline int out_incidence(int edge_id) { return 2 * edge_id; }
inline int in_incidence(int edge_id) { return 2 * edge_id + 1; }

// Throws std::invalid_argument when p is not a partition of g's incidences.
void validate_partition_system(const MultiGraph& g, const PartitionSystem& p);

enum class StepDir { Forward, Backward };

struct Step {
  int edge_id = 0;
  StepDir dir = StepDir::Forward; // Forward: traversed a -> b as stored
  bool operator==(const Step&) const = default;
};

using Trail = std::vector<Step>;

// Plain Eulerian path (Hierholzer).  Absent iff the edge-bearing part of g is
// disconnected or more than two vertices have odd degree.
std::optional<Trail> eulerian_path(const MultiGraph& g);

// The "split" of a digraph: vertices v+ (= 2v) and v- (= 2v+1); each directed
// edge (u, v) becomes the undirected edge {u+, v-} with the same id.
MultiGraph split(const MultiDigraph& g);

// Antidirected Eulerian trail: directions alternate forward/backward and every
// edge is used once.  Optional constraints pin the first and/or last step's
// direction.
std::optional<Trail> antidirected_eulerian(const MultiDigraph& g,
                                           std::optional<StepDir> start_dir = std::nullopt,
                                           std::optional<StepDir> end_dir = std::nullopt);

// Forbidden-transition Eulerian trail: consecutive edges at a vertex never
// share a group; for cycles the wrap-around pair is also checked.
std::optional<Trail> ft_eulerian(const MultiGraph& g, const PartitionSystem& p,
                                 bool require_cycle = false);

// Composition of split() + ft_eulerian with the antidirected endpoint analysis.
std::optional<Trail> ft_antidirected_eulerian(const MultiDigraph& g,
                                              const PartitionSystem& p,
                                              std::optional<StepDir> start_dir = std::nullopt,
                                              std::optional<StepDir> end_dir = std::nullopt);

} // namespace edgematch::euler
