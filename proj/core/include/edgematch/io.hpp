#pragma once

#include <string>
#include <vector>

#include "edgematch/euler.hpp"
#include "edgematch/games.hpp"
#include "edgematch/model.hpp"
#include "edgematch/reductions.hpp"

// UTF-8 JSON documents with a top-level "kind" discriminator and "version": 1.
// Labels serialize as {"color": "...", "sign": "+"|"-"} or {"num": k}.
// Parsers throw std::invalid_argument on malformed input.
namespace edgematch::io {

// Graphs: vertex count + edge list [id, tail, head]; ids are list positions.
// Partition systems ride along as per-vertex group arrays.
struct GraphFile {
  bool directed = true;
  int num_vertices = 0;
  std::vector<euler::Edge> edges;
  euler::PartitionSystem partitions; // may be empty

  euler::MultiGraph to_undirected() const;
  euler::MultiDigraph to_directed() const;
  static GraphFile of(const euler::MultiGraph& g);
  static GraphFile of(const euler::MultiDigraph& g);
};

std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

std::string serialize_solution(const Solution& sol, bool shapeless);
Solution parse_solution(const std::string& text);

std::string serialize_cnf(const reductions::Cnf& f);
reductions::Cnf parse_cnf(const std::string& text);

std::string serialize_ipc(const reductions::Ipc& p);
reductions::Ipc parse_ipc(const std::string& text);

std::string serialize_graph(const GraphFile& g);
GraphFile parse_graph(const std::string& text);

std::string serialize_geo(const games::GeoInstance& g);
games::GeoInstance parse_geo(const std::string& text);

std::string serialize_game(const games::GameInstance& g);
games::GameInstance parse_game(const std::string& text);

} // namespace edgematch::io
