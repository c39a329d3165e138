#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgematch/euler.hpp"
#include "edgematch/model.hpp"
#include "edgematch/reductions.hpp"

namespace edgematch::oracles {

// Exhaustive count of solutions (distinguishable tile ids, orientations per
// the board's legal set) for any shaped board.  With a limit the search stops
// as soon as `limit` solutions were found.  `keep` bounds the returned list.
struct StripCount {
  std::uint64_t count = 0;
  std::vector<Solution> found;
};
StripCount enumerate_strip_solutions(const Instance& inst,
                                     std::optional<std::uint64_t> limit = std::nullopt,
                                     std::size_t keep = 0);

// Rooted shapeless count by Redelmeier-style connected-placement search over a
// bounding box of half-width `bound` (default (2k+1)^2 box, k = tile count).
// Unrooted instances are rejected.
std::uint64_t enumerate_shapeless(const Instance& inst, int bound = -1);

// First rooted shapeless solution, if any.
std::optional<Solution> solve_shapeless(const Instance& inst, int bound = -1);

enum class HamMode { Cycle, Path };

// Hamiltonian cycle/path counting with degree-based pruning.  Directed cycles
// are counted as distinct arc sets; undirected cycles as distinct edge sets.
// Paths are counted as traversals: with both endpoints fixed, s -> t orders;
// with free endpoints every direction counts separately.
std::uint64_t count_ham(const euler::MultiDigraph& g, HamMode mode,
                        std::optional<int> s = std::nullopt,
                        std::optional<int> t = std::nullopt);
std::uint64_t count_ham(const euler::MultiGraph& g, HamMode mode,
                        std::optional<int> s = std::nullopt,
                        std::optional<int> t = std::nullopt);

enum class EulerMode { Plain, Antidirected, ForbiddenTransition };

struct EulerCountOptions {
  EulerMode mode = EulerMode::Plain;
  const euler::PartitionSystem* partitions = nullptr; // ForbiddenTransition
  bool antidirected_groups = false; // combine Antidirected + partitions
  std::optional<euler::StepDir> start_dir;
  std::optional<euler::StepDir> end_dir;
  bool cycles_only = false;
};

// Exhaustive count of Eulerian trails as directed edge sequences (an
// undirected trail and its reverse count separately).
std::uint64_t count_euler_paths(const euler::MultiGraph& g, const EulerCountOptions& opt = {});
std::uint64_t count_euler_paths(const euler::MultiDigraph& g, const EulerCountOptions& opt = {});

enum class SatMode { Sat, OneInThree };

std::uint64_t count_sat(const reductions::Cnf& f, SatMode mode = SatMode::Sat);

struct IpcAnswer {
  bool coverable = false;
  std::uint64_t cover_count = 0; // number of covering selections
};
IpcAnswer enumerate_ipc(const reductions::Ipc& p);

} // namespace edgematch::oracles
