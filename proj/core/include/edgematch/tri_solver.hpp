#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgematch/euler.hpp"
#include "edgematch/model.hpp"

namespace edgematch::tri_solver {

// The digraph a leg-contact instance reduces to: one vertex per leg color, one
// edge per tile (leg_left -> leg_right).  Signed instances additionally carry
// the four per-color groups (incoming/outgoing split by sign).
struct TriTranslation {
  euler::MultiDigraph g;
  euler::PartitionSystem parts;
  bool is_signed = false;
  std::vector<std::string> vertex_colors; // vertex id -> unsigned color name
};

TriTranslation to_digraph(const std::vector<RightTriTile>& tiles, CompatRule rule);

// Linear-time solver for leg-contact strips, signed and unsigned.  Hypotenuse
// labels are carried but never constrained.  Returns a verified solution or
// nothing; throws std::invalid_argument on board/rule/family mismatches.
std::optional<Solution> solve_leg_contact(const Instance& inst);

} // namespace edgematch::tri_solver
