#pragma once

#include <vector>

#include "edgematch/model.hpp"

namespace edgematch::order_solvers {

// <= rectangles are always solvable: rotate every tile so left >= right and
// top >= bottom, sort rows by the bottom label, then each row by the right
// label.  Throws std::invalid_argument on a tile-count mismatch.
Solution solve_leq_rect(int m, int n, const std::vector<SquareTile>& tiles);

// < rectangles with pairwise-distinct labels: solve_leq_rect, distinctness
// upgrades every contact to strict.  Throws when labels are not distinct.
Solution solve_lt_distinct_rect(int m, int n, const std::vector<SquareTile>& tiles);

// 1xn < strips where every tile has an unequal parallel pair: rotate each tile
// so left > right, sort ascending by the left label.  Throws when some tile
// has both parallel pairs equal.
Solution solve_lt_strip(const std::vector<SquareTile>& tiles);

} // namespace edgematch::order_solvers
