#include "edgematch/order_solvers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edgematch::order_solvers {

namespace {

void require_num_labels(const std::vector<SquareTile>& tiles) {
  for (const auto& t : tiles)
    for (int s = 0; s < 4; ++s)
      if (t.side(s).kind != LabelKind::Num)
        throw std::invalid_argument("inequality solvers need Num labels");
}

struct Placed {
  int id = 0;
  int rot = 0;
  std::array<Label, 4> exp;
};

// First rotation with left >= right and top >= bottom; one always exists.
Placed canonical(const SquareTile& t) {
  for (int r = 0; r < 4; ++r) {
    auto e = square_exposed(t, r);
    if (e[West].value >= e[East].value && e[North].value >= e[South].value)
      return {t.id, r, e};
  }
  throw std::logic_error("no canonical rotation");
}

} // namespace

Solution solve_leq_rect(int m, int n, const std::vector<SquareTile>& tiles) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("board dimensions must be positive");
  if (static_cast<int>(tiles.size()) != m * n)
    throw std::invalid_argument("need exactly m*n tiles");
  require_num_labels(tiles);

  std::vector<Placed> ps;
  ps.reserve(tiles.size());
  for (const auto& t : tiles) ps.push_back(canonical(t));

  std::sort(ps.begin(), ps.end(), [](const Placed& a, const Placed& b) {
    if (a.exp[South].value != b.exp[South].value)
      return a.exp[South].value < b.exp[South].value;
    return a.id < b.id;
  });
  for (int r = 0; r < m; ++r)
    std::sort(ps.begin() + r * n, ps.begin() + (r + 1) * n,
              [](const Placed& a, const Placed& b) {
                if (a.exp[East].value != b.exp[East].value)
                  return a.exp[East].value < b.exp[East].value;
                return a.id < b.id;
              });

  Solution sol;
  for (const auto& p : ps) sol.cells.push_back({p.id, p.rot});
  return sol;
}

Solution solve_lt_distinct_rect(int m, int n, const std::vector<SquareTile>& tiles) {
  require_num_labels(tiles);
  std::set<std::int64_t> seen;
  for (const auto& t : tiles)
    for (int s = 0; s < 4; ++s)
      if (!seen.insert(t.side(s).value).second)
        throw std::invalid_argument("labels are not pairwise distinct");
  return solve_leq_rect(m, n, tiles);
}

Solution solve_lt_strip(const std::vector<SquareTile>& tiles) {
  require_num_labels(tiles);

  struct P {
    int id;
    int rot;
    std::int64_t left, right;
  };
  std::vector<P> ps;
  for (const auto& t : tiles) {
    // pick the rotation with left > right maximizing the gap, ties by rotation
    int best_rot = -1;
    std::int64_t best_gap = 0;
    for (int r = 0; r < 4; ++r) {
      auto e = square_exposed(t, r);
      const std::int64_t gap = e[West].value - e[East].value;
      if (gap > best_gap) {
        best_gap = gap;
        best_rot = r;
      }
    }
    if (best_rot < 0)
      throw std::invalid_argument("tile " + std::to_string(t.id) +
                                  " has no unequal parallel pair");
    auto e = square_exposed(t, best_rot);
    ps.push_back({t.id, best_rot, e[West].value, e[East].value});
  }
  std::sort(ps.begin(), ps.end(), [](const P& a, const P& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.id < b.id;
  });
  Solution sol;
  for (const auto& p : ps) sol.cells.push_back({p.id, p.rot});
  return sol;
}

} // namespace edgematch::order_solvers
