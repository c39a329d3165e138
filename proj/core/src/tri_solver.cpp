#include "edgematch/tri_solver.hpp"

#include <map>
#include <stdexcept>

namespace edgematch::tri_solver {

using euler::MultiDigraph;
using euler::PartitionSystem;
using euler::StepDir;

TriTranslation to_digraph(const std::vector<RightTriTile>& tiles, CompatRule rule) {
  const bool is_signed = rule == CompatRule::SignedOpp;
  if (!is_signed && rule != CompatRule::UnsignedEq)
    throw std::invalid_argument("leg-contact instances use unsigned or signed matching");

  TriTranslation tr;
  tr.is_signed = is_signed;
  std::map<std::string, int> vid;
  auto vertex_of = [&](const Label& l) {
    if (is_signed && l.kind != LabelKind::Signed)
      throw std::invalid_argument("signed instance with non-signed leg label");
    if (!is_signed && l.kind != LabelKind::Unsigned)
      throw std::invalid_argument("unsigned instance with non-unsigned leg label");
    auto it = vid.find(l.color);
    if (it != vid.end()) return it->second;
    const int v = tr.g.add_vertex();
    vid.emplace(l.color, v);
    tr.vertex_colors.push_back(l.color);
    return v;
  };

  // edge id i corresponds to tiles[i]
  for (const auto& t : tiles) {
    const int u = vertex_of(t.leg_left);
    const int v = vertex_of(t.leg_right);
    tr.g.add_edge(u, v);
  }

  tr.parts = PartitionSystem::empty(tr.g.num_vertices);
  if (is_signed) {
    // four groups per color: incoming split by the leg_right
    // sign, outgoing split by the leg_left sign
    std::vector<std::array<std::vector<int>, 4>> groups(
        static_cast<size_t>(tr.g.num_vertices));
    for (size_t i = 0; i < tiles.size(); ++i) {
      const auto& t = tiles[i];
      const int head = vid.at(t.leg_right.color);
      const int tail = vid.at(t.leg_left.color);
      groups[static_cast<size_t>(head)][t.leg_right.sign > 0 ? 0 : 1].push_back(
          euler::in_incidence(static_cast<int>(i)));
      groups[static_cast<size_t>(tail)][t.leg_left.sign > 0 ? 2 : 3].push_back(
          euler::out_incidence(static_cast<int>(i)));
    }
    for (int v = 0; v < tr.g.num_vertices; ++v)
      for (int k = 0; k < 4; ++k)
        if (!groups[static_cast<size_t>(v)][static_cast<size_t>(k)].empty())
          tr.parts.groups[static_cast<size_t>(v)].push_back(
              groups[static_cast<size_t>(v)][static_cast<size_t>(k)]);
  }
  return tr;
}

std::optional<Solution> solve_leg_contact(const Instance& inst) {
  if (inst.board.kind != BoardSpec::Kind::LegStrip)
    throw std::invalid_argument("solve_leg_contact needs a LegStrip board");
  if (inst.shape() != TileShape::RightTri)
    throw std::invalid_argument("solve_leg_contact needs right-triangle tiles");
  const int n = inst.board.cols;
  if (static_cast<int>(inst.rtriangles.size()) != n)
    throw std::invalid_argument("tile count does not match the strip length");
  if (n == 0) return Solution{};

  TriTranslation tr = to_digraph(inst.rtriangles, inst.rule);

  // hyp-down = forward; the end slants fix the first and last directions
  const StepDir start = inst.board.leg_cell_hyp_down(0) ? StepDir::Forward : StepDir::Backward;
  const StepDir end =
      inst.board.leg_cell_hyp_down(n - 1) ? StepDir::Forward : StepDir::Backward;

  std::optional<euler::Trail> trail;
  if (tr.is_signed)
    trail = euler::ft_antidirected_eulerian(tr.g, tr.parts, start, end);
  else
    trail = euler::antidirected_eulerian(tr.g, start, end);
  if (!trail) return std::nullopt;

  Solution sol;
  for (const auto& step : *trail) {
    const int orient = step.dir == StepDir::Forward ? HypDown : HypUp;
    sol.cells.push_back({inst.rtriangles[static_cast<size_t>(step.edge_id)].id, orient});
  }
  if (!verify(inst, sol).ok()) return std::nullopt;
  return sol;
}

} // namespace edgematch::tri_solver
