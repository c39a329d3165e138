#include "edgematch/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace edgematch {

Label Label::uns(std::string c) {
  Label l;
  l.kind = LabelKind::Unsigned;
  l.color = std::move(c);
  return l;
}

Label Label::sgn(std::string c, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Label l;
  l.kind = LabelKind::Signed;
  l.color = std::move(c);
  l.sign = sign;
  return l;
}

Label Label::num(std::int64_t v) {
  Label l;
  l.kind = LabelKind::Num;
  l.value = v;
  return l;
}

Label Label::negated() const {
  if (kind != LabelKind::Signed) throw std::invalid_argument("negated() needs a signed label");
  return sgn(color, -sign);
}

std::string Label::str() const {
  switch (kind) {
    case LabelKind::Unsigned: return color;
    case LabelKind::Signed: return (sign > 0 ? "+" : "-") + color;
    case LabelKind::Num: return std::to_string(value);
  }
  return {};
}

bool Label::operator<(const Label& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  switch (kind) {
    case LabelKind::Unsigned: return color < o.color;
    case LabelKind::Signed: return std::tie(color, sign) < std::tie(o.color, o.sign);
    case LabelKind::Num: return value < o.value;
  }
  return false;
}

LabelKind rule_family(CompatRule rule) {
  switch (rule) {
    case CompatRule::UnsignedEq: return LabelKind::Unsigned;
    case CompatRule::SignedOpp: return LabelKind::Signed;
    case CompatRule::StrictLess:
    case CompatRule::LessOrEq: return LabelKind::Num;
  }
  return LabelKind::Unsigned;
}

std::string rule_name(CompatRule rule) {
  switch (rule) {
    case CompatRule::UnsignedEq: return "unsigned-eq";
    case CompatRule::SignedOpp: return "signed-opp";
    case CompatRule::StrictLess: return "strict-less";
    case CompatRule::LessOrEq: return "less-or-eq";
  }
  return {};
}

bool compatible(const Label& a, const Label& b, CompatRule rule, Axis) {
  const LabelKind fam = rule_family(rule);
  if (a.kind != fam || b.kind != fam)
    throw std::invalid_argument("label family does not match rule " + rule_name(rule));
  switch (rule) {
    case CompatRule::UnsignedEq: return a.color == b.color;
    case CompatRule::SignedOpp: return a.color == b.color && a.sign == -b.sign;
    case CompatRule::StrictLess: return a.value < b.value;
    case CompatRule::LessOrEq: return a.value <= b.value;
  }
  return false;
}

// ---------------------------------------------------------------- tiles

const Label& SquareTile::side(int s) const {
  switch (s) {
    case North: return north;
    case East: return east;
    case South: return south;
    default: return west;
  }
}

std::array<Label, 4> square_exposed(const SquareTile& t, int rot) {
  if (rot < 0 || rot > 3) throw std::invalid_argument("square rotation must be 0..3");
  std::array<Label, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = t.side(((i - rot) % 4 + 4) % 4);
  return out;
}

EqTriOrient decode_eqtri_orient(int code) {
  if (code < 0 || code > 5) throw std::invalid_argument("triangle orientation must be 0..5");
  return {code % 3, code >= 3};
}

int encode_eqtri_orient(EqTriOrient o) { return o.rot + (o.flipped ? 3 : 0); }

std::array<Label, 3> eqtri_exposed(const EqTriTile& t, EqTriOrient o) {
  if (o.rot < 0 || o.rot > 2) throw std::invalid_argument("triangle rotation must be 0..2");
  std::array<Label, 3> out;
  for (int k = 0; k < 3; ++k) {
    const int idx = o.flipped ? ((o.rot - k) % 3 + 3) % 3 : (o.rot + k) % 3;
    out[k] = t.edges[idx];
  }
  return out;
}

Label eqtri_left(const EqTriTile& t, EqTriOrient o, bool) {
  return eqtri_exposed(t, o)[0];
}

Label eqtri_right(const EqTriTile& t, EqTriOrient o, bool up) {
  return eqtri_exposed(t, o)[up ? 2 : 1];
}

Label eqtri_horizontal(const EqTriTile& t, EqTriOrient o, bool up) {
  return eqtri_exposed(t, o)[up ? 1 : 2];
}

Label legstrip_left(const RightTriTile& t, int orient) {
  return orient == HypDown ? t.leg_left : t.leg_right;
}

Label legstrip_right(const RightTriTile& t, int orient) {
  return orient == HypDown ? t.leg_right : t.leg_left;
}

std::optional<Label> hypslot_west(const RightTriTile& t, int slot) {
  switch (slot) {
    case HypUL: return t.leg_left;
    case HypLL: return t.leg_right;
    default: return std::nullopt;
  }
}

std::optional<Label> hypslot_east(const RightTriTile& t, int slot) {
  switch (slot) {
    case HypLR: return t.leg_left;
    case HypUR: return t.leg_right;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------- boards

BoardSpec BoardSpec::rect(int m, int n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("rectangle dimensions must be positive");
  BoardSpec b;
  b.kind = Kind::Rect;
  b.rows = m;
  b.cols = n;
  return b;
}

BoardSpec BoardSpec::strip(int n, std::optional<Label> lb, std::optional<Label> rb) {
  BoardSpec b;
  b.kind = Kind::Strip;
  b.rows = 1;
  b.cols = n;
  b.left_boundary = std::move(lb);
  b.right_boundary = std::move(rb);
  return b;
}

BoardSpec BoardSpec::eqtri_strip(int n, std::optional<Label> lb, bool first_up) {
  BoardSpec b;
  b.kind = Kind::EqTriStrip;
  b.cols = n;
  b.left_boundary = std::move(lb);
  b.first_points_up = first_up;
  return b;
}

BoardSpec BoardSpec::leg_strip(int n, bool left_acute_bottom) {
  BoardSpec b;
  b.kind = Kind::LegStrip;
  b.cols = n;
  b.left_acute_bottom = left_acute_bottom;
  return b;
}

BoardSpec BoardSpec::hyp_strip(int n) {
  BoardSpec b;
  b.kind = Kind::HypStrip;
  b.cols = n;
  return b;
}

BoardSpec BoardSpec::shapeless() {
  BoardSpec b;
  b.kind = Kind::Shapeless;
  return b;
}

BoardSpec BoardSpec::shapeless_rooted(int root_tile, int root_orient) {
  BoardSpec b;
  b.kind = Kind::Shapeless;
  b.rooted = true;
  b.root_tile = root_tile;
  b.root_orient = root_orient;
  return b;
}

int BoardSpec::capacity() const {
  switch (kind) {
    case Kind::Rect: return rows * cols;
    case Kind::HypStrip: return 2 * cols;
    case Kind::Shapeless: return -1;
    default: return cols;
  }
}

int BoardSpec::tile_capacity() const {
  switch (kind) {
    case Kind::Rect: return rows * cols;
    case Kind::HypStrip: return 2 * cols;
    case Kind::Shapeless: return -1;
    default: return cols;
  }
}

bool BoardSpec::leg_cell_hyp_down(int i) const {
  return left_acute_bottom == (i % 2 == 0);
}

bool BoardSpec::right_acute_bottom() const {
  // The last cell's slant: acute at the bottom iff it holds a hyp-down tile.
  return cols == 0 ? left_acute_bottom : leg_cell_hyp_down(cols - 1);
}

bool BoardSpec::eqtri_cell_up(int i) const {
  return first_points_up == (i % 2 == 0);
}

// ------------------------------------------------------------- instances

TileShape Instance::shape() const {
  if (!triangles.empty()) return TileShape::EqTri;
  if (!rtriangles.empty()) return TileShape::RightTri;
  if (!squares.empty()) return TileShape::Square;
  switch (board.kind) {
    case BoardSpec::Kind::EqTriStrip: return TileShape::EqTri;
    case BoardSpec::Kind::LegStrip:
    case BoardSpec::Kind::HypStrip: return TileShape::RightTri;
    default: return TileShape::Square;
  }
}

int Instance::tile_count() const {
  return static_cast<int>(squares.size() + triangles.size() + rtriangles.size());
}

const SquareTile* Instance::find_square(int id) const {
  for (const auto& t : squares)
    if (t.id == id) return &t;
  return nullptr;
}

const EqTriTile* Instance::find_triangle(int id) const {
  for (const auto& t : triangles)
    if (t.id == id) return &t;
  return nullptr;
}

const RightTriTile* Instance::find_rtriangle(int id) const {
  for (const auto& t : rtriangles)
    if (t.id == id) return &t;
  return nullptr;
}

// ---------------------------------------------------------------- verify

Verdict Verdict::structural(std::string d) {
  Verdict v;
  v.status = Status::Structural;
  v.detail = std::move(d);
  return v;
}

Verdict Verdict::incompatible(std::string d) {
  Verdict v;
  v.status = Status::Incompatible;
  v.detail = std::move(d);
  return v;
}

namespace {

template <typename Tile>
Verdict check_tile_usage(const std::vector<Tile>& tiles,
                         const std::vector<int>& used_ids) {
  std::multiset<int> want;
  for (const auto& t : tiles) want.insert(t.id);
  std::multiset<int> got(used_ids.begin(), used_ids.end());
  if (want != got) {
    for (int id : got)
      if (want.count(id) == 0)
        return Verdict::structural("unknown tile id " + std::to_string(id));
    for (int id : got)
      if (got.count(id) > 1 && want.count(id) < got.count(id))
        return Verdict::structural("tile id " + std::to_string(id) + " used more than once");
    return Verdict::structural("tile usage does not cover the instance's tiles");
  }
  std::set<int> uniq(used_ids.begin(), used_ids.end());
  if (uniq.size() != used_ids.size())
    return Verdict::structural("a tile id appears more than once");
  return Verdict::pass();
}

std::string contact_msg(int a, int b, const Label& la, const Label& lb) {
  return "contact " + std::to_string(a) + "-" + std::to_string(b) + ": " + la.str() +
         " vs " + lb.str();
}

Verdict verify_rect(const Instance& inst, const Solution& sol) {
  const int m = inst.board.rows, n = inst.board.cols;
  std::vector<std::array<Label, 4>> exp(sol.cells.size());
  for (size_t i = 0; i < sol.cells.size(); ++i) {
    const auto& p = sol.cells[i];
    const SquareTile* t = inst.find_square(p.tile_id);
    if (!t) return Verdict::structural("unknown tile id " + std::to_string(p.tile_id));
    if (p.orient < 0 || p.orient > 3)
      return Verdict::structural("illegal square orientation at cell " + std::to_string(i));
    exp[i] = square_exposed(*t, p.orient);
  }
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      const int i = r * n + c;
      if (c + 1 < n) {
        const int j = i + 1;
        if (!compatible(exp[i][East], exp[j][West], inst.rule, Axis::Horizontal))
          return Verdict::incompatible(contact_msg(i, j, exp[i][East], exp[j][West]));
      }
      if (r + 1 < m) {
        const int j = i + n;
        if (!compatible(exp[i][South], exp[j][North], inst.rule, Axis::Vertical))
          return Verdict::incompatible(contact_msg(i, j, exp[i][South], exp[j][North]));
      }
    }
  if (inst.board.kind == BoardSpec::Kind::Strip) {
    if (inst.board.left_boundary &&
        !compatible(*inst.board.left_boundary, exp[0][West], inst.rule))
      return Verdict::incompatible("left boundary vs " + exp[0][West].str());
    if (inst.board.right_boundary &&
        !compatible(exp.back()[East], *inst.board.right_boundary, inst.rule))
      return Verdict::incompatible("right boundary vs " + exp.back()[East].str());
  }
  return Verdict::pass();
}

Verdict verify_eqtri(const Instance& inst, const Solution& sol) {
  const int n = inst.board.cols;
  std::vector<Label> lefts(n), rights(n);
  for (int i = 0; i < n; ++i) {
    const auto& p = sol.cells[i];
    const EqTriTile* t = inst.find_triangle(p.tile_id);
    if (!t) return Verdict::structural("unknown tile id " + std::to_string(p.tile_id));
    if (p.orient < 0 || p.orient > 5)
      return Verdict::structural("illegal triangle orientation at cell " + std::to_string(i));
    EqTriOrient o = decode_eqtri_orient(p.orient);
    if (o.flipped && !inst.allow_reflection)
      return Verdict::structural("reflection disabled but cell " + std::to_string(i) +
                                 " is flipped");
    const bool up = inst.board.eqtri_cell_up(i);
    lefts[i] = eqtri_left(*t, o, up);
    rights[i] = eqtri_right(*t, o, up);
  }
  if (inst.board.left_boundary && n > 0 &&
      !compatible(*inst.board.left_boundary, lefts[0], inst.rule))
    return Verdict::incompatible("left boundary vs " + lefts[0].str());
  for (int i = 0; i + 1 < n; ++i)
    if (!compatible(rights[i], lefts[i + 1], inst.rule))
      return Verdict::incompatible(contact_msg(i, i + 1, rights[i], lefts[i + 1]));
  return Verdict::pass();
}

Verdict verify_legstrip(const Instance& inst, const Solution& sol) {
  const int n = inst.board.cols;
  std::vector<Label> lefts(n), rights(n);
  for (int i = 0; i < n; ++i) {
    const auto& p = sol.cells[i];
    const RightTriTile* t = inst.find_rtriangle(p.tile_id);
    if (!t) return Verdict::structural("unknown tile id " + std::to_string(p.tile_id));
    if (p.orient != HypDown && p.orient != HypUp)
      return Verdict::structural("illegal leg-strip orientation at cell " + std::to_string(i));
    const bool want_down = inst.board.leg_cell_hyp_down(i);
    if ((p.orient == HypDown) != want_down)
      return Verdict::structural("cell " + std::to_string(i) + " must be hyp-" +
                                 (want_down ? "down" : "up"));
    lefts[i] = legstrip_left(*t, p.orient);
    rights[i] = legstrip_right(*t, p.orient);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!compatible(rights[i], lefts[i + 1], inst.rule))
      return Verdict::incompatible(contact_msg(i, i + 1, rights[i], lefts[i + 1]));
  return Verdict::pass();
}

Verdict verify_hypstrip(const Instance& inst, const Solution& sol) {
  const int n = inst.board.cols;
  std::vector<Label> west(n), east(n);
  for (int c = 0; c < n; ++c) {
    const auto& a = sol.cells[2 * c];
    const auto& b = sol.cells[2 * c + 1];
    const RightTriTile* ta = inst.find_rtriangle(a.tile_id);
    const RightTriTile* tb = inst.find_rtriangle(b.tile_id);
    if (!ta || !tb)
      return Verdict::structural("unknown tile id in cell " + std::to_string(c));
    const bool main_diag = (a.orient == HypUL && b.orient == HypLR);
    const bool anti_diag = (a.orient == HypLL && b.orient == HypUR);
    if (!main_diag && !anti_diag)
      return Verdict::structural("cell " + std::to_string(c) +
                                 " slots must pair as UL/LR or LL/UR");
    if (!compatible(ta->hyp, tb->hyp, inst.rule))
      return Verdict::incompatible("cell " + std::to_string(c) + " hypotenuse contact: " +
                                   ta->hyp.str() + " vs " + tb->hyp.str());
    west[c] = main_diag ? *hypslot_west(*ta, HypUL) : *hypslot_west(*ta, HypLL);
    east[c] = main_diag ? *hypslot_east(*tb, HypLR) : *hypslot_east(*tb, HypUR);
  }
  for (int c = 0; c + 1 < n; ++c)
    if (!compatible(east[c], west[c + 1], inst.rule))
      return Verdict::incompatible(contact_msg(c, c + 1, east[c], west[c + 1]));
  return Verdict::pass();
}

Verdict verify_shapeless(const Instance& inst, const Solution& sol) {
  std::map<std::pair<int, int>, size_t> at;
  for (size_t i = 0; i < sol.grid.size(); ++i) {
    const auto& p = sol.grid[i];
    if (!at.emplace(std::make_pair(p.x, p.y), i).second)
      return Verdict::structural("two tiles share cell (" + std::to_string(p.x) + "," +
                                 std::to_string(p.y) + ")");
    if (p.orient < 0 || p.orient > 3)
      return Verdict::structural("illegal square orientation");
  }
  std::vector<int> ids;
  for (const auto& p : sol.grid) ids.push_back(p.tile_id);
  if (auto v = check_tile_usage(inst.squares, ids); !v.ok()) return v;

  if (inst.board.rooted) {
    bool found = false;
    for (const auto& p : sol.grid)
      if (p.tile_id == inst.board.root_tile) {
        found = true;
        if (p.x != 0 || p.y != 0 || p.orient != inst.board.root_orient)
          return Verdict::structural("rooted tile is not at the origin in the designated orientation");
      }
    if (!found && !sol.grid.empty())
      return Verdict::structural("rooted tile missing from solution");
  }

  if (sol.grid.empty()) return Verdict::pass();

  // edge-connectivity
  std::vector<size_t> stack{0};
  std::set<size_t> seen{0};
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    const auto& p = sol.grid[i];
    const std::pair<int, int> nbrs[4] = {
        {p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
    for (auto& nb : nbrs) {
      auto it = at.find(nb);
      if (it != at.end() && seen.insert(it->second).second) stack.push_back(it->second);
    }
  }
  if (seen.size() != sol.grid.size())
    return Verdict::structural("occupied cells are not edge-connected");

  // contacts
  std::map<std::pair<int, int>, std::array<Label, 4>> exp;
  for (const auto& p : sol.grid) {
    const SquareTile* t = inst.find_square(p.tile_id);
    exp[{p.x, p.y}] = square_exposed(*t, p.orient);
  }
  for (const auto& [cell, e] : exp) {
    auto right = exp.find({cell.first + 1, cell.second});
    if (right != exp.end() &&
        !compatible(e[East], right->second[West], inst.rule, Axis::Horizontal))
      return Verdict::incompatible("contact east of (" + std::to_string(cell.first) + "," +
                                   std::to_string(cell.second) + "): " + e[East].str() +
                                   " vs " + right->second[West].str());
    auto below = exp.find({cell.first, cell.second - 1});
    if (below != exp.end() &&
        !compatible(e[South], below->second[North], inst.rule, Axis::Vertical))
      return Verdict::incompatible("contact south of (" + std::to_string(cell.first) + "," +
                                   std::to_string(cell.second) + "): " + e[South].str() +
                                   " vs " + below->second[North].str());
  }
  return Verdict::pass();
}

} // namespace

Verdict verify(const Instance& inst, const Solution& sol) {
  if (inst.board.kind == BoardSpec::Kind::Shapeless) return verify_shapeless(inst, sol);

  const int cap = inst.board.capacity();
  if (inst.tile_count() != inst.board.tile_capacity())
    return Verdict::structural("tile count does not match board capacity");
  if (static_cast<int>(sol.cells.size()) != cap)
    return Verdict::structural("solution has " + std::to_string(sol.cells.size()) +
                               " placements, board needs " + std::to_string(cap));
  std::vector<int> ids;
  for (const auto& p : sol.cells) ids.push_back(p.tile_id);

  switch (inst.board.kind) {
    case BoardSpec::Kind::Rect:
    case BoardSpec::Kind::Strip:
      if (auto v = check_tile_usage(inst.squares, ids); !v.ok()) return v;
      return verify_rect(inst, sol);
    case BoardSpec::Kind::EqTriStrip:
      if (auto v = check_tile_usage(inst.triangles, ids); !v.ok()) return v;
      return verify_eqtri(inst, sol);
    case BoardSpec::Kind::LegStrip:
      if (auto v = check_tile_usage(inst.rtriangles, ids); !v.ok()) return v;
      return verify_legstrip(inst, sol);
    case BoardSpec::Kind::HypStrip:
      if (auto v = check_tile_usage(inst.rtriangles, ids); !v.ok()) return v;
      return verify_hypstrip(inst, sol);
    default: return Verdict::structural("unsupported board");
  }
}

} // namespace edgematch
