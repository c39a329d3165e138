#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edgematch {

enum class LabelKind { Unsigned, Signed, Num };

// An edge label: a plain color, a signed color, or an integer.
// A single instance uses one label family throughout.
struct Label {
  LabelKind kind = LabelKind::Unsigned;
  std::string color;      // Unsigned / Signed
  int sign = 0;           // +1 or -1 when kind == Signed
  std::int64_t value = 0; // when kind == Num

  static Label uns(std::string c);
  static Label sgn(std::string c, int sign);
  static Label num(std::int64_t v);

  Label negated() const; // Signed only

  std::string str() const;

  bool operator==(const Label& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case LabelKind::Unsigned: return color == o.color;
      case LabelKind::Signed: return color == o.color && sign == o.sign;
      case LabelKind::Num: return value == o.value;
    }
    return false;
  }
  bool operator!=(const Label& o) const { return !(*this == o); }
  bool operator<(const Label& o) const;
};

enum class CompatRule { UnsignedEq, SignedOpp, StrictLess, LessOrEq };
enum class Axis { Horizontal, Vertical };

LabelKind rule_family(CompatRule rule);
std::string rule_name(CompatRule rule);

// True iff the contact (a = left/top side, b = right/bottom side) is legal.
// Throws std::invalid_argument when the labels do not belong to the rule's family.
bool compatible(const Label& a, const Label& b, CompatRule rule,
                Axis axis = Axis::Horizontal);

// ---------------------------------------------------------------- tiles

// Sides of a square tile, also used as indices into exposure arrays.
enum Side : int { North = 0, East = 1, South = 2, West = 3 };

struct SquareTile {
  int id = 0;
  Label north, east, south, west;

  const Label& side(int s) const;
};

// Square orientation: quarter-turns clockwise, 0..3. Squares never reflect.
std::array<Label, 4> square_exposed(const SquareTile& t, int rot);

struct EqTriTile {
  int id = 0;
  std::array<Label, 3> edges; // counterclockwise cyclic order
};

// Equilateral-triangle orientation: rot in 0..2 plus an optional flip,
// encoded as rot + (flipped ? 3 : 0). Whether a cell points up or down is
// dictated by its position in the strip, not by the orientation.
struct EqTriOrient {
  int rot = 0;
  bool flipped = false;
};
EqTriOrient decode_eqtri_orient(int code);
int encode_eqtri_orient(EqTriOrient o);

// Exposure of an equilateral triangle in a strip cell.
// Up cells expose (left, bottom, right); down cells expose (left, right, top).
// Index 0 is always the left slant, the last matching slant is:
//   up: index 2 (right),  down: index 1 (right).
std::array<Label, 3> eqtri_exposed(const EqTriTile& t, EqTriOrient o);
Label eqtri_left(const EqTriTile& t, EqTriOrient o, bool up);
Label eqtri_right(const EqTriTile& t, EqTriOrient o, bool up);
Label eqtri_horizontal(const EqTriTile& t, EqTriOrient o, bool up);

struct RightTriTile {
  int id = 0;
  Label leg_left, leg_right, hyp; // read hypotenuse-down, legs left to right
};

// Leg-contact placements: hypotenuse down (0) or rotated 180 degrees (1).
enum LegOrient : int { HypDown = 0, HypUp = 1 };
Label legstrip_left(const RightTriTile& t, int orient);
Label legstrip_right(const RightTriTile& t, int orient);

// Hypotenuse-contact placements: the tile occupies one of four half-square
// slots.  Slots 0/1 share the main diagonal, 2/3 the anti diagonal.
enum HypSlot : int {
  HypUL = 0, // main diagonal, upper-left: leg_left on W, leg_right on N
  HypLR = 1, // main diagonal, lower-right: leg_left on E, leg_right on S
  HypLL = 2, // anti diagonal, lower-left: leg_left on S, leg_right on W
  HypUR = 3, // anti diagonal, upper-right: leg_left on N, leg_right on E
};
// Label exposed by a hyp-contact placement on the cell's west or east edge.
std::optional<Label> hypslot_west(const RightTriTile& t, int slot);
std::optional<Label> hypslot_east(const RightTriTile& t, int slot);

// ---------------------------------------------------------------- boards

struct BoardSpec {
  enum class Kind { Rect, Strip, EqTriStrip, LegStrip, HypStrip, Shapeless };

  Kind kind = Kind::Strip;
  int rows = 1; // Rect
  int cols = 0; // Rect width / strip length n

  std::optional<Label> left_boundary;  // Strip, EqTriStrip
  std::optional<Label> right_boundary; // Strip
  bool first_points_up = true;         // EqTriStrip
  bool left_acute_bottom = true;       // LegStrip

  bool rooted = false; // Shapeless
  int root_tile = -1;  // Shapeless, rooted: designated tile id
  int root_orient = 0; // Shapeless, rooted: designated orientation

  static BoardSpec rect(int m, int n);
  static BoardSpec strip(int n, std::optional<Label> lb = std::nullopt,
                         std::optional<Label> rb = std::nullopt);
  static BoardSpec eqtri_strip(int n, std::optional<Label> lb = std::nullopt,
                               bool first_up = true);
  static BoardSpec leg_strip(int n, bool left_acute_bottom = true);
  static BoardSpec hyp_strip(int n);
  static BoardSpec shapeless();
  static BoardSpec shapeless_rooted(int root_tile, int root_orient);

  // Number of placements a solution must contain (2n for HypStrip).
  int capacity() const;
  // Number of tiles the instance must contain.
  int tile_capacity() const;

  // LegStrip: true iff cell i holds a hypotenuse-down tile.
  bool leg_cell_hyp_down(int i) const;
  // Derived acute position of the right end (equals the last cell's slant).
  bool right_acute_bottom() const;
  // EqTriStrip: true iff cell i points up.
  bool eqtri_cell_up(int i) const;
};

// ------------------------------------------------------------- instances

enum class TileShape { Square, EqTri, RightTri };

struct Instance {
  BoardSpec board;
  CompatRule rule = CompatRule::UnsignedEq;
  bool allow_reflection = false; // triangles only

  std::vector<SquareTile> squares;
  std::vector<EqTriTile> triangles;
  std::vector<RightTriTile> rtriangles;

  TileShape shape() const;
  int tile_count() const;

  const SquareTile* find_square(int id) const;
  const EqTriTile* find_triangle(int id) const;
  const RightTriTile* find_rtriangle(int id) const;
};

// ------------------------------------------------------------- solutions

struct Placement {
  int tile_id = 0;
  int orient = 0;
  bool operator==(const Placement&) const = default;
};

struct CellPlacement {
  int x = 0;
  int y = 0;
  int tile_id = 0;
  int orient = 0;
  bool operator==(const CellPlacement&) const = default;
};

// Shaped boards use `cells` (reading order); Shapeless uses `grid`.
struct Solution {
  std::vector<Placement> cells;
  std::vector<CellPlacement> grid;
  bool operator==(const Solution&) const = default;
};

// ---------------------------------------------------------------- verify

struct Verdict {
  enum class Status { Ok, Structural, Incompatible };
  Status status = Status::Ok;
  std::string detail;

  bool ok() const { return status == Status::Ok; }
  static Verdict pass() { return {}; }
  static Verdict structural(std::string d);
  static Verdict incompatible(std::string d);
};

// Checks a solution against an instance: tile usage, orientation legality,
// every internal contact, boundary labels, and (shapeless) connectivity and
// the rooted placement.
Verdict verify(const Instance& inst, const Solution& sol);

} // namespace edgematch
