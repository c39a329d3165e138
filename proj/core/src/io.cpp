#include "edgematch/io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace edgematch::io {

using Json = nlohmann::ordered_json;

namespace {

Json label_to_json(const Label& l) {
  Json j;
  switch (l.kind) {
    case LabelKind::Unsigned: j["color"] = l.color; break;
    case LabelKind::Signed:
      j["color"] = l.color;
      j["sign"] = l.sign > 0 ? "+" : "-";
      break;
    case LabelKind::Num: j["num"] = l.value; break;
  }
  return j;
}

Label label_from_json(const Json& j) {
  if (j.contains("num")) return Label::num(j.at("num").get<std::int64_t>());
  if (!j.contains("color")) throw std::invalid_argument("label needs a color or num");
  const std::string c = j.at("color").get<std::string>();
  if (j.contains("sign")) {
    const std::string s = j.at("sign").get<std::string>();
    if (s != "+" && s != "-") throw std::invalid_argument("label sign must be + or -");
    return Label::sgn(c, s == "+" ? +1 : -1);
  }
  return Label::uns(c);
}

std::string rule_to_string(CompatRule r) { return rule_name(r); }

CompatRule rule_from_string(const std::string& s) {
  if (s == "unsigned-eq") return CompatRule::UnsignedEq;
  if (s == "signed-opp") return CompatRule::SignedOpp;
  if (s == "strict-less") return CompatRule::StrictLess;
  if (s == "less-or-eq") return CompatRule::LessOrEq;
  throw std::invalid_argument("unknown rule " + s);
}

Json board_to_json(const BoardSpec& b) {
  Json j;
  switch (b.kind) {
    case BoardSpec::Kind::Rect:
      j["type"] = "rect";
      j["m"] = b.rows;
      j["n"] = b.cols;
      break;
    case BoardSpec::Kind::Strip:
      j["type"] = "strip";
      j["n"] = b.cols;
      if (b.left_boundary) j["left"] = label_to_json(*b.left_boundary);
      if (b.right_boundary) j["right"] = label_to_json(*b.right_boundary);
      break;
    case BoardSpec::Kind::EqTriStrip:
      j["type"] = "eqtri-strip";
      j["n"] = b.cols;
      if (b.left_boundary) j["left"] = label_to_json(*b.left_boundary);
      j["first_points"] = b.first_points_up ? "up" : "down";
      break;
    case BoardSpec::Kind::LegStrip:
      j["type"] = "leg-strip";
      j["n"] = b.cols;
      j["left_acute"] = b.left_acute_bottom ? "bottom" : "top";
      break;
    case BoardSpec::Kind::HypStrip:
      j["type"] = "hyp-strip";
      j["n"] = b.cols;
      break;
    case BoardSpec::Kind::Shapeless:
      j["type"] = "shapeless";
      j["rooted"] = b.rooted;
      if (b.rooted) {
        j["root_tile"] = b.root_tile;
        j["root_orient"] = b.root_orient;
      }
      break;
  }
  return j;
}

BoardSpec board_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "rect") return BoardSpec::rect(j.at("m").get<int>(), j.at("n").get<int>());
  if (type == "strip") {
    std::optional<Label> lb, rb;
    if (j.contains("left")) lb = label_from_json(j.at("left"));
    if (j.contains("right")) rb = label_from_json(j.at("right"));
    return BoardSpec::strip(j.at("n").get<int>(), lb, rb);
  }
  if (type == "eqtri-strip") {
    std::optional<Label> lb;
    if (j.contains("left")) lb = label_from_json(j.at("left"));
    const bool up = !j.contains("first_points") ||
                    j.at("first_points").get<std::string>() == "up";
    return BoardSpec::eqtri_strip(j.at("n").get<int>(), lb, up);
  }
  if (type == "leg-strip") {
    const bool bottom = !j.contains("left_acute") ||
                        j.at("left_acute").get<std::string>() == "bottom";
    return BoardSpec::leg_strip(j.at("n").get<int>(), bottom);
  }
  if (type == "hyp-strip") return BoardSpec::hyp_strip(j.at("n").get<int>());
  if (type == "shapeless") {
    if (j.contains("rooted") && j.at("rooted").get<bool>())
      return BoardSpec::shapeless_rooted(j.at("root_tile").get<int>(),
                                         j.at("root_orient").get<int>());
    return BoardSpec::shapeless();
  }
  throw std::invalid_argument("unknown board type " + type);
}

Json require_kind(const std::string& text, const std::string& kind) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
    throw std::invalid_argument("expected a \"" + kind + "\" document");
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw std::invalid_argument("unsupported version");
  return j;
}

Json partitions_to_json(const euler::PartitionSystem& p) {
  Json j = Json::object();
  for (size_t v = 0; v < p.groups.size(); ++v) {
    if (p.groups[v].empty()) continue;
    Json groups = Json::array();
    for (const auto& grp : p.groups[v]) groups.push_back(grp);
    j[std::to_string(v)] = groups;
  }
  return j;
}

euler::PartitionSystem partitions_from_json(const Json& j, int num_vertices) {
  auto p = euler::PartitionSystem::empty(num_vertices);
  for (const auto& [key, groups] : j.items()) {
    const int v = std::stoi(key);
    if (v < 0 || v >= num_vertices)
      throw std::invalid_argument("partition mentions unknown vertex " + key);
    for (const auto& grp : groups)
      p.groups[static_cast<size_t>(v)].push_back(grp.get<std::vector<int>>());
  }
  return p;
}

} // namespace

euler::MultiGraph GraphFile::to_undirected() const {
  euler::MultiGraph g;
  g.num_vertices = num_vertices;
  g.edges = edges;
  return g;
}

euler::MultiDigraph GraphFile::to_directed() const {
  euler::MultiDigraph g;
  g.num_vertices = num_vertices;
  g.edges = edges;
  return g;
}

GraphFile GraphFile::of(const euler::MultiGraph& g) {
  return {false, g.num_vertices, g.edges, euler::PartitionSystem{}};
}

GraphFile GraphFile::of(const euler::MultiDigraph& g) {
  return {true, g.num_vertices, g.edges, euler::PartitionSystem{}};
}

std::string serialize_instance(const Instance& inst) {
  Json j;
  j["kind"] = "instance";
  j["version"] = 1;
  j["board"] = board_to_json(inst.board);
  j["rule"] = rule_to_string(inst.rule);
  if (inst.allow_reflection) j["allow_reflection"] = true;
  if (!inst.squares.empty() || inst.shape() == TileShape::Square) {
    Json arr = Json::array();
    for (const auto& t : inst.squares) {
      Json tt;
      tt["id"] = t.id;
      tt["n"] = label_to_json(t.north);
      tt["e"] = label_to_json(t.east);
      tt["s"] = label_to_json(t.south);
      tt["w"] = label_to_json(t.west);
      arr.push_back(tt);
    }
    j["squares"] = arr;
  }
  if (!inst.triangles.empty()) {
    Json arr = Json::array();
    for (const auto& t : inst.triangles) {
      Json tt;
      tt["id"] = t.id;
      tt["edges"] = Json::array({label_to_json(t.edges[0]), label_to_json(t.edges[1]),
                                 label_to_json(t.edges[2])});
      arr.push_back(tt);
    }
    j["triangles"] = arr;
  }
  if (!inst.rtriangles.empty()) {
    Json arr = Json::array();
    for (const auto& t : inst.rtriangles) {
      Json tt;
      tt["id"] = t.id;
      tt["legl"] = label_to_json(t.leg_left);
      tt["legr"] = label_to_json(t.leg_right);
      tt["hyp"] = label_to_json(t.hyp);
      arr.push_back(tt);
    }
    j["rtriangles"] = arr;
  }
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  const Json j = require_kind(text, "instance");
  Instance inst;
  inst.board = board_from_json(j.at("board"));
  inst.rule = rule_from_string(j.at("rule").get<std::string>());
  if (j.contains("allow_reflection")) inst.allow_reflection = j.at("allow_reflection").get<bool>();
  if (j.contains("squares"))
    for (const auto& tt : j.at("squares")) {
      SquareTile t;
      t.id = tt.at("id").get<int>();
      t.north = label_from_json(tt.at("n"));
      t.east = label_from_json(tt.at("e"));
      t.south = label_from_json(tt.at("s"));
      t.west = label_from_json(tt.at("w"));
      inst.squares.push_back(t);
    }
  if (j.contains("triangles"))
    for (const auto& tt : j.at("triangles")) {
      EqTriTile t;
      t.id = tt.at("id").get<int>();
      const auto& e = tt.at("edges");
      if (e.size() != 3) throw std::invalid_argument("triangle needs 3 edges");
      for (int k = 0; k < 3; ++k)
        t.edges[static_cast<size_t>(k)] = label_from_json(e.at(static_cast<size_t>(k)));
      inst.triangles.push_back(t);
    }
  if (j.contains("rtriangles"))
    for (const auto& tt : j.at("rtriangles")) {
      RightTriTile t;
      t.id = tt.at("id").get<int>();
      t.leg_left = label_from_json(tt.at("legl"));
      t.leg_right = label_from_json(tt.at("legr"));
      t.hyp = label_from_json(tt.at("hyp"));
      inst.rtriangles.push_back(t);
    }
  return inst;
}

std::string serialize_solution(const Solution& sol, bool shapeless) {
  Json j;
  j["kind"] = "solution";
  j["version"] = 1;
  if (shapeless) {
    Json arr = Json::array();
    for (const auto& p : sol.grid) arr.push_back(Json::array({p.x, p.y, p.tile_id, p.orient}));
    j["grid"] = arr;
  } else {
    Json arr = Json::array();
    for (const auto& p : sol.cells) arr.push_back(Json::array({p.tile_id, p.orient}));
    j["placements"] = arr;
  }
  return j.dump(2) + "\n";
}

Solution parse_solution(const std::string& text) {
  const Json j = require_kind(text, "solution");
  Solution sol;
  if (j.contains("placements"))
    for (const auto& p : j.at("placements")) {
      if (p.size() != 2) throw std::invalid_argument("placement needs [tile, orient]");
      sol.cells.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    }
  if (j.contains("grid"))
    for (const auto& p : j.at("grid")) {
      if (p.size() != 4) throw std::invalid_argument("grid placement needs [x, y, tile, orient]");
      sol.grid.push_back(
          {p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>(), p.at(3).get<int>()});
    }
  return sol;
}

std::string serialize_cnf(const reductions::Cnf& f) {
  Json j;
  j["kind"] = "cnf";
  j["version"] = 1;
  j["num_vars"] = f.num_vars;
  j["clauses"] = f.clauses;
  return j.dump(2) + "\n";
}

reductions::Cnf parse_cnf(const std::string& text) {
  const Json j = require_kind(text, "cnf");
  reductions::Cnf f;
  f.num_vars = j.at("num_vars").get<int>();
  for (const auto& cl : j.at("clauses")) {
    std::vector<int> c;
    for (const auto& lit : cl) {
      const int l = lit.get<int>();
      if (l == 0 || std::abs(l) > f.num_vars)
        throw std::invalid_argument("literal out of range");
      c.push_back(l);
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

std::string serialize_ipc(const reductions::Ipc& p) {
  Json j;
  j["kind"] = "ipc";
  j["version"] = 1;
  j["universe"] = p.universe;
  Json arr = Json::array();
  for (const auto& pr : p.pairs)
    arr.push_back(Json::array({Json::array({pr.a, pr.b}), Json::array({pr.c, pr.d})}));
  j["pairs"] = arr;
  return j.dump(2) + "\n";
}

reductions::Ipc parse_ipc(const std::string& text) {
  const Json j = require_kind(text, "ipc");
  reductions::Ipc p;
  p.universe = j.at("universe").get<int>();
  for (const auto& pr : j.at("pairs")) {
    if (pr.size() != 2 || pr.at(0).size() != 2 || pr.at(1).size() != 2)
      throw std::invalid_argument("interval pair needs [[a,b],[c,d]]");
    reductions::Ipc::IntervalPair ip;
    ip.a = pr.at(0).at(0).get<int>();
    ip.b = pr.at(0).at(1).get<int>();
    ip.c = pr.at(1).at(0).get<int>();
    ip.d = pr.at(1).at(1).get<int>();
    if (ip.a > ip.b || ip.c > ip.d) throw std::invalid_argument("intervals must be ordered");
    p.pairs.push_back(ip);
  }
  return p;
}

std::string serialize_graph(const GraphFile& g) {
  Json j;
  j["kind"] = "graph";
  j["version"] = 1;
  j["directed"] = g.directed;
  Json verts = Json::array();
  for (int v = 0; v < g.num_vertices; ++v) verts.push_back(v);
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.id, e.a, e.b}));
  j["edges"] = edges;
  if (g.partitions.has_groups()) j["partitions"] = partitions_to_json(g.partitions);
  return j.dump(2) + "\n";
}

GraphFile parse_graph(const std::string& text) {
  const Json j = require_kind(text, "graph");
  GraphFile g;
  g.directed = j.at("directed").get<bool>();
  g.num_vertices = static_cast<int>(j.at("vertices").size());
  for (size_t i = 0; i < j.at("vertices").size(); ++i)
    if (j.at("vertices").at(i).get<int>() != static_cast<int>(i))
      throw std::invalid_argument("vertices must be 0..n-1 in order");
  int next = 0;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 3) throw std::invalid_argument("edge needs [id, tail, head]");
    if (e.at(0).get<int>() != next)
      throw std::invalid_argument("edge ids must be 0..m-1 in order");
    const int a = e.at(1).get<int>(), b = e.at(2).get<int>();
    if (a < 0 || a >= g.num_vertices || b < 0 || b >= g.num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    g.edges.push_back({next++, a, b});
  }
  g.partitions = euler::PartitionSystem::empty(g.num_vertices);
  if (j.contains("partitions"))
    g.partitions = partitions_from_json(j.at("partitions"), g.num_vertices);
  return g;
}

std::string serialize_geo(const games::GeoInstance& g) {
  Json j;
  j["kind"] = "geo";
  j["version"] = 1;
  j["directed"] = g.directed;
  Json verts = Json::array();
  for (int v = 0; v < g.graph.num_vertices; ++v) verts.push_back(v);
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : g.graph.edges) edges.push_back(Json::array({e.id, e.a, e.b}));
  j["edges"] = edges;
  j["start"] = g.start;
  j["rule"] = g.rule == games::GeoRule::Vertex ? "vertex" : "edge";
  auto colors = [](const std::vector<games::Player>& v) {
    Json arr = Json::array();
    for (auto p : v) arr.push_back(p == games::Player::P1 ? "P1" : "P2");
    return arr;
  };
  if (g.vertex_partizan()) j["vertex_colors"] = colors(g.vertex_colors);
  if (g.edge_partizan()) j["edge_colors"] = colors(g.edge_colors);
  return j.dump(2) + "\n";
}

games::GeoInstance parse_geo(const std::string& text) {
  const Json j = require_kind(text, "geo");
  games::GeoInstance g;
  g.directed = j.at("directed").get<bool>();
  g.graph.num_vertices = static_cast<int>(j.at("vertices").size());
  int next = 0;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 3 || e.at(0).get<int>() != next)
      throw std::invalid_argument("edge ids must be 0..m-1 in order");
    g.graph.add_edge(e.at(1).get<int>(), e.at(2).get<int>());
    ++next;
  }
  g.start = j.at("start").get<int>();
  if (g.start < 0 || g.start >= g.graph.num_vertices)
    throw std::invalid_argument("start vertex out of range");
  const std::string rule = j.at("rule").get<std::string>();
  if (rule != "vertex" && rule != "edge") throw std::invalid_argument("unknown geo rule");
  g.rule = rule == "vertex" ? games::GeoRule::Vertex : games::GeoRule::Edge;
  auto colors = [](const Json& arr) {
    std::vector<games::Player> out;
    for (const auto& p : arr) {
      const std::string s = p.get<std::string>();
      if (s != "P1" && s != "P2") throw std::invalid_argument("player must be P1 or P2");
      out.push_back(s == "P1" ? games::Player::P1 : games::Player::P2);
    }
    return out;
  };
  if (j.contains("vertex_colors")) g.vertex_colors = colors(j.at("vertex_colors"));
  if (j.contains("edge_colors")) g.edge_colors = colors(j.at("edge_colors"));
  return g;
}

std::string serialize_game(const games::GameInstance& g) {
  Json j;
  j["kind"] = "game";
  j["version"] = 1;
  j["rule"] = rule_to_string(g.rule);
  j["left_boundary"] = label_to_json(g.left_boundary);
  Json arr = Json::array();
  for (const auto& t : g.tiles) {
    Json tt;
    tt["id"] = t.id;
    tt["n"] = label_to_json(t.north);
    tt["e"] = label_to_json(t.east);
    tt["s"] = label_to_json(t.south);
    tt["w"] = label_to_json(t.west);
    arr.push_back(tt);
  }
  j["tiles"] = arr;
  if (g.shared_pool) {
    j["pools"] = "shared";
  } else {
    Json pools;
    pools["p1"] = g.pool1;
    pools["p2"] = g.pool2;
    j["pools"] = pools;
  }
  return j.dump(2) + "\n";
}

games::GameInstance parse_game(const std::string& text) {
  const Json j = require_kind(text, "game");
  games::GameInstance g;
  g.rule = rule_from_string(j.at("rule").get<std::string>());
  if (g.rule != CompatRule::UnsignedEq && g.rule != CompatRule::SignedOpp)
    throw std::invalid_argument("game rule must be unsigned-eq or signed-opp");
  g.left_boundary = label_from_json(j.at("left_boundary"));
  for (const auto& tt : j.at("tiles")) {
    SquareTile t;
    t.id = tt.at("id").get<int>();
    t.north = label_from_json(tt.at("n"));
    t.east = label_from_json(tt.at("e"));
    t.south = label_from_json(tt.at("s"));
    t.west = label_from_json(tt.at("w"));
    g.tiles.push_back(t);
  }
  const auto& pools = j.at("pools");
  if (pools.is_string() && pools.get<std::string>() == "shared") {
    g.shared_pool = true;
  } else if (pools.is_object()) {
    g.shared_pool = false;
    g.pool1 = pools.at("p1").get<std::vector<int>>();
    g.pool2 = pools.at("p2").get<std::vector<int>>();
  } else {
    throw std::invalid_argument("pools must be \"shared\" or {p1, p2}");
  }
  return g;
}

} // namespace edgematch::io
