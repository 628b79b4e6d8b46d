#include "radial/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace radial {

using nlohmann::json;

namespace {

NodeId node_id(const json& j, std::size_t node_count, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer id");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= node_count)
    throw FormatError(std::string(what) + " " + std::to_string(v) + " is not a node id");
  return static_cast<NodeId>(v);
}

NodeId key_id(const std::string& key, std::size_t node_count) {
  NodeId v = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc() || ptr != end || key.empty())
    throw FormatError("'" + key + "' is not a node id");
  if (v >= node_count) throw FormatError("node id " + key + " out of range");
  return v;
}

const json& member(const json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing '") + name + "'");
  return *it;
}

}  // namespace

Graph graph_from_json(const json& j) {
  const json& nodes = member(j, "nodes");
  const json& edges = member(j, "edges");
  if (!nodes.is_array() || !edges.is_array()) throw FormatError("'nodes' and 'edges' must be arrays");
  const std::size_t n = nodes.size();
  if (n == 0) throw FormatError("graph has no nodes");

  std::vector<std::optional<std::string>> labels(n);
  std::vector<bool> seen(n, false);
  for (const json& node : nodes) {
    const NodeId id = node_id(member(node, "id"), n, "node id");
    if (seen[id]) throw FormatError("node id " + std::to_string(id) + " listed twice");
    seen[id] = true;
    if (auto it = node.find("label"); it != node.end() && !it->is_null()) {
      if (!it->is_string()) throw FormatError("node label must be a string");
      labels[id] = it->get<std::string>();
    }
  }

  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair of ids");
    list.emplace_back(node_id(e[0], n, "edge endpoint"), node_id(e[1], n, "edge endpoint"));
  }
  return Graph::create(n, list, std::move(labels));
}

json graph_to_json(const Graph& g) {
  json nodes = json::array();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    json node = {{"id", v}};
    if (g.label(v)) node["label"] = *g.label(v);
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Drawing drawing_from_json(const json& j, std::size_t node_count) {
  const json& positions = member(j, "positions");
  if (!positions.is_object()) throw FormatError("'positions' must be an object");
  const std::size_t n = node_count != 0 ? node_count : positions.size();
  if (positions.size() != n)
    throw FormatError("drawing has " + std::to_string(positions.size()) + " positions, expected " +
                      std::to_string(n));
  Drawing d;
  d.positions.resize(n);
  for (const auto& [key, value] : positions.items()) {
    const NodeId v = key_id(key, n);
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
      throw FormatError("position of node " + key + " must be [x, y]");
    const Point p{value[0].get<double>(), value[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw FormatError("position of node " + key + " is not finite");
    d[v] = p;
  }
  return d;
}

json positions_to_json(const Drawing& d) {
  json out = json::object();
  for (NodeId v = 0; v < d.size(); ++v) out[std::to_string(v)] = {d[v].x, d[v].y};
  return out;
}

json drawing_to_json(const Drawing& d) { return {{"positions", positions_to_json(d)}}; }

RootedTree tree_from_json(const json& j, std::size_t node_count) {
  const NodeId root = node_id(member(j, "root"), node_count, "tree root");
  const json& children = member(j, "children");
  if (!children.is_object()) throw FormatError("'children' must be an object");
  std::vector<std::vector<NodeId>> lists(node_count);
  for (const auto& [key, value] : children.items()) {
    const NodeId v = key_id(key, node_count);
    if (!value.is_array()) throw FormatError("children of node " + key + " must be an array");
    for (const json& c : value) lists[v].push_back(node_id(c, node_count, "tree child"));
  }
  try {
    return RootedTree::from_children(root, std::move(lists));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

json tree_to_json(const RootedTree& t) {
  json children = json::object();
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (!t.children(v).empty()) children[std::to_string(v)] = t.children(v);
  }
  return {{"root", t.root()}, {"children", std::move(children)}};
}

json timeline_header(const Timeline& tl) {
  json times = json::array();
  for (const Frame& f : tl.frames) times.push_back(f.t);
  json edges = json::array();
  for (const EdgeVisual& ev : tl.edge_visuals) {
    edges.push_back({{"edge", {ev.edge.a, ev.edge.b}},
                     {"role", std::string(to_string(ev.role))},
                     {"opacity", ev.opacity}});
  }
  json header = {{"type", "header"}, {"frames", tl.frames.size()}, {"times", std::move(times)},
                 {"edges", std::move(edges)}};
  header["root"] = tl.root ? json(*tl.root) : json(nullptr);
  if (tl.tree) header["tree"] = tree_to_json(*tl.tree);
  return header;
}

json frame_record(const Frame& f) { return {{"t", f.t}, {"positions", positions_to_json(f.drawing)}}; }

std::string timeline_to_jsonl(const Timeline& tl) {
  std::string out = timeline_header(tl).dump();
  out += '\n';
  for (const Frame& f : tl.frames) {
    out += frame_record(f).dump();
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("failed writing " + path.string());
}

}  // namespace radial
