#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "radial/animation.hpp"
#include "radial/coords.hpp"
#include "radial/graph.hpp"

namespace radial {

/// Malformed or inconsistent file contents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `{"nodes": [{"id": i, "label": s?}], "edges": [[a, b]]}`. Node ids must be
/// exactly 0..n-1 in any order. Graph validation errors (self-loop, duplicate,
/// disconnected) surface as GraphError subclasses; structural problems as
/// FormatError.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// `{"positions": {"<id>": [x, y]}}`. When node_count is non-zero the ids
/// must be exactly 0..node_count-1.
Drawing drawing_from_json(const nlohmann::json& j, std::size_t node_count = 0);
nlohmann::json drawing_to_json(const Drawing& d);
nlohmann::json positions_to_json(const Drawing& d);

/// `{"root": r, "children": {"<id>": [c, ...]}}`; ids without an entry are
/// leaves.
RootedTree tree_from_json(const nlohmann::json& j, std::size_t node_count);
nlohmann::json tree_to_json(const RootedTree& t);

/// First line of a timeline stream: root, frame times and edge roles.
nlohmann::json timeline_header(const Timeline& tl);
/// One frame record: `{"t": t, "positions": {...}}`.
nlohmann::json frame_record(const Frame& f);
/// Header line followed by one line per frame, each '\n' terminated.
std::string timeline_to_jsonl(const Timeline& tl);

/// Whole-file helpers; failures raise FormatError.
std::string read_text_file(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace radial
