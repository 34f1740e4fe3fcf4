#include "impartial/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace impartial {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where + " must be a string");
  return j.get_ref<const std::string&>();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Gamegraph GraphDocument::gamegraph() const {
  if (!start) throw Error(ErrorKind::NoSource, "document has no start position");
  return Gamegraph(graph);
}

GraphDocument parse_graph(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) schema_error("graph document must be a JSON object");
  if (!j.contains("positions") || !j["positions"].is_array()) {
    schema_error("\"positions\" must be an array of strings");
  }
  std::vector<std::string> labels;
  for (const auto& p : j["positions"]) labels.push_back(as_string(p, "position"));

  std::vector<LabelArrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) schema_error("\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2) {
        schema_error("each arrow must be a [from, to] pair");
      }
      arrows.emplace_back(as_string(a[0], "arrow endpoint"),
                          as_string(a[1], "arrow endpoint"));
    }
  }

  GraphDocument doc;
  doc.graph = Rulegraph::from_labels(std::move(labels), arrows);
  if (j.contains("start") && !j["start"].is_null()) {
    doc.start = doc.graph.at(as_string(j["start"], "\"start\""));
    Gamegraph check(doc.graph);
    if (check.start() != *doc.start) {
      throw Error(ErrorKind::LabelMismatch,
                  "start '" + doc.graph.label(*doc.start) + "' is not the source '" +
                      doc.graph.label(check.start()) + "'");
    }
  }
  if (j.contains("terminal_labels") && !j["terminal_labels"].is_null()) {
    const auto& tl = j["terminal_labels"];
    if (!tl.is_object()) schema_error("\"terminal_labels\" must be an object");
    TerminalLabeling labels_out;
    for (const auto& [label, value] : tl.items()) {
      const auto& v = as_string(value, "terminal label");
      if (v != "P" && v != "N") schema_error("terminal label must be \"P\" or \"N\"");
      labels_out[doc.graph.at(label)] = v == "P" ? Outcome::P : Outcome::N;
    }
    doc.terminal_labels = std::move(labels_out);
  }
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  const auto& g = doc.graph;
  nlohmann::ordered_json j;
  j["positions"] = g.labels();
  auto arrows = nlohmann::ordered_json::array();
  for (auto [p, q] : g.arrows()) arrows.push_back({g.label(p), g.label(q)});
  j["arrows"] = std::move(arrows);
  if (doc.start) j["start"] = g.label(*doc.start);
  if (doc.terminal_labels) {
    auto tl = nlohmann::ordered_json::object();
    for (auto [p, o] : *doc.terminal_labels) tl[g.label(p)] = std::string(1, to_char(o));
    j["terminal_labels"] = std::move(tl);
  }
  return j.dump(2);
}

std::string serialize_graph(const Rulegraph& g) {
  return serialize_graph(GraphDocument{g, std::nullopt, std::nullopt});
}

std::string serialize_graph(const Gamegraph& g) {
  return serialize_graph(GraphDocument{g.graph(), g.start(), std::nullopt});
}

PositionMap parse_map(std::string_view text, const Rulegraph& from, const Rulegraph& to) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object()) {
    schema_error("map document must be {\"map\": {src: dst, ...}}");
  }
  PositionMap alpha;
  alpha.image.assign(from.size(), 0);
  std::vector<bool> seen(from.size(), false);
  for (const auto& [src, dst] : j["map"].items()) {
    const PositionId p = from.at(src);
    alpha.image[p] = to.at(as_string(dst, "map target"));
    seen[p] = true;
  }
  for (PositionId p = 0; p < from.size(); ++p) {
    if (!seen[p]) {
      throw Error(ErrorKind::UnknownPosition,
                  "map does not assign '" + from.label(p) + "'", {from.label(p)});
    }
  }
  return alpha;
}

std::string serialize_map(const PositionMap& alpha, const Rulegraph& from,
                          const Rulegraph& to) {
  json m = json::object();
  for (PositionId p = 0; p < alpha.size(); ++p) m[from.label(p)] = to.label(alpha(p));
  return json{{"map", m}}.dump(2);
}

Partition parse_partition(std::string_view text, const Rulegraph& g) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    schema_error("partition document must be {\"blocks\": [[...], ...]}");
  }
  std::vector<std::vector<PositionId>> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_array()) schema_error("each block must be an array of labels");
    auto& block = blocks.emplace_back();
    for (const auto& label : b) block.push_back(g.at(as_string(label, "block member")));
  }
  return Partition::from_blocks(g.size(), blocks);
}

std::string serialize_partition(const Partition& pi, const Rulegraph& g) {
  json blocks = json::array();
  for (const auto& block : pi.blocks()) {
    if (block.size() < 2) continue;
    json b = json::array();
    for (PositionId p : block) b.push_back(g.label(p));
    blocks.push_back(std::move(b));
  }
  return json{{"blocks", blocks}}.dump(2);
}

std::string export_dot(const Rulegraph& g, const std::optional<Annotation>& annotation) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (PositionId p = 0; p < g.size(); ++p) {
    std::string text = g.label(p);
    if (annotation) text += " [" + annotation->name + "=" + annotation->values.at(p) + "]";
    out << "  n" << p << " [label=\"" << dot_escape(text) << "\"];\n";
  }
  for (auto [p, q] : g.arrows()) out << "  n" << p << " -> n" << q << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace impartial
