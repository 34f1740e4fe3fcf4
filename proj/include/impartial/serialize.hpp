#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/morphism.hpp"
#include "impartial/partition.hpp"
#include "impartial/valuation.hpp"

namespace impartial {

// {"positions": [...], "arrows": [[from,to], ...], "start": label?,
//  "terminal_labels": {label: "P"|"N"}?}
struct GraphDocument {
  Rulegraph graph;
  std::optional<PositionId> start;
  std::optional<TerminalLabeling> terminal_labels;

  // Throws NoSource when the document has no start.
  Gamegraph gamegraph() const;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

// Throws ParseError for malformed JSON or schema violations; graph
// validation errors propagate unchanged. A present start must be the unique
// source (MultipleSources / LabelMismatch otherwise).
GraphDocument parse_graph(std::string_view text);

// Positions in id order, arrows sorted, two-space indentation.
std::string serialize_graph(const GraphDocument& doc);
std::string serialize_graph(const Rulegraph& g);
std::string serialize_graph(const Gamegraph& g);

// {"map": {"srcLabel": "dstLabel", ...}}; every domain position must appear.
PositionMap parse_map(std::string_view text, const Rulegraph& from, const Rulegraph& to);
std::string serialize_map(const PositionMap& alpha, const Rulegraph& from,
                          const Rulegraph& to);

// {"blocks": [["a","b"], ...]}; unlisted positions are singletons.
Partition parse_partition(std::string_view text, const Rulegraph& g);
std::string serialize_partition(const Partition& pi, const Rulegraph& g);

struct Annotation {
  std::string name;                 // e.g. "nim"
  std::vector<std::string> values;  // one per position
};

// Nodes are named n0, n1, ... in id order and labelled "label [name=value]".
std::string export_dot(const Rulegraph& g,
                       const std::optional<Annotation>& annotation = std::nullopt);

}  // namespace impartial
