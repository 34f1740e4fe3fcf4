#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "impartial/error.hpp"

namespace impartial {

using PositionId = std::uint32_t;
using LabelArrow = std::pair<std::string, std::string>;

// A finite acyclic digraph. Positions are dense ids 0..size()-1 in label
// order, option sets are kept sorted ascending and duplicate free. Instances
// are immutable once built; every constructor validates.
class Rulegraph {
 public:
  Rulegraph() = default;

  // Arrow endpoints are labels. Duplicate arrows are collapsed.
  static Rulegraph from_labels(std::vector<std::string> labels,
                               std::span<const LabelArrow> arrows);

  // Arrow endpoints are ids into `labels`. Option lists may be unsorted and
  // may contain duplicates.
  static Rulegraph from_options(std::vector<std::string> labels,
                                std::vector<std::vector<PositionId>> options);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t arrow_count() const noexcept { return arrow_count_; }

  std::span<const PositionId> options(PositionId p) const {
    return options_.at(p);
  }
  std::span<const PositionId> parents(PositionId p) const {
    return parents_.at(p);
  }
  const std::string& label(PositionId p) const { return labels_.at(p); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<PositionId> find(std::string_view label) const;
  PositionId at(std::string_view label) const;  // throws UnknownPosition

  bool has_arrow(PositionId from, PositionId to) const;

  // Every position appears after all of its options.
  const std::vector<PositionId>& bottom_up() const noexcept {
    return bottom_up_;
  }

  // All arrows as (from, to), sorted.
  std::vector<std::pair<PositionId, PositionId>> arrows() const;

  friend bool operator==(const Rulegraph& a, const Rulegraph& b) {
    return a.labels_ == b.labels_ && a.options_ == b.options_;
  }

 private:
  void validate_and_index();

  std::vector<std::string> labels_;
  std::vector<std::vector<PositionId>> options_;
  std::vector<std::vector<PositionId>> parents_;
  std::vector<PositionId> bottom_up_;
  std::unordered_map<std::string, PositionId> index_;
  std::size_t arrow_count_ = 0;
};

// A rulegraph whose unique source is the starting position.
class Gamegraph {
 public:
  // Throws NoSource / MultipleSources.
  explicit Gamegraph(Rulegraph graph);

  const Rulegraph& graph() const noexcept { return graph_; }
  PositionId start() const noexcept { return start_; }
  std::size_t size() const noexcept { return graph_.size(); }

  friend bool operator==(const Gamegraph&, const Gamegraph&) = default;

 private:
  Rulegraph graph_;
  PositionId start_ = 0;
};

inline Gamegraph as_gamegraph(Rulegraph graph) {
  return Gamegraph(std::move(graph));
}

std::vector<PositionId> sources(const Rulegraph& g);
std::vector<PositionId> terminals(const Rulegraph& g);

// Positions reachable from p by a walk of length >= 0, ascending.
std::vector<PositionId> subpositions(const Rulegraph& g, PositionId p);

// Subgraph induced by subpositions(g, p), started at p. Positions keep their
// relative order and labels.
Gamegraph induced_gamegraph(const Rulegraph& g, PositionId p);

std::vector<Gamegraph> gamma(const Rulegraph& g);

// Copy of g with positions permuted: position p of g becomes perm[p].
Rulegraph relabel(const Rulegraph& g, std::span<const PositionId> perm);

}  // namespace impartial
