#include "impartial/graph.hpp"

#include <algorithm>
#include <numeric>

namespace impartial {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NoSource: return "NoSource";
    case ErrorKind::MultipleSources: return "MultipleSources";
    case ErrorKind::UnknownPosition: return "UnknownPosition";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::NotOptionPreserving: return "NotOptionPreserving";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotRefinement: return "NotRefinement";
    case ErrorKind::NotMembershipClosed: return "NotMembershipClosed";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rulegraph Rulegraph::from_labels(std::vector<std::string> labels,
                                 std::span<const LabelArrow> arrows) {
  std::unordered_map<std::string_view, PositionId> ids;
  ids.reserve(labels.size());
  for (PositionId i = 0; i < labels.size(); ++i) {
    if (!ids.emplace(labels[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' repeats",
                  {labels[i]});
    }
  }
  std::vector<std::vector<PositionId>> options(labels.size());
  for (const auto& [from, to] : arrows) {
    auto f = ids.find(from);
    auto t = ids.find(to);
    if (f == ids.end() || t == ids.end()) {
      const auto& missing = f == ids.end() ? from : to;
      throw Error(ErrorKind::UnknownEndpoint,
                  "arrow endpoint '" + missing + "' is not a position",
                  {missing});
    }
    options[f->second].push_back(t->second);
  }
  return from_options(std::move(labels), std::move(options));
}

Rulegraph Rulegraph::from_options(
    std::vector<std::string> labels,
    std::vector<std::vector<PositionId>> options) {
  if (options.size() != labels.size()) {
    throw Error(ErrorKind::UnknownEndpoint,
                "option table size does not match label count");
  }
  Rulegraph g;
  g.labels_ = std::move(labels);
  g.options_ = std::move(options);
  g.validate_and_index();
  return g;
}

void Rulegraph::validate_and_index() {
  const auto n = labels_.size();
  index_.clear();
  index_.reserve(n);
  for (PositionId i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel,
                  "label '" + labels_[i] + "' repeats", {labels_[i]});
    }
  }

  arrow_count_ = 0;
  parents_.assign(n, {});
  for (PositionId p = 0; p < n; ++p) {
    auto& opts = options_[p];
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    for (PositionId q : opts) {
      if (q >= n) {
        throw Error(ErrorKind::UnknownEndpoint,
                    "option id " + std::to_string(q) + " out of range");
      }
      if (q == p) {
        throw Error(ErrorKind::SelfLoop,
                    "position '" + labels_[p] + "' is its own option",
                    {labels_[p]});
      }
      parents_[q].push_back(p);
    }
    arrow_count_ += opts.size();
  }

  // Iterative DFS; emits a position once all of its options are emitted.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::pair<PositionId, std::size_t>> stack;
  bottom_up_.clear();
  bottom_up_.reserve(n);
  for (PositionId root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    stack.emplace_back(root, 0);
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [p, next] = stack.back();
      if (next < options_[p].size()) {
        PositionId q = options_[p][next++];
        if (colour[q] == kGrey) {
          std::vector<std::string> cycle;
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [q](const auto& e) { return e.first == q; });
          for (; it != stack.end(); ++it) cycle.push_back(labels_[it->first]);
          cycle.push_back(labels_[q]);
          std::string text;
          for (const auto& l : cycle) text += (text.empty() ? "" : " -> ") + l;
          throw Error(ErrorKind::CycleDetected, text, std::move(cycle));
        }
        if (colour[q] == kWhite) {
          colour[q] = kGrey;
          stack.emplace_back(q, 0);
        }
      } else {
        colour[p] = kBlack;
        bottom_up_.push_back(p);
        stack.pop_back();
      }
    }
  }
}

std::optional<PositionId> Rulegraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PositionId Rulegraph::at(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorKind::UnknownPosition,
              "no position labelled '" + std::string(label) + "'",
              {std::string(label)});
}

bool Rulegraph::has_arrow(PositionId from, PositionId to) const {
  const auto& opts = options_.at(from);
  return std::binary_search(opts.begin(), opts.end(), to);
}

std::vector<std::pair<PositionId, PositionId>> Rulegraph::arrows() const {
  std::vector<std::pair<PositionId, PositionId>> out;
  out.reserve(arrow_count_);
  for (PositionId p = 0; p < size(); ++p) {
    for (PositionId q : options_[p]) out.emplace_back(p, q);
  }
  return out;
}

Gamegraph::Gamegraph(Rulegraph graph) : graph_(std::move(graph)) {
  auto srcs = sources(graph_);
  if (srcs.empty()) {
    throw Error(ErrorKind::NoSource, "a gamegraph needs a starting position");
  }
  if (srcs.size() > 1) {
    std::vector<std::string> names;
    for (PositionId s : srcs) names.push_back(graph_.label(s));
    std::string text;
    for (const auto& l : names) text += (text.empty() ? "" : ", ") + l;
    throw Error(ErrorKind::MultipleSources, "sources " + text,
                std::move(names));
  }
  // Finite and acyclic with a unique source: everything is reachable.
  start_ = srcs.front();
}

std::vector<PositionId> sources(const Rulegraph& g) {
  std::vector<PositionId> out;
  for (PositionId p = 0; p < g.size(); ++p) {
    if (g.parents(p).empty()) out.push_back(p);
  }
  return out;
}

std::vector<PositionId> terminals(const Rulegraph& g) {
  std::vector<PositionId> out;
  for (PositionId p = 0; p < g.size(); ++p) {
    if (g.options(p).empty()) out.push_back(p);
  }
  return out;
}

std::vector<PositionId> subpositions(const Rulegraph& g, PositionId p) {
  if (p >= g.size()) {
    throw Error(ErrorKind::UnknownPosition,
                "position id " + std::to_string(p) + " out of range");
  }
  std::vector<bool> seen(g.size(), false);
  std::vector<PositionId> stack{p};
  seen[p] = true;
  while (!stack.empty()) {
    PositionId q = stack.back();
    stack.pop_back();
    for (PositionId r : g.options(q)) {
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  std::vector<PositionId> out;
  for (PositionId q = 0; q < g.size(); ++q) {
    if (seen[q]) out.push_back(q);
  }
  return out;
}

Gamegraph induced_gamegraph(const Rulegraph& g, PositionId p) {
  auto keep = subpositions(g, p);
  std::vector<PositionId> local(g.size(), PositionId(-1));
  for (PositionId i = 0; i < keep.size(); ++i) local[keep[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<PositionId>> options;
  labels.reserve(keep.size());
  options.reserve(keep.size());
  for (PositionId q : keep) {
    labels.push_back(g.label(q));
    auto& opts = options.emplace_back();
    for (PositionId r : g.options(q)) opts.push_back(local[r]);
  }
  return Gamegraph(Rulegraph::from_options(std::move(labels), std::move(options)));
}

std::vector<Gamegraph> gamma(const Rulegraph& g) {
  std::vector<Gamegraph> out;
  out.reserve(g.size());
  for (PositionId p = 0; p < g.size(); ++p) {
    out.push_back(induced_gamegraph(g, p));
  }
  return out;
}

Rulegraph relabel(const Rulegraph& g, std::span<const PositionId> perm) {
  const auto n = g.size();
  std::vector<std::string> labels(n);
  std::vector<std::vector<PositionId>> options(n);
  for (PositionId p = 0; p < n; ++p) {
    labels[perm[p]] = g.label(p);
    for (PositionId q : g.options(p)) options[perm[p]].push_back(perm[q]);
  }
  return Rulegraph::from_options(std::move(labels), std::move(options));
}

}  // namespace impartial
