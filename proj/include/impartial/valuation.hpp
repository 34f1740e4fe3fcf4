#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "impartial/graph.hpp"

namespace impartial {

enum class Outcome : std::uint8_t { P, N };

inline char to_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

// A reducer on a finite SET of values. evaluate() always hands it the option
// values sorted and deduplicated, so it cannot observe order or multiplicity.
template <class T>
struct Aggregator {
  std::string name;
  std::function<T(std::span<const T>)> reduce;
};

template <class T>
struct ValuationResult {
  std::vector<T> values;
  std::optional<T> graph_value;  // value at the start, for gamegraphs

  const T& operator[](PositionId p) const { return values.at(p); }
};

// One bottom-up sweep: values[p] = mu(values over Opt(p)).
template <class T>
ValuationResult<T> evaluate(const Rulegraph& g, const Aggregator<T>& mu) {
  ValuationResult<T> out;
  out.values.resize(g.size());
  std::vector<T> inputs;
  for (PositionId p : g.bottom_up()) {
    inputs.clear();
    for (PositionId q : g.options(p)) inputs.push_back(out.values[q]);
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
    out.values[p] = mu.reduce(std::span<const T>(inputs));
  }
  return out;
}

template <class T>
ValuationResult<T> evaluate(const Gamegraph& g, const Aggregator<T>& mu) {
  auto out = evaluate(g.graph(), mu);
  out.graph_value = out.values[g.start()];
  return out;
}

Aggregator<std::uint64_t> mex_aggregator();
Aggregator<std::uint64_t> birthday_aggregator();
Aggregator<std::uint64_t> min_distance_aggregator();
Aggregator<Outcome> normal_outcome_aggregator();
Aggregator<Outcome> misere_outcome_aggregator();

std::vector<std::uint64_t> nim_values(const Rulegraph& g);
std::vector<Outcome> outcome_normal(const Rulegraph& g);
std::vector<Outcome> outcome_misere(const Rulegraph& g);
std::vector<std::uint64_t> formal_birthdays(const Rulegraph& g);
std::vector<std::uint64_t> min_distance_to_terminal(const Rulegraph& g);

// Largest birthday over all positions; 0 for an empty graph.
std::uint64_t formal_birthday(const Rulegraph& g);

using TerminalLabeling = std::map<PositionId, Outcome>;

// Terminals take their assigned outcome, every other position the normal-play
// rule over its options. Throws LabelMismatch unless `labels` covers exactly
// the terminals of g.
std::vector<Outcome> outcome_with_terminal_labels(const Gamegraph& g,
                                                  const TerminalLabeling& labels);

}  // namespace impartial
