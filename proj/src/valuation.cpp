#include "impartial/valuation.hpp"

namespace impartial {

namespace {

bool contains(std::span<const Outcome> values, Outcome o) {
  return std::find(values.begin(), values.end(), o) != values.end();
}

}  // namespace

Aggregator<std::uint64_t> mex_aggregator() {
  return {"nim", [](std::span<const std::uint64_t> values) {
            std::uint64_t m = 0;
            for (auto v : values) {  // sorted, distinct
              if (v != m) break;
              ++m;
            }
            return m;
          }};
}

Aggregator<std::uint64_t> birthday_aggregator() {
  return {"fbd", [](std::span<const std::uint64_t> values) {
            return values.empty() ? std::uint64_t{0} : values.back() + 1;
          }};
}

Aggregator<std::uint64_t> min_distance_aggregator() {
  return {"mindist", [](std::span<const std::uint64_t> values) {
            return values.empty() ? std::uint64_t{0} : values.front() + 1;
          }};
}

Aggregator<Outcome> normal_outcome_aggregator() {
  return {"outcome+", [](std::span<const Outcome> values) {
            return contains(values, Outcome::P) ? Outcome::N : Outcome::P;
          }};
}

Aggregator<Outcome> misere_outcome_aggregator() {
  return {"outcome-", [](std::span<const Outcome> values) {
            return values.empty() || contains(values, Outcome::P) ? Outcome::N
                                                                  : Outcome::P;
          }};
}

std::vector<std::uint64_t> nim_values(const Rulegraph& g) {
  return evaluate(g, mex_aggregator()).values;
}

std::vector<Outcome> outcome_normal(const Rulegraph& g) {
  return evaluate(g, normal_outcome_aggregator()).values;
}

std::vector<Outcome> outcome_misere(const Rulegraph& g) {
  return evaluate(g, misere_outcome_aggregator()).values;
}

std::vector<std::uint64_t> formal_birthdays(const Rulegraph& g) {
  return evaluate(g, birthday_aggregator()).values;
}

std::vector<std::uint64_t> min_distance_to_terminal(const Rulegraph& g) {
  return evaluate(g, min_distance_aggregator()).values;
}

std::uint64_t formal_birthday(const Rulegraph& g) {
  auto fbd = formal_birthdays(g);
  return fbd.empty() ? 0 : *std::max_element(fbd.begin(), fbd.end());
}

std::vector<Outcome> outcome_with_terminal_labels(
    const Gamegraph& game, const TerminalLabeling& labels) {
  const auto& g = game.graph();
  auto terms = terminals(g);
  for (PositionId t : terms) {
    if (!labels.contains(t)) {
      throw Error(ErrorKind::LabelMismatch,
                  "terminal '" + g.label(t) + "' has no outcome",
                  {g.label(t)});
    }
  }
  if (labels.size() != terms.size()) {
    for (const auto& [p, o] : labels) {
      if (p >= g.size() || !g.options(p).empty()) {
        auto name = p < g.size() ? g.label(p) : std::to_string(p);
        throw Error(ErrorKind::LabelMismatch,
                    "'" + name + "' is labelled but is not a terminal", {name});
      }
    }
  }

  std::vector<Outcome> out(g.size());
  for (PositionId p : g.bottom_up()) {
    if (g.options(p).empty()) {
      out[p] = labels.at(p);
      continue;
    }
    bool has_p = false;
    for (PositionId q : g.options(p)) has_p = has_p || out[q] == Outcome::P;
    out[p] = has_p ? Outcome::N : Outcome::P;
  }
  return out;
}

}  // namespace impartial
