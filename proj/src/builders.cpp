#include "impartial/builders.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "impartial/hfset.hpp"

namespace impartial {

namespace {

using Heaps = std::vector<std::uint32_t>;

template <class State>
struct Closure {
  Rulegraph graph;
  std::vector<State> states;  // states[p] is position p; states[0] the start
};

// Breadth-first forward closure from `start`; ids follow discovery order.
template <class State>
Closure<State> forward_closure(
    const State& start,
    const std::function<std::vector<State>(const State&)>& moves,
    const std::function<std::string(const State&)>& label,
    std::size_t max_positions) {
  Closure<State> out;
  std::map<State, PositionId> ids;
  std::vector<std::vector<PositionId>> options;
  ids.emplace(start, 0);
  out.states.push_back(start);
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    auto next = moves(out.states[i]);
    std::vector<PositionId> opts;
    for (auto& s : next) {
      auto [it, fresh] = ids.emplace(s, static_cast<PositionId>(out.states.size()));
      if (fresh) {
        if (out.states.size() >= max_positions) {
          throw Error(ErrorKind::BudgetExceeded,
                      "game has more than " + std::to_string(max_positions) +
                          " positions");
        }
        out.states.push_back(std::move(s));
      }
      opts.push_back(it->second);
    }
    options.push_back(std::move(opts));
  }
  std::vector<std::string> labels;
  labels.reserve(out.states.size());
  for (const auto& s : out.states) labels.push_back(label(s));
  out.graph = Rulegraph::from_options(std::move(labels), std::move(options));
  return out;
}

std::string tuple_label(const Heaps& heaps) {
  std::string out = "(";
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(heaps[i]);
  }
  return out + ")";
}

std::string descending_label(Heaps heaps) {
  std::sort(heaps.begin(), heaps.end(), std::greater<>());
  if (heaps.empty()) return "∅";
  std::string out = "⟦";
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(heaps[i]);
  }
  return out + "⟧";
}

Heaps sorted(Heaps h) {
  std::sort(h.begin(), h.end());
  return h;
}

std::vector<Heaps> nim_moves(const Heaps& h, bool unordered) {
  std::vector<Heaps> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::uint32_t v = 0; v < h[i]; ++v) {
      Heaps next = h;
      next[i] = v;
      out.push_back(unordered ? sorted(std::move(next)) : std::move(next));
    }
  }
  return out;
}

std::vector<Heaps> wythoff_moves(const Heaps& h) {
  std::vector<Heaps> out = nim_moves(h, true);
  for (std::uint32_t k = 1; k <= std::min(h[0], h[1]); ++k) {
    out.push_back(sorted({h[0] - k, h[1] - k}));
  }
  return out;
}

// Heaps are kept descending.
std::vector<Heaps> grundy_moves(const Heaps& h, bool drop_small) {
  std::vector<Heaps> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0 && h[i] == h[i - 1]) continue;
    for (std::uint32_t small = 1; 2 * small < h[i]; ++small) {
      Heaps next;
      for (std::size_t j = 0; j < h.size(); ++j) {
        if (j != i) next.push_back(h[j]);
      }
      next.push_back(small);
      next.push_back(h[i] - small);
      if (drop_small) {
        std::erase_if(next, [](std::uint32_t x) { return x <= 2; });
      }
      std::sort(next.begin(), next.end(), std::greater<>());
      out.push_back(std::move(next));
    }
  }
  return out;
}

BuiltGame from_closure(Rulegraph g) {
  BuiltGame out;
  out.graph = std::move(g);
  out.start = 0;
  return out;
}

BuiltGame build_star(const spec::Star& s) {
  std::vector<std::string> labels;
  std::vector<std::vector<PositionId>> options;
  for (std::uint32_t k = 0; k <= s.n; ++k) {
    labels.push_back(std::to_string(k));
    auto& opts = options.emplace_back();
    for (std::uint32_t j = 0; j < k; ++j) opts.push_back(j);
  }
  BuiltGame out;
  out.graph = Rulegraph::from_options(std::move(labels), std::move(options));
  out.start = s.n;
  return out;
}

BuiltGame build_maze(const spec::Maze& m, std::size_t max_positions) {
  if (m.rows < 2 || m.cols < 2) {
    throw Error(ErrorKind::InvalidSpec, "maze needs at least 2 rows and 2 columns");
  }
  using Cell = std::pair<std::uint32_t, std::uint32_t>;  // (column,row)
  auto terminal = [&](const Cell& c) {
    return c.first + 1 == m.cols || c.second + 1 == m.rows;
  };
  auto closure = forward_closure<Cell>(
      {0, 0},
      [&](const Cell& c) {
        std::vector<Cell> out;
        if (!terminal(c)) {
          out.push_back({c.first + 1, c.second});
          out.push_back({c.first, c.second + 1});
        }
        return out;
      },
      [](const Cell& c) {
        return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
      },
      max_positions);
  BuiltGame out = from_closure(std::move(closure.graph));
  TerminalLabeling labels;
  for (PositionId p = 0; p < closure.states.size(); ++p) {
    const auto& c = closure.states[p];
    if (!terminal(c)) continue;
    // The corner is unreachable, so each terminal is on exactly one edge.
    labels[p] = c.second + 1 == m.rows ? Outcome::N : Outcome::P;
  }
  out.terminal_labels = std::move(labels);
  return out;
}

BuiltGame build_m_graph(const spec::MGraph& m, const BuildOptions& opts) {
  if (m.d > 4 || (m.d == 4 && !opts.allow_large)) {
    throw Error(ErrorKind::BudgetExceeded,
                "M^" + std::to_string(m.d) +
                    " is too large (M^4 needs the allow-large flag, M^5 is out of reach)");
  }
  HfArena arena;
  std::vector<HfSet> level{arena.empty_set()};
  for (std::uint32_t k = 0; k < m.d; ++k) {
    std::vector<HfSet> next;
    const std::size_t n = level.size();
    next.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<HfSet> kids;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) kids.push_back(level[i]);
      }
      next.push_back(arena.make(std::move(kids)));
    }
    level = std::move(next);
  }
  BuiltGame out;
  out.graph = collection_to_rulegraph(level, arena);
  auto srcs = sources(out.graph);
  if (srcs.size() == 1) out.start = srcs.front();
  return out;
}

}  // namespace

Gamegraph BuiltGame::gamegraph() const { return Gamegraph(graph); }

std::string multiset_label(const std::vector<std::uint32_t>& heaps) {
  if (heaps.empty()) return "∅";
  auto h = sorted(heaps);
  std::string out = "⟦";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(h[i]);
  }
  return out + "⟧";
}

BuiltGame build(const GameSpec& game, const BuildOptions& opts) {
  const auto cap = opts.max_positions;
  return std::visit(
      [&](const auto& s) -> BuiltGame {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, spec::Star>) {
          return build_star(s);
        } else if constexpr (std::is_same_v<T, spec::NimTuple>) {
          return from_closure(forward_closure<Heaps>(
                                  s.piles, [](const Heaps& h) { return nim_moves(h, false); },
                                  tuple_label, cap)
                                  .graph);
        } else if constexpr (std::is_same_v<T, spec::NimMultiset>) {
          return from_closure(forward_closure<Heaps>(
                                  sorted(s.piles),
                                  [](const Heaps& h) { return nim_moves(h, true); },
                                  multiset_label, cap)
                                  .graph);
        } else if constexpr (std::is_same_v<T, spec::Wythoff>) {
          return from_closure(forward_closure<Heaps>(sorted({s.a, s.b}), wythoff_moves,
                                                     multiset_label, cap)
                                  .graph);
        } else if constexpr (std::is_same_v<T, spec::Subtraction>) {
          if (s.allowed.empty() ||
              std::any_of(s.allowed.begin(), s.allowed.end(),
                          [](std::uint32_t k) { return k == 0; })) {
            throw Error(ErrorKind::InvalidSpec,
                        "subtraction set must be non-empty with entries >= 1");
          }
          auto allowed = s.allowed;
          return from_closure(forward_closure<std::uint32_t>(
                                  s.n,
                                  [allowed](const std::uint32_t& k) {
                                    std::vector<std::uint32_t> out;
                                    for (auto a : allowed) {
                                      if (a <= k) out.push_back(k - a);
                                    }
                                    return out;
                                  },
                                  [](const std::uint32_t& k) { return std::to_string(k); },
                                  cap)
                                  .graph);
        } else if constexpr (std::is_same_v<T, spec::Grundy>) {
          Heaps start;
          if (s.n > 0) start.push_back(s.n);
          return from_closure(forward_closure<Heaps>(
                                  start, [](const Heaps& h) { return grundy_moves(h, false); },
                                  descending_label, cap)
                                  .graph);
        } else if constexpr (std::is_same_v<T, spec::Maze>) {
          return build_maze(s, cap);
        } else {
          return build_m_graph(s, opts);
        }
      },
      game);
}

Rulegraph box_sum(const Rulegraph& a, const Rulegraph& b) {
  const auto nb = b.size();
  std::vector<std::string> labels;
  std::vector<std::vector<PositionId>> options;
  labels.reserve(a.size() * nb);
  options.reserve(a.size() * nb);
  for (PositionId x = 0; x < a.size(); ++x) {
    for (PositionId y = 0; y < nb; ++y) {
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
      auto& opts = options.emplace_back();
      for (PositionId x2 : a.options(x)) opts.push_back(x2 * nb + y);
      for (PositionId y2 : b.options(y)) opts.push_back(x * nb + y2);
    }
  }
  return Rulegraph::from_options(std::move(labels), std::move(options));
}

Gamegraph box_sum(const Gamegraph& a, const Gamegraph& b) {
  return Gamegraph(box_sum(a.graph(), b.graph()));
}

NaturalMap tuple_to_multiset(const std::vector<std::uint32_t>& piles) {
  auto from = build(spec::NimTuple{piles}).gamegraph();
  auto to = build(spec::NimMultiset{piles}).gamegraph();
  auto tuples = forward_closure<Heaps>(
      piles, [](const Heaps& h) { return nim_moves(h, false); }, tuple_label,
      BuildOptions{}.max_positions);
  PositionMap alpha;
  for (const auto& t : tuples.states) {
    alpha.image.push_back(to.graph().at(multiset_label(t)));
  }
  return {std::move(from), std::move(to), std::move(alpha)};
}

NaturalMap wythoff_to_subtraction(std::uint32_t a, std::uint32_t b) {
  auto from = build(spec::Wythoff{a, b}).gamegraph();
  auto to = build(spec::Subtraction{a + b, {1, 2}}).gamegraph();
  auto heaps = forward_closure<Heaps>(sorted({a, b}), wythoff_moves,
                                      multiset_label, BuildOptions{}.max_positions);
  PositionMap alpha;
  for (const auto& h : heaps.states) {
    auto target = to.graph().find(std::to_string(h[0] + h[1]));
    if (!target) {
      throw Error(ErrorKind::InvalidSpec,
                  "heap total " + std::to_string(h[0] + h[1]) +
                      " is not a subtraction-game position");
    }
    alpha.image.push_back(*target);
  }
  if (!check_option_preserving(from.graph(), to.graph(), alpha)) {
    throw Error(ErrorKind::InvalidSpec,
                "heap-total map is not option preserving for Wythoff(" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return {std::move(from), std::move(to), std::move(alpha)};
}

NaturalMap grundy_drop_small_heaps(std::uint32_t n) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidSpec, "Grundy's game needs a heap of at least 3");
  }
  const auto cap = BuildOptions{}.max_positions;
  auto full = forward_closure<Heaps>(
      {n}, [](const Heaps& h) { return grundy_moves(h, false); },
      descending_label, cap);
  auto reduced = forward_closure<Heaps>(
      {n}, [](const Heaps& h) { return grundy_moves(h, true); },
      descending_label, cap);
  PositionMap alpha;
  for (auto h : full.states) {
    std::erase_if(h, [](std::uint32_t x) { return x <= 2; });
    alpha.image.push_back(reduced.graph.at(descending_label(h)));
  }
  return {Gamegraph(std::move(full.graph)), Gamegraph(std::move(reduced.graph)),
          std::move(alpha)};
}

}  // namespace impartial
