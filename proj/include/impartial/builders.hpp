#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/morphism.hpp"
#include "impartial/valuation.hpp"

namespace impartial {

namespace spec {

// One-pile NIM: positions 0..n, Opt(k) = {0..k-1}.
struct Star { std::uint32_t n = 0; };
// NIM on ordered piles; positions are tuples "(a,b,...)".
struct NimTuple { std::vector<std::uint32_t> piles; };
// NIM on unordered piles; positions are ascending multisets "⟦a,b⟧".
struct NimMultiset { std::vector<std::uint32_t> piles; };
// Two heaps; take any positive amount from one heap or the same from both.
struct Wythoff { std::uint32_t a = 0; std::uint32_t b = 0; };
// One heap of n; a move takes k stones for some k in `allowed`.
struct Subtraction { std::uint32_t n = 0; std::vector<std::uint32_t> allowed; };
// Split one heap into two unequal non-empty heaps; descending multisets.
struct Grundy { std::uint32_t n = 0; };
// Mouse at (column,row) from (0,0), moving up or right; the top row and
// right column are terminal and the top-right corner does not exist.
struct Maze { std::uint32_t rows = 0; std::uint32_t cols = 0; };
// All hereditarily finite sets of rank at most d, arrows A -> B for B in A.
struct MGraph { std::uint32_t d = 0; };

}  // namespace spec

using GameSpec = std::variant<spec::Star, spec::NimTuple, spec::NimMultiset,
                              spec::Wythoff, spec::Subtraction, spec::Grundy,
                              spec::Maze, spec::MGraph>;

struct BuildOptions {
  bool allow_large = false;             // permits MGraph{4}
  std::size_t max_positions = 1 << 20;  // forward-closure guard
};

struct BuiltGame {
  Rulegraph graph;
  std::optional<PositionId> start;  // absent when there is no unique source
  std::optional<TerminalLabeling> terminal_labels;  // maze only

  Gamegraph gamegraph() const;  // throws MultipleSources / NoSource
};

// Throws InvalidSpec or BudgetExceeded.
BuiltGame build(const GameSpec& spec, const BuildOptions& opts = {});

// Positions are pairs "(x,y)" in row-major order; a move changes exactly one
// coordinate.
Rulegraph box_sum(const Rulegraph& a, const Rulegraph& b);
Gamegraph box_sum(const Gamegraph& a, const Gamegraph& b);

struct NaturalMap {
  Gamegraph from;
  Gamegraph to;
  PositionMap map;
};

// NimTuple(piles) -> NimMultiset(piles), forgetting pile order.
NaturalMap tuple_to_multiset(const std::vector<std::uint32_t>& piles);
// Wythoff(a,b) -> Subtraction(a+b, {1,2}) by total heap size. Throws
// InvalidSpec when this is not option preserving for (a,b).
NaturalMap wythoff_to_subtraction(std::uint32_t a, std::uint32_t b);
// Grundy(n) -> the same game with heaps of size 1 and 2 deleted.
NaturalMap grundy_drop_small_heaps(std::uint32_t n);

// "⟦a,b,c⟧"; the empty multiset renders as "∅".
std::string multiset_label(const std::vector<std::uint32_t>& heaps);

}  // namespace impartial
