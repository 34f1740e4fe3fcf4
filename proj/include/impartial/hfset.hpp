#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "impartial/graph.hpp"

namespace impartial {

// Handle to an interned hereditarily finite set. Only meaningful together
// with the HfArena that produced it; handles from different arenas must be
// compared through to_string(), never by id.
struct HfSet {
  std::uint32_t id = 0;
  friend auto operator<=>(HfSet, HfSet) = default;
};

// Intern table for hereditarily finite sets. Structurally equal sets get the
// same handle. Single writer; distinct arenas are independent.
class HfArena {
 public:
  HfArena();

  HfSet empty_set() const noexcept { return HfSet{0}; }

  // The set whose elements are `children` (any order, duplicates allowed).
  HfSet make(std::vector<HfSet> children);

  std::span<const HfSet> children(HfSet s) const {
    return nodes_.at(s.id).children;
  }
  std::uint32_t rank(HfSet s) const { return nodes_.at(s.id).rank; }
  std::size_t size() const noexcept { return nodes_.size(); }

  bool contains(HfSet set, HfSet element) const;

  // Rank first; equal ranks compare their child sequences (ascending in this
  // same order) lexicographically, a proper prefix being smaller.
  std::strong_ordering compare(HfSet a, HfSet b) const;

  // Nested braces with children in compare() order, "∅" for the empty set.
  std::string to_string(HfSet s) const;

  // Accepts the to_string() notation; "{}" is also read as the empty set and
  // whitespace is ignored. Throws ParseError.
  HfSet parse(std::string_view text);

 private:
  struct Node {
    std::vector<HfSet> children;  // sorted by compare()
    std::uint32_t rank = 0;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  std::vector<Node> nodes_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> index_;
};

inline std::strong_ordering hf_order(const HfArena& arena, HfSet a, HfSet b) {
  return arena.compare(a, b);
}

// canon[p] is the set of canon[q] over q in Opt(p). Two positions share a
// canonical form exactly when the maximum congruence relates them.
std::vector<HfSet> canonicalize(const Rulegraph& g, HfArena& arena);

// The membership digraph of a membership-closed collection: one position per
// set (ascending hf order, labelled by its notation), an arrow A -> B iff
// B is an element of A. Throws NotMembershipClosed naming a missing element.
Rulegraph collection_to_rulegraph(std::span<const HfSet> collection,
                                  const HfArena& arena);

}  // namespace impartial
