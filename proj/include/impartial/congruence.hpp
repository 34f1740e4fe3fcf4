#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/morphism.hpp"
#include "impartial/partition.hpp"

namespace impartial {

struct PairVerdict {
  bool holds = true;
  std::optional<std::pair<PositionId, PositionId>> witness;
  explicit operator bool() const noexcept { return holds; }
};

// Holds iff related positions have the same set of option classes. The
// witness is a related pair whose option-class sets differ.
PairVerdict is_congruence(const Rulegraph& g, const Partition& pi);

struct Quotient {
  Rulegraph graph;                // one position per block, labelled "{a,b}"
  Partition relation;             // the congruence quotiented by
  PositionMap map;                // p -> [p]
  std::optional<PositionId> start;

  Gamegraph gamegraph() const;
};

// Throws NotACongruence.
Quotient quotient(const Rulegraph& g, const Partition& pi);
Quotient quotient(const Gamegraph& g, const Partition& pi);

// Quotient by the maximum congruence, found through canonical forms.
Quotient min_quotient(const Rulegraph& g);
Quotient min_quotient(const Gamegraph& g);

// The maximum congruence alone.
Partition max_congruence(const Rulegraph& g);

// Holds iff Opt is injective; the witness shares its option set.
PairVerdict is_simple(const Rulegraph& g);

IsoVerdict emulationally_equivalent(const Rulegraph& a, const Rulegraph& b);

// Both throw NotACongruence when an argument is not a congruence on g.
// meet is the largest congruence inside the intersection of a and b; the
// intersection alone need not be a congruence.
Partition meet(const Rulegraph& g, const Partition& a, const Partition& b);
Partition join(const Rulegraph& g, const Partition& a, const Partition& b);

// Coarsest congruence refining pi (pi itself when it already is one).
Partition largest_congruence_below(const Rulegraph& g, const Partition& pi);

// C/D as a congruence on g/D. Throws NotRefinement unless d refines c.
Partition pushforward_congruence(const Rulegraph& g, const Partition& d,
                                 const Partition& c);

struct CongruenceLattice {
  std::vector<Partition> elements;  // most blocks first; elements[0] is Δ
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> join;
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const Partition& pi) const;
};

inline constexpr std::size_t kDefaultLatticeBudget = 10;
inline constexpr std::size_t kDefaultLatticeElements = 1000;

// Every congruence of g with its order, meet and join tables. Throws
// BudgetExceeded above `budget` positions or `max_elements` congruences.
CongruenceLattice con_lattice(const Rulegraph& g,
                              std::size_t budget = kDefaultLatticeBudget,
                              std::size_t max_elements = kDefaultLatticeElements);

// Every congruence of g without the tables, in the same order as
// con_lattice. Candidates are the refinements of the maximum congruence,
// scanned in parallel.
std::vector<Partition> all_congruences(const Rulegraph& g,
                                       std::size_t budget = kDefaultLatticeBudget);

}  // namespace impartial
