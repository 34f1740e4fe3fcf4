#pragma once

// Data-parallel inner loops. Each kernel comes as a serial reference and an
// OpenMP version; both must return identical results (the parallel one only
// reorders independent work).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/partition.hpp"

namespace impartial::kernels {

// ---- congruence scan ----------------------------------------------------

// All partitions refining `coarse`, in a fixed deterministic order.
std::vector<Partition> refinements(const Partition& coarse);

// flags[i] != 0 iff candidates[i] is a congruence on g.
std::vector<std::uint8_t> scan_congruences_serial(
    const Rulegraph& g, std::span<const Partition> candidates);
std::vector<std::uint8_t> scan_congruences_parallel(
    const Rulegraph& g, std::span<const Partition> candidates);

// ---- extensional acyclic digraphs by number of positions ----------------
//
// A simple rulegraph is stored as a membership-closed collection of
// hereditarily finite sets listed in increasing hf order. Element i is the
// bitmask of its elements' indices (all below i). Collections are grown by
// appending a subset of the current collection that is larger, in hf order,
// than the current last element; every collection arises exactly once.

using Collection = std::vector<std::uint64_t>;

struct ExtensionalCounts {
  std::uint64_t rulegraphs = 0;
  std::uint64_t gamegraphs = 0;  // exactly one source (maximal element)

  friend bool operator==(const ExtensionalCounts&,
                         const ExtensionalCounts&) = default;
};

inline constexpr std::size_t kMaxCollectionSize = 63;

// Order of a new element `candidate` against the last element of `masks`,
// given per-element ranks. Returns true iff candidate comes strictly after.
bool comes_after_last(std::span<const std::uint64_t> masks,
                      std::span<const std::uint32_t> ranks,
                      std::uint64_t candidate);

ExtensionalCounts count_extensional_serial(std::size_t n);
ExtensionalCounts count_extensional_parallel(std::size_t n);

// Deterministic depth-first order. Stops early when visit returns false.
void for_each_extensional(std::size_t n,
                          const std::function<bool(const Collection&)>& visit);

}  // namespace impartial::kernels
