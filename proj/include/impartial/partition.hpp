#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "impartial/graph.hpp"

namespace impartial {

// An equivalence relation on the positions 0..size()-1, kept in normal form:
// block ids are numbered by first appearance in position order and every
// block lists its positions ascending. Two partitions are equal iff they are
// the same relation.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(std::size_t n);

  // ids[p] is an arbitrary block key for p.
  static Partition from_block_ids(std::span<const std::uint32_t> ids);

  // Listed blocks must be disjoint and in range; unlisted positions become
  // singletons. Throws InvalidSpec otherwise.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<PositionId>>& blocks);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::uint32_t block_of(PositionId p) const { return block_of_.at(p); }
  const std::vector<std::uint32_t>& block_ids() const noexcept {
    return block_of_;
  }
  const std::vector<std::vector<PositionId>>& blocks() const noexcept {
    return blocks_;
  }
  bool related(PositionId p, PositionId q) const {
    return block_of_.at(p) == block_of_.at(q);
  }
  bool is_discrete() const noexcept { return blocks_.size() == size(); }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  // Blocks with two or more positions.
  std::vector<std::vector<PositionId>> nontrivial_blocks() const;

  // "1,2|5,6" style: nontrivial blocks of sorted labels, blocks sorted,
  // "Δ" when there are none.
  std::string to_string(const Rulegraph& g) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<PositionId>> blocks_;
};

// Nontrivial blocks as sorted lists of sorted labels.
std::vector<std::vector<std::string>> labelled_blocks(const Partition& pi,
                                                      const Rulegraph& g);

}  // namespace impartial
