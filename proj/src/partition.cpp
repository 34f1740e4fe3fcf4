#include "impartial/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace impartial {

Partition Partition::discrete(std::size_t n) {
  std::vector<std::uint32_t> ids(n);
  for (std::uint32_t i = 0; i < n; ++i) ids[i] = i;
  return from_block_ids(ids);
}

Partition Partition::from_block_ids(std::span<const std::uint32_t> ids) {
  Partition out;
  out.block_of_.resize(ids.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (PositionId p = 0; p < ids.size(); ++p) {
    auto [it, fresh] = renumber.emplace(
        ids[p], static_cast<std::uint32_t>(out.blocks_.size()));
    if (fresh) out.blocks_.emplace_back();
    out.block_of_[p] = it->second;
    out.blocks_[it->second].push_back(p);
  }
  return out;
}

Partition Partition::from_blocks(
    std::size_t n, const std::vector<std::vector<PositionId>>& blocks) {
  constexpr auto kUnset = std::uint32_t(-1);
  std::vector<std::uint32_t> ids(n, kUnset);
  std::uint32_t next = 0;
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw Error(ErrorKind::InvalidSpec, "partition block is empty");
    }
    for (PositionId p : block) {
      if (p >= n) {
        throw Error(ErrorKind::InvalidSpec,
                    "partition mentions position " + std::to_string(p) +
                        " outside the graph");
      }
      if (ids[p] != kUnset) {
        throw Error(ErrorKind::InvalidSpec,
                    "position " + std::to_string(p) +
                        " appears in two partition blocks");
      }
      ids[p] = next;
    }
    ++next;
  }
  for (auto& id : ids) {
    if (id == kUnset) id = next++;
  }
  return from_block_ids(ids);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  for (const auto& block : blocks_) {
    for (PositionId p : block) {
      if (coarser.block_of(p) != coarser.block_of(block.front())) return false;
    }
  }
  return true;
}

std::vector<std::vector<PositionId>> Partition::nontrivial_blocks() const {
  std::vector<std::vector<PositionId>> out;
  for (const auto& block : blocks_) {
    if (block.size() > 1) out.push_back(block);
  }
  return out;
}

std::vector<std::vector<std::string>> labelled_blocks(const Partition& pi,
                                                      const Rulegraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : pi.nontrivial_blocks()) {
    auto& names = out.emplace_back();
    for (PositionId p : block) names.push_back(g.label(p));
    std::sort(names.begin(), names.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Partition::to_string(const Rulegraph& g) const {
  auto blocks = labelled_blocks(*this, g);
  if (blocks.empty()) return "Δ";
  std::string out;
  for (const auto& block : blocks) {
    if (!out.empty()) out += '|';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += block[i];
    }
  }
  return out;
}

}  // namespace impartial
