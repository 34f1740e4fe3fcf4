#include "impartial/kernels.hpp"

#include <algorithm>
#include <bit>

#include "impartial/congruence.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace impartial::kernels {

// ---- congruence scan ----------------------------------------------------

namespace {

// Restricted growth strings of length n: every set partition of {0..n-1}.
std::vector<std::vector<std::uint32_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  if (n == 0) return {{}};
  for (;;) {
    out.push_back(rgs);
    // Rightmost position that can still be incremented.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return out;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace

std::vector<Partition> refinements(const Partition& coarse) {
  const auto& blocks = coarse.blocks();
  std::vector<std::vector<std::vector<std::uint32_t>>> per_block;
  per_block.reserve(blocks.size());
  for (const auto& block : blocks) per_block.push_back(set_partitions(block.size()));

  std::vector<Partition> out;
  std::vector<std::size_t> digit(blocks.size(), 0);
  std::vector<std::uint32_t> ids(coarse.size());
  for (;;) {
    std::uint32_t offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& rgs = per_block[b][digit[b]];
      std::uint32_t used = 0;
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        ids[blocks[b][i]] = offset + rgs[i];
        used = std::max(used, rgs[i] + 1);
      }
      offset += used;
    }
    out.push_back(Partition::from_block_ids(ids));
    std::size_t b = 0;
    while (b < blocks.size() && ++digit[b] == per_block[b].size()) digit[b++] = 0;
    if (b == blocks.size()) return out;
  }
}

std::vector<std::uint8_t> scan_congruences_serial(
    const Rulegraph& g, std::span<const Partition> candidates) {
  std::vector<std::uint8_t> flags(candidates.size(), 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    flags[i] = is_congruence(g, candidates[i]).holds ? 1 : 0;
  }
  return flags;
}

std::vector<std::uint8_t> scan_congruences_parallel(
    const Rulegraph& g, std::span<const Partition> candidates) {
  std::vector<std::uint8_t> flags(candidates.size(), 0);
  const auto n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    flags[i] = is_congruence(g, candidates[i]).holds ? 1 : 0;
  }
  return flags;
}

// ---- extensional acyclic digraphs ---------------------------------------

bool comes_after_last(std::span<const std::uint64_t> masks,
                      std::span<const std::uint32_t> ranks,
                      std::uint64_t candidate) {
  const std::uint64_t last = masks.back();
  const std::uint32_t last_rank = ranks.back();
  const std::uint32_t cand_rank =
      candidate == 0 ? 0 : ranks[63 - std::countl_zero(candidate)] + 1;
  if (cand_rank != last_rank) return cand_rank > last_rank;
  if (candidate == last) return false;
  // Lexicographic order on the ascending index sequences.
  const std::uint64_t diff = candidate ^ last;
  const int m = std::countr_zero(diff);
  if (candidate >> m & 1) {
    // candidate continues with m; last either stops (prefix) or goes higher.
    return (last >> m) == 0;
  }
  return (candidate >> m) != 0;
}

namespace {

struct Frame {
  std::vector<std::uint64_t> masks;
  std::vector<std::uint32_t> ranks;
  std::uint64_t covered = 0;  // union of all element masks
};

std::uint32_t rank_of(const Frame& f, std::uint64_t mask) {
  return mask == 0 ? 0 : f.ranks[63 - std::countl_zero(mask)] + 1;
}

void push(Frame& f, std::uint64_t mask) {
  f.ranks.push_back(rank_of(f, mask));
  f.masks.push_back(mask);
  f.covered |= mask;
}

void pop(Frame& f, std::uint64_t previous_covered) {
  f.masks.pop_back();
  f.ranks.pop_back();
  f.covered = previous_covered;
}

// Counts completions of f to n elements.
void count_from(Frame& f, std::size_t n, ExtensionalCounts& acc) {
  const std::size_t k = f.masks.size();
  const std::uint64_t limit = std::uint64_t{1} << k;
  if (k + 1 == n) {
    const std::uint64_t all = limit - 1;
    for (std::uint64_t x = 0; x < limit; ++x) {
      if (!comes_after_last(f.masks, f.ranks, x)) continue;
      ++acc.rulegraphs;
      if ((f.covered | x) == all) ++acc.gamegraphs;
    }
    return;
  }
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (!comes_after_last(f.masks, f.ranks, x)) continue;
    const auto saved = f.covered;
    push(f, x);
    count_from(f, n, acc);
    pop(f, saved);
  }
}

void collect_frontier(Frame& f, std::size_t depth, std::vector<Frame>& out) {
  if (f.masks.size() == depth) {
    out.push_back(f);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << f.masks.size();
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (!comes_after_last(f.masks, f.ranks, x)) continue;
    const auto saved = f.covered;
    push(f, x);
    collect_frontier(f, depth, out);
    pop(f, saved);
  }
}

ExtensionalCounts trivial_counts(std::size_t n) {
  // The empty collection and {∅}.
  if (n == 0) return {1, 0};
  return {1, 1};
}

Frame root() {
  Frame f;
  push(f, 0);  // ∅ is the least element of every non-empty collection
  return f;
}

}  // namespace

ExtensionalCounts count_extensional_serial(std::size_t n) {
  if (n <= 1) return trivial_counts(n);
  ExtensionalCounts acc;
  Frame f = root();
  count_from(f, n, acc);
  return acc;
}

ExtensionalCounts count_extensional_parallel(std::size_t n) {
  if (n <= 1) return trivial_counts(n);
  // Split at a depth that yields enough independent subtrees.
  const std::size_t depth = std::min<std::size_t>(n - 1, 5);
  std::vector<Frame> frontier;
  Frame f = root();
  collect_frontier(f, depth, frontier);

  std::uint64_t rulegraphs = 0;
  std::uint64_t gamegraphs = 0;
  const auto m = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : rulegraphs, gamegraphs)
  for (std::int64_t i = 0; i < m; ++i) {
    ExtensionalCounts local;
    Frame& sub = frontier[i];
    if (sub.masks.size() == n) {
      local.rulegraphs = 1;
      const std::uint64_t all = (std::uint64_t{1} << (n - 1)) - 1;
      local.gamegraphs = sub.covered == all ? 1 : 0;
    } else {
      count_from(sub, n, local);
    }
    rulegraphs += local.rulegraphs;
    gamegraphs += local.gamegraphs;
  }
  return {rulegraphs, gamegraphs};
}

namespace {

bool visit_from(Frame& f, std::size_t n,
                const std::function<bool(const Collection&)>& visit) {
  if (f.masks.size() == n) return visit(f.masks);
  const std::uint64_t limit = std::uint64_t{1} << f.masks.size();
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (!comes_after_last(f.masks, f.ranks, x)) continue;
    const auto saved = f.covered;
    push(f, x);
    bool more = visit_from(f, n, visit);
    pop(f, saved);
    if (!more) return false;
  }
  return true;
}

}  // namespace

void for_each_extensional(std::size_t n,
                          const std::function<bool(const Collection&)>& visit) {
  if (n == 0) {
    visit(Collection{});
    return;
  }
  Frame f = root();
  visit_from(f, n, visit);
}

}  // namespace impartial::kernels
