#include "impartial/enumeration.hpp"

#include <string>

#include "impartial/error.hpp"
#include "impartial/hfset.hpp"

namespace impartial {

namespace {

mpz_class pow2(std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void budget_check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BudgetExceeded, what);
}

}  // namespace

mpz_class CountTable::total(std::size_t d) const {
  mpz_class sum = 0;
  for (const auto& [idx, x] : by_depth.at(d)) sum += x;
  return sum;
}

mpz_class tower2(std::uint32_t n, std::size_t bit_budget) {
  mpz_class v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    // 2^v needs v+1 bits.
    budget_check(v < mpz_class(static_cast<unsigned long>(bit_budget)),
                 "tower of height " + std::to_string(n) + " exceeds " +
                     std::to_string(bit_budget) + " bits");
    v = pow2(v.get_ui());
  }
  return v;
}

CountTable index_table(std::uint32_t d, std::uint32_t max_depth) {
  budget_check(d <= max_depth, "index table depth " + std::to_string(d) +
                                   " exceeds budget " + std::to_string(max_depth));
  CountTable table;
  table.by_depth.push_back({{Index{1, 0}, mpz_class(1)}});
  for (std::uint32_t k = 0; k < d; ++k) {
    std::map<Index, mpz_class> next;
    for (const auto& [idx, x] : table.by_depth.back()) {
      const std::uint64_t width = idx.t + idx.u;
      budget_check(width < 63, "index width overflows");
      const std::uint64_t slots = (std::uint64_t{1} << width) - (std::uint64_t{1} << idx.u);
      for (std::uint64_t big_t = 1; big_t <= slots; ++big_t) {
        next[Index{big_t, width}] += binomial(slots, big_t) * x;
      }
    }
    table.by_depth.push_back(std::move(next));
  }
  return table;
}

mpz_class x_total(std::uint32_t d, std::uint32_t max_depth) {
  budget_check(d <= max_depth, "x_" + std::to_string(d) + " exceeds budget " +
                                   std::to_string(max_depth));
  if (d == 0) return 1;
  auto table = index_table(d - 1, max_depth);
  mpz_class sum = 0;
  for (const auto& [idx, x] : table.by_depth.back()) {
    const std::uint64_t width = idx.t + idx.u;
    const std::uint64_t slots = (std::uint64_t{1} << width) - (std::uint64_t{1} << idx.u);
    sum += (pow2(slots) - 1) * x;
  }
  return sum;
}

kernels::ExtensionalCounts count_simple_rulegraphs(std::size_t n, std::size_t budget,
                                                   bool parallel) {
  budget_check(n <= budget && n <= kernels::kMaxCollectionSize,
               "n=" + std::to_string(n) + " exceeds budget " + std::to_string(budget));
  return parallel ? kernels::count_extensional_parallel(n)
                  : kernels::count_extensional_serial(n);
}

Rulegraph collection_rulegraph(const kernels::Collection& masks) {
  HfArena arena;
  std::vector<HfSet> sets;
  sets.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::vector<HfSet> kids;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (m >> i & 1) kids.push_back(sets[i]);
    }
    sets.push_back(arena.make(std::move(kids)));
  }
  return collection_to_rulegraph(sets, arena);
}

void stream_simple_rulegraphs(std::size_t n, bool gamegraphs_only,
                              const std::function<bool(const Rulegraph&)>& visit,
                              std::size_t budget) {
  budget_check(n <= budget && n <= kernels::kMaxCollectionSize,
               "streaming n=" + std::to_string(n) + " exceeds budget " +
                   std::to_string(budget));
  kernels::for_each_extensional(n, [&](const kernels::Collection& c) {
    if (gamegraphs_only) {
      if (c.empty()) return true;
      std::uint64_t covered = 0;
      for (auto m : c) covered |= m;
      const std::uint64_t rest = (std::uint64_t{1} << (c.size() - 1)) - 1;
      if ((covered & rest) != rest) return true;
    }
    return visit(collection_rulegraph(c));
  });
}

namespace {

struct Layered {
  std::vector<HfSet> sets;
  std::vector<HfSet> tops;
};

bool single_source(const HfArena& arena, const Layered& c) {
  // Only a top can be the source; it must be the only top and reach
  // everything else directly or indirectly.
  if (c.tops.size() != 1) return false;
  std::vector<HfSet> members;
  for (HfSet s : c.sets) {
    for (HfSet k : arena.children(s)) members.push_back(k);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members.size() + 1 == c.sets.size();
}

bool grow(HfArena& arena, const Layered& c, std::uint32_t remaining,
          const std::function<bool(const Layered&)>& visit) {
  if (remaining == 0) return visit(c);
  const std::size_t n = c.sets.size();
  budget_check(n < 24, "collection too large to extend");
  std::vector<std::uint64_t> top_bits;
  std::uint64_t top_mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(c.tops.begin(), c.tops.end(), c.sets[i]) != c.tops.end()) {
      top_mask |= std::uint64_t{1} << i;
    }
  }
  std::vector<HfSet> fresh;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (!(m & top_mask)) continue;
    std::vector<HfSet> kids;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1) kids.push_back(c.sets[i]);
    }
    fresh.push_back(arena.make(std::move(kids)));
  }
  budget_check(fresh.size() < 63, "too many candidate top positions");
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << fresh.size()); ++pick) {
    Layered next;
    next.sets = c.sets;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (pick >> i & 1) {
        next.sets.push_back(fresh[i]);
        next.tops.push_back(fresh[i]);
      }
    }
    if (!grow(arena, next, remaining - 1, visit)) return false;
  }
  return true;
}

}  // namespace

void stream_by_fbd(std::uint32_t d, bool gamegraphs_only,
                   const std::function<bool(const Rulegraph&)>& visit,
                   std::uint32_t budget) {
  budget_check(d <= budget, "fbd " + std::to_string(d) + " exceeds budget " +
                                std::to_string(budget));
  HfArena arena;
  Layered base{{arena.empty_set()}, {arena.empty_set()}};
  grow(arena, base, d, [&](const Layered& c) {
    if (gamegraphs_only && !single_source(arena, c)) return true;
    return visit(collection_to_rulegraph(c.sets, arena));
  });
}

std::uint64_t count_by_fbd(std::uint32_t d, bool gamegraphs_only, std::uint32_t budget) {
  budget_check(d <= budget, "fbd " + std::to_string(d) + " exceeds budget " +
                                std::to_string(budget));
  HfArena arena;
  Layered base{{arena.empty_set()}, {arena.empty_set()}};
  std::uint64_t count = 0;
  grow(arena, base, d, [&](const Layered& c) {
    if (!gamegraphs_only || single_source(arena, c)) ++count;
    return true;
  });
  return count;
}

mpz_class count_min_positions(std::uint32_t d) {
  const std::uint64_t dd = d;
  return pow2(dd * (dd + 1) / 2 - dd);
}

bool feasibility(std::uint64_t m, std::uint32_t d) {
  if (m < std::uint64_t{d} + 1) return false;
  // From height 5 on the tower exceeds every 64-bit m.
  if (d >= 5) return true;
  return mpz_class(static_cast<unsigned long>(m)) <= tower2(d);
}

}  // namespace impartial
