#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "impartial/graph.hpp"
#include "impartial/kernels.hpp"

namespace impartial {

// Index (t,u) of a simple rulegraph with formal birthday d: t positions have
// birthday d, u have smaller birthdays.
struct Index {
  std::uint64_t t = 1;
  std::uint64_t u = 0;
  friend auto operator<=>(const Index&, const Index&) = default;
};

struct CountTable {
  // by_depth[d][(t,u)] = x_{d,t,u}; zero entries are absent.
  std::vector<std::map<Index, mpz_class>> by_depth;

  std::size_t depth() const { return by_depth.size() - 1; }
  mpz_class total(std::size_t d) const;
};

// Tower of 2s of height n. Throws BudgetExceeded when the result would need
// more than `bit_budget` bits.
mpz_class tower2(std::uint32_t n, std::size_t bit_budget = std::size_t{1} << 20);

// Index recursion up to depth d. The depth-4 table has hundreds of thousands
// of entries with tens of thousands of digits each, hence the lower default.
CountTable index_table(std::uint32_t d, std::uint32_t max_depth = 3);

// x_d through the one-step formula over the depth d-1 table.
mpz_class x_total(std::uint32_t d, std::uint32_t max_depth = 4);

// ---- by number of positions ---------------------------------------------

inline constexpr std::size_t kDefaultCountBudget = 7;
inline constexpr std::size_t kDefaultStreamBudget = 5;

// Both counts for n positions in one pass. Throws BudgetExceeded for
// n > budget.
kernels::ExtensionalCounts count_simple_rulegraphs(std::size_t n,
                                                   std::size_t budget = kDefaultCountBudget,
                                                   bool parallel = true);

// Calls visit on every simple rulegraph with n positions (up to isomorphism,
// each exactly once, deterministic order). visit returns false to stop.
void stream_simple_rulegraphs(std::size_t n, bool gamegraphs_only,
                              const std::function<bool(const Rulegraph&)>& visit,
                              std::size_t budget = kDefaultStreamBudget);

Rulegraph collection_rulegraph(const kernels::Collection& masks);

// ---- by formal birthday -------------------------------------------------

inline constexpr std::uint32_t kDefaultFbdBudget = 3;

// Exhaustive layer-by-layer generation of the simple rulegraphs with formal
// birthday exactly d. gamegraphs_only keeps those with a single source.
void stream_by_fbd(std::uint32_t d, bool gamegraphs_only,
                   const std::function<bool(const Rulegraph&)>& visit,
                   std::uint32_t budget = kDefaultFbdBudget);
std::uint64_t count_by_fbd(std::uint32_t d, bool gamegraphs_only = false,
                           std::uint32_t budget = kDefaultFbdBudget);

// Number of simple rulegraphs of formal birthday d with only d+1 positions.
mpz_class count_min_positions(std::uint32_t d);

// Whether some simple rulegraph has formal birthday d and m positions.
bool feasibility(std::uint64_t m, std::uint32_t d);

}  // namespace impartial
