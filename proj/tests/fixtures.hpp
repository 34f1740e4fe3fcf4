#pragma once

// Shared graphs and brute-force oracles for the test binaries. Oracles here
// deliberately avoid the library's algorithms: they recurse on labels, try
// every map, and try every partition.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "impartial/congruence.hpp"
#include "impartial/graph.hpp"
#include "impartial/morphism.hpp"

namespace fixtures {

using impartial::Gamegraph;
using impartial::LabelArrow;
using impartial::Partition;
using impartial::PositionId;
using impartial::PositionMap;
using impartial::Rulegraph;

inline Rulegraph graph(std::vector<std::string> labels, std::vector<LabelArrow> arrows) {
  return Rulegraph::from_labels(std::move(labels), arrows);
}

// ---- figure graphs ------------------------------------------------------

inline Rulegraph two_chain() { return graph({"x", "y"}, {{"x", "y"}}); }

inline Rulegraph branching_s() {
  return graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}});
}

inline Rulegraph six_position_r() {
  return graph({"1", "2", "3", "4", "5", "6"}, {{"1", "3"},
                                                {"1", "4"},
                                                {"2", "3"},
                                                {"2", "4"},
                                                {"3", "5"},
                                                {"3", "6"},
                                                {"4", "6"}});
}

inline Rulegraph emul_g() {
  return graph({"a", "b1", "b2", "b3", "c", "d1", "d2"},
               {{"a", "b1"},
                {"a", "b2"},
                {"a", "b3"},
                {"b1", "c"},
                {"b1", "d1"},
                {"b2", "c"},
                {"b3", "c"},
                {"b3", "d2"},
                {"c", "d1"}});
}

inline Rulegraph emul_h() {
  return graph({"s1", "s21", "s22", "s23", "s31", "s32", "s41", "s42"},
               {{"s1", "s21"},
                {"s1", "s22"},
                {"s1", "s23"},
                {"s21", "s31"},
                {"s22", "s32"},
                {"s22", "s41"},
                {"s23", "s32"},
                {"s23", "s42"},
                {"s31", "s41"},
                {"s32", "s42"}});
}

inline Rulegraph emul_k() {
  return graph({"1", "21", "22", "3", "4"},
               {{"1", "21"}, {"1", "22"}, {"21", "3"}, {"22", "3"}, {"22", "4"}, {"3", "4"}});
}

inline Rulegraph three_layer() {
  return graph({"t1", "t2", "t3", "m1", "m2", "b1", "b2", "b3"},
               {{"t1", "m1"},
                {"t1", "m2"},
                {"t2", "m1"},
                {"t2", "m2"},
                {"t3", "m1"},
                {"t3", "m2"},
                {"m1", "b1"},
                {"m1", "b2"},
                {"m1", "b3"},
                {"m2", "b2"}});
}

inline Rulegraph srtqp() {
  return graph({"s", "r", "t", "q", "p"},
               {{"s", "r"}, {"s", "t"}, {"s", "q"}, {"r", "p"}, {"r", "q"}, {"t", "q"}});
}

inline Rulegraph path(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<LabelArrow> arrows;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.emplace_back(labels[i], labels[i + 1]);
  return graph(labels, arrows);
}

// ---- random graphs ------------------------------------------------------

// Arrows only go from smaller to larger index before a random relabelling,
// so the result is acyclic.
inline Rulegraph random_dag(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = "p" + std::to_string(i);
  std::vector<std::vector<PositionId>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) options[perm[i]].push_back(static_cast<PositionId>(perm[j]));
    }
  }
  return Rulegraph::from_options(labels, options);
}

// Index 0 is the start; every later index gets a parent among earlier ones.
inline Gamegraph random_gamegraph(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = "g" + std::to_string(i);
  std::vector<std::vector<PositionId>> options(n);
  for (std::size_t j = 1; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j - 1);
    options[perm[pick(rng)]].push_back(static_cast<PositionId>(perm[j]));
    for (std::size_t i = 0; i < j; ++i) {
      if (coin(rng)) options[perm[i]].push_back(static_cast<PositionId>(perm[j]));
    }
  }
  return Gamegraph(Rulegraph::from_options(labels, options));
}

// ---- oracles ------------------------------------------------------------

// Sprague-Grundy value by plain memoized recursion.
inline std::uint64_t naive_nim(const Rulegraph& g, PositionId p,
                               std::map<PositionId, std::uint64_t>& memo) {
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  std::set<std::uint64_t> seen;
  for (PositionId q : g.options(p)) seen.insert(naive_nim(g, q, memo));
  std::uint64_t v = 0;
  while (seen.count(v)) ++v;
  return memo[p] = v;
}

inline std::vector<std::uint64_t> naive_nim_all(const Rulegraph& g) {
  std::map<PositionId, std::uint64_t> memo;
  std::vector<std::uint64_t> out;
  for (PositionId p = 0; p < g.size(); ++p) out.push_back(naive_nim(g, p, memo));
  return out;
}

// Definition check: Opt(alpha(p)) = alpha(Opt(p)) as sets.
inline bool naive_option_preserving(const Rulegraph& from, const Rulegraph& to,
                                    const std::vector<PositionId>& image) {
  for (PositionId p = 0; p < from.size(); ++p) {
    std::set<PositionId> lhs(to.options(image[p]).begin(), to.options(image[p]).end());
    std::set<PositionId> rhs;
    for (PositionId q : from.options(p)) rhs.insert(image[q]);
    if (lhs != rhs) return false;
  }
  return true;
}

// Every total map, filtered by the definition. |to|^|from| candidates.
inline std::vector<PositionMap> brute_force_maps(const Rulegraph& from, const Rulegraph& to) {
  std::vector<PositionMap> out;
  if (to.empty()) {
    if (from.empty()) out.push_back({});
    return out;
  }
  std::vector<PositionId> image(from.size(), 0);
  for (;;) {
    if (naive_option_preserving(from, to, image)) out.push_back({image});
    std::size_t i = 0;
    while (i < image.size() && ++image[i] == to.size()) image[i++] = 0;
    if (i == image.size()) return out;
  }
}

// All set partitions of n positions by recursive block assignment.
inline void all_partitions(std::size_t n, const std::function<void(const Partition&)>& visit) {
  std::vector<std::uint32_t> ids(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t blocks) {
    if (i == n) {
      visit(Partition::from_block_ids(ids));
      return;
    }
    for (std::uint32_t b = 0; b <= blocks; ++b) {
      ids[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
}

// Definition check for a congruence: related positions reach the same set of
// classes.
inline bool naive_congruence(const Rulegraph& g, const Partition& pi) {
  for (PositionId p = 0; p < g.size(); ++p) {
    for (PositionId q = 0; q < g.size(); ++q) {
      if (!pi.related(p, q)) continue;
      std::set<std::uint32_t> a, b;
      for (auto x : g.options(p)) a.insert(pi.block_of(x));
      for (auto x : g.options(q)) b.insert(pi.block_of(x));
      if (a != b) return false;
    }
  }
  return true;
}

inline std::vector<Partition> brute_force_congruences(const Rulegraph& g) {
  std::vector<Partition> out;
  all_partitions(g.size(), [&](const Partition& pi) {
    if (naive_congruence(g, pi)) out.push_back(pi);
  });
  return out;
}

// Repeatedly glue a random pair of positions with equal option sets until
// none is left.
inline Rulegraph greedy_merge(Rulegraph g, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<PositionId, PositionId>> twins;
    for (PositionId p = 0; p < g.size(); ++p) {
      for (PositionId q = p + 1; q < g.size(); ++q) {
        auto a = g.options(p);
        auto b = g.options(q);
        if (std::equal(a.begin(), a.end(), b.begin(), b.end())) twins.emplace_back(p, q);
      }
    }
    if (twins.empty()) return g;
    std::uniform_int_distribution<std::size_t> pick(0, twins.size() - 1);
    auto [p, q] = twins[pick(rng)];
    auto pi = Partition::from_blocks(g.size(), {{p, q}});
    g = impartial::quotient(g, pi).graph;
  }
}

}  // namespace fixtures
