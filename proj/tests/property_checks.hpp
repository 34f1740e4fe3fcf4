#pragma once

// Randomized property checks shared by the unit suite and the acceptance
// binary. Each returns an empty string on success, otherwise a description
// of the first counterexample.

#include <sstream>

#include "fixtures.hpp"
#include "impartial/builders.hpp"
#include "impartial/congruence.hpp"
#include "impartial/serialize.hpp"
#include "impartial/valuation.hpp"

namespace props {

using namespace impartial;

struct Context {
  std::mt19937_64 rng;
  int cases = 1000;

  explicit Context(std::uint64_t seed, int n = 1000) : rng(seed), cases(n) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  double density() { return std::uniform_real_distribution<double>(0.1, 0.6)(rng); }
  Rulegraph dag(std::size_t hi) { return fixtures::random_dag(rng, size(1, hi), density()); }
  Gamegraph game(std::size_t hi) {
    return fixtures::random_gamegraph(rng, size(1, hi), density());
  }
};

inline std::string show(const Rulegraph& g) { return serialize_graph(g); }

// Split each block of the maximum congruence at random, then shrink to the
// largest congruence inside the result.
inline Partition random_congruence(Context& cx, const Rulegraph& g) {
  auto top = max_congruence(g);
  std::vector<std::uint32_t> ids(g.size());
  const auto spread = static_cast<std::uint32_t>(cx.size(1, 3));
  for (PositionId p = 0; p < g.size(); ++p) {
    ids[p] = top.block_of(p) * 4 + static_cast<std::uint32_t>(cx.size(0, spread - 1));
  }
  return largest_congruence_below(g, Partition::from_block_ids(ids));
}

// A codomain that admits maps from g: a quotient of g, sometimes summed with
// a star so that non-surjective maps show up as well.
inline Gamegraph related_codomain(Context& cx, const Gamegraph& g) {
  auto q = quotient(g, random_congruence(cx, g.graph())).gamegraph();
  if (cx.size(0, 2) == 0) return box_sum(q, build(spec::Star{1}).gamegraph());
  return q;
}

inline std::string nim_sum_law(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.game(10);
    auto h = cx.game(10);
    auto s = box_sum(g, h);
    auto ng = fixtures::naive_nim_all(g.graph())[g.start()];
    auto nh = fixtures::naive_nim_all(h.graph())[h.start()];
    if (*evaluate(s, mex_aggregator()).graph_value != (ng ^ nh)) {
      return "nim-sum law fails for\n" + show(g.graph()) + "\n" + show(h.graph());
    }
  }
  return {};
}

inline std::string p_iff_nim_zero(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.dag(10);
    auto nim = nim_values(g);
    auto out = outcome_normal(g);
    for (PositionId p = 0; p < g.size(); ++p) {
      if ((out[p] == Outcome::P) != (nim[p] == 0)) return "outcome/nim mismatch in\n" + show(g);
    }
  }
  return {};
}

template <class T>
bool invariant(const PositionMap& alpha, const std::vector<T>& a, const std::vector<T>& b) {
  for (PositionId p = 0; p < alpha.size(); ++p) {
    if (a[p] != b[alpha(p)]) return false;
  }
  return true;
}

inline std::string valuation_invariance(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.game(8);
    auto h = related_codomain(cx, g);
    auto found = find_option_preserving_map(g.graph(), h.graph());
    if (!found) return "no map into a quotient of\n" + show(g.graph());
    const auto& a = g.graph();
    const auto& b = h.graph();
    if (!fixtures::naive_option_preserving(a, b, found->image)) {
      return "search returned a map that is not option preserving";
    }
    if (!invariant(*found, nim_values(a), nim_values(b)) ||
        !invariant(*found, outcome_normal(a), outcome_normal(b)) ||
        !invariant(*found, outcome_misere(a), outcome_misere(b)) ||
        !invariant(*found, formal_birthdays(a), formal_birthdays(b)) ||
        !invariant(*found, min_distance_to_terminal(a), min_distance_to_terminal(b))) {
      return "valuation not preserved from\n" + show(a) + "\nto\n" + show(b);
    }
  }
  return {};
}

inline std::string kernel_and_first_iso(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.game(8);
    auto h = related_codomain(cx, g);
    auto alpha = *find_option_preserving_map(g.graph(), h.graph());
    auto ker = kernel(alpha);
    if (!is_congruence(g.graph(), ker).holds || !fixtures::naive_congruence(g.graph(), ker)) {
      return "kernel is not a congruence on\n" + show(g.graph());
    }
    auto by_kernel = quotient(g.graph(), ker).graph;
    auto image = image_rulegraph(g, h.graph(), alpha).graph;
    if (!are_isomorphic(by_kernel, image).holds) {
      return "quotient by kernel differs from image for\n" + show(g.graph());
    }
  }
  return {};
}

inline std::string quotient_validity(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.dag(10);
    auto q = quotient(g, random_congruence(cx, g));
    std::vector<LabelArrow> arrows;
    for (auto [p, r] : q.graph.arrows()) arrows.emplace_back(q.graph.label(p), q.graph.label(r));
    if (!(Rulegraph::from_labels(q.graph.labels(), arrows) == q.graph) ||
        !fixtures::naive_option_preserving(g, q.graph, q.map.image) ||
        !q.map.is_surjective(q.graph.size())) {
      return "bad quotient of\n" + show(g);
    }
  }
  return {};
}

inline std::string no_vertical_collapse(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.dag(8);
    for (const auto& pi : all_congruences(g)) {
      for (const auto& block : pi.nontrivial_blocks()) {
        for (auto p : block) {
          auto sub = subpositions(g, p);
          for (auto q : block) {
            if (q != p && std::binary_search(sub.begin(), sub.end(), q)) {
              return "congruence " + pi.to_string(g) + " collapses a path in\n" + show(g);
            }
          }
        }
      }
    }
  }
  return {};
}

inline std::string min_quotient_unique(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.dag(7);
    auto m = min_quotient(g);
    if (!is_simple(m.graph).holds) return "minimum quotient not simple for\n" + show(g);
    std::size_t simple = 0;
    for (const auto& pi : fixtures::brute_force_congruences(g)) {
      auto q = quotient(g, pi).graph;
      if (!is_simple(q).holds) continue;
      ++simple;
      if (!(pi == m.relation) || !are_isomorphic(q, m.graph).holds) {
        return "another simple quotient " + pi.to_string(g) + " of\n" + show(g);
      }
    }
    if (simple != 1) return "expected exactly one simple quotient of\n" + show(g);
  }
  return {};
}

inline std::string greedy_merge_agrees(Context& cx) {
  for (int i = 0; i < cx.cases; ++i) {
    auto g = cx.dag(10);
    auto merged = fixtures::greedy_merge(g, cx.rng);
    if (!are_isomorphic(merged, min_quotient(g).graph).holds) {
      return "greedy merging disagrees on\n" + show(g);
    }
  }
  return {};
}

// Checks every map found between random gamegraph pairs; keeps going until
// at least `cases` maps have been seen.
inline std::string source_iff_surjective(Context& cx, std::size_t* maps_seen = nullptr) {
  std::size_t maps = 0, onto_count = 0;
  for (int i = 0; maps < static_cast<std::size_t>(cx.cases) || i < cx.cases; ++i) {
    auto g = cx.game(8);
    auto h = cx.size(0, 3) == 0 ? cx.game(8) : related_codomain(cx, g);
    if (h.size() > 8) continue;
    for (const auto& alpha : all_option_preserving_maps(g, h)) {
      ++maps;
      bool onto = alpha.is_surjective(h.size());
      onto_count += onto;
      if (check_source_preserving(g, h, alpha).holds != onto) {
        return "source preservation differs from surjectivity for\n" + show(g.graph()) +
               "\n" + show(h.graph());
      }
    }
  }
  if (maps_seen) *maps_seen = maps;
  if (onto_count == 0 || onto_count == maps) return "map sample is one-sided";
  return {};
}

}  // namespace props
