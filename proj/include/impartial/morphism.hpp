#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "impartial/graph.hpp"
#include "impartial/partition.hpp"

namespace impartial {

// A total function from the positions of one graph to those of another.
// image[p] is the image of domain position p.
struct PositionMap {
  std::vector<PositionId> image;

  PositionId operator()(PositionId p) const { return image.at(p); }
  std::size_t size() const noexcept { return image.size(); }
  bool is_injective() const;
  bool is_surjective(std::size_t codomain_size) const;

  friend bool operator==(const PositionMap&, const PositionMap&) = default;
};

PositionMap identity_map(std::size_t n);

// (outer ∘ inner)(p) = outer(inner(p)).
PositionMap compose(const PositionMap& outer, const PositionMap& inner);

// Requires a bijection onto 0..size()-1; throws InvalidSpec otherwise.
PositionMap inverse(const PositionMap& bijection);

// Throws UnknownPosition unless alpha is total from `from` into `to`.
void require_total(const Rulegraph& from, const Rulegraph& to,
                   const PositionMap& alpha);

struct OptionWitness {
  PositionId position;                    // p in the domain
  std::vector<PositionId> image_options;  // Opt(alpha(p)) in the codomain
  std::vector<PositionId> mapped_options; // alpha(Opt(p))
};

struct OptionVerdict {
  bool holds = true;
  std::optional<OptionWitness> witness;
  explicit operator bool() const noexcept { return holds; }
};

OptionVerdict check_option_preserving(const Rulegraph& from, const Rulegraph& to,
                                      const PositionMap& alpha);

struct SourceVerdict {
  bool holds = true;
  PositionId image_of_start = 0;
  PositionId codomain_start = 0;
  explicit operator bool() const noexcept { return holds; }
};

SourceVerdict check_source_preserving(const Gamegraph& from, const Gamegraph& to,
                                      const PositionMap& alpha);

// The subgraph of the codomain induced by the image of alpha.
struct ImageGraph {
  Rulegraph graph;
  std::vector<PositionId> embedding;  // image position -> codomain position
  PositionMap corestriction;          // domain position -> image position
  std::optional<PositionId> start;    // set when the domain is a gamegraph

  Gamegraph gamegraph() const;
};

// Throws NotOptionPreserving.
ImageGraph image_rulegraph(const Rulegraph& from, const Rulegraph& to,
                           const PositionMap& alpha);
ImageGraph image_rulegraph(const Gamegraph& from, const Rulegraph& to,
                           const PositionMap& alpha);

Partition kernel(const PositionMap& alpha);

struct IsoVerdict {
  bool holds = false;
  std::optional<PositionMap> map;  // bijective, option preserving
  explicit operator bool() const noexcept { return holds; }
};

IsoVerdict are_isomorphic(const Rulegraph& a, const Rulegraph& b);

struct MapSearch {
  std::size_t budget = 16;  // maximum domain size
  bool require_source = false;
  bool require_injective = false;
  std::optional<PositionId> from_start;
  std::optional<PositionId> to_start;
};

// Calls visit for every option preserving map satisfying `opts`, stopping
// early when visit returns false. Returns the number of maps visited.
// Throws BudgetExceeded when the domain exceeds opts.budget.
std::size_t for_each_option_preserving_map(
    const Rulegraph& from, const Rulegraph& to, const MapSearch& opts,
    const std::function<bool(const PositionMap&)>& visit);

std::optional<PositionMap> find_option_preserving_map(const Rulegraph& from,
                                                      const Rulegraph& to,
                                                      const MapSearch& opts = {});

// Gamegraph form; require_source pins start to start.
std::optional<PositionMap> find_option_preserving_map(const Gamegraph& from,
                                                      const Gamegraph& to,
                                                      bool require_source,
                                                      std::size_t budget = 16);

std::vector<PositionMap> all_option_preserving_maps(const Gamegraph& from,
                                                    const Gamegraph& to,
                                                    std::size_t budget = 16);

}  // namespace impartial
