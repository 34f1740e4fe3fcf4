#include "impartial/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "impartial/hfset.hpp"

namespace impartial {

bool PositionMap::is_injective() const {
  std::vector<PositionId> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool PositionMap::is_surjective(std::size_t codomain_size) const {
  std::vector<bool> hit(codomain_size, false);
  for (PositionId x : image) {
    if (x < codomain_size) hit[x] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

PositionMap identity_map(std::size_t n) {
  PositionMap m;
  m.image.resize(n);
  for (PositionId i = 0; i < n; ++i) m.image[i] = i;
  return m;
}

PositionMap compose(const PositionMap& outer, const PositionMap& inner) {
  PositionMap m;
  m.image.reserve(inner.size());
  for (PositionId x : inner.image) m.image.push_back(outer(x));
  return m;
}

PositionMap inverse(const PositionMap& bijection) {
  const auto n = bijection.size();
  PositionMap m;
  m.image.assign(n, PositionId(-1));
  for (PositionId p = 0; p < n; ++p) {
    PositionId x = bijection(p);
    if (x >= n || m.image[x] != PositionId(-1)) {
      throw Error(ErrorKind::InvalidSpec, "map is not a bijection");
    }
    m.image[x] = p;
  }
  return m;
}

void require_total(const Rulegraph& from, const Rulegraph& to,
                   const PositionMap& alpha) {
  if (alpha.size() != from.size()) {
    throw Error(ErrorKind::UnknownPosition,
                "map covers " + std::to_string(alpha.size()) + " of " +
                    std::to_string(from.size()) + " domain positions");
  }
  for (PositionId p = 0; p < alpha.size(); ++p) {
    if (alpha(p) >= to.size()) {
      throw Error(ErrorKind::UnknownPosition,
                  "image of '" + from.label(p) + "' is outside the codomain",
                  {from.label(p)});
    }
  }
}

namespace {

std::vector<PositionId> mapped_options(const Rulegraph& from,
                                       const PositionMap& alpha, PositionId p) {
  std::vector<PositionId> out;
  for (PositionId q : from.options(p)) out.push_back(alpha(q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool options_injective(const Rulegraph& g) {
  std::set<std::span<const PositionId>,
           decltype([](std::span<const PositionId> a,
                       std::span<const PositionId> b) {
             return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                 b.end());
           })>
      seen;
  for (PositionId p = 0; p < g.size(); ++p) {
    if (!seen.insert(g.options(p)).second) return false;
  }
  return true;
}

// Assigns domain positions bottom-up. Once every option of p has an image,
// Opt(alpha(p)) is forced to equal alpha(Opt(p)), so the candidates for p are
// exactly the codomain positions with that option set.
class MapSearcher {
 public:
  MapSearcher(const Rulegraph& from, const Rulegraph& to, const MapSearch& opts)
      : from_(from), to_(to), opts_(opts) {
    for (PositionId x = 0; x < to.size(); ++x) {
      auto opts_x = to.options(x);
      by_options_[std::vector<PositionId>(opts_x.begin(), opts_x.end())]
          .push_back(x);
    }
  }

  std::size_t run(const std::function<bool(const PositionMap&)>& visit) {
    const auto& order = from_.bottom_up();
    const auto n = order.size();
    alpha_.image.assign(n, 0);
    used_.assign(to_.size(), false);
    if (n == 0) {
      visit(alpha_);
      return 1;
    }

    std::vector<std::vector<PositionId>> cands(n);
    std::vector<std::size_t> next(n, 0);
    std::size_t count = 0;
    std::size_t k = 0;
    bool entering = true;
    for (;;) {
      if (entering) {
        if (k == n) {
          ++count;
          if (!visit(alpha_)) return count;
          k = n - 1;
          entering = false;
          continue;
        }
        cands[k] = candidates(order[k]);
        next[k] = 0;
      } else {
        used_[alpha_(order[k])] = false;
      }
      bool placed = false;
      while (next[k] < cands[k].size()) {
        PositionId x = cands[k][next[k]++];
        if (opts_.require_injective && used_[x]) continue;
        alpha_.image[order[k]] = x;
        used_[x] = true;
        placed = true;
        break;
      }
      if (placed) {
        ++k;
        entering = true;
      } else {
        if (k == 0) return count;
        --k;
        entering = false;
      }
    }
  }

 private:
  std::vector<PositionId> candidates(PositionId p) const {
    auto it = by_options_.find(mapped_options(from_, alpha_, p));
    if (it == by_options_.end()) return {};
    std::vector<PositionId> out;
    for (PositionId x : it->second) {
      if (opts_.require_source && opts_.from_start && opts_.to_start &&
          p == *opts_.from_start && x != *opts_.to_start) {
        continue;
      }
      if (opts_.require_injective &&
          to_.parents(x).size() != from_.parents(p).size()) {
        continue;
      }
      out.push_back(x);
    }
    return out;
  }

  const Rulegraph& from_;
  const Rulegraph& to_;
  const MapSearch& opts_;
  std::map<std::vector<PositionId>, std::vector<PositionId>> by_options_;
  PositionMap alpha_;
  std::vector<bool> used_;
};

}  // namespace

OptionVerdict check_option_preserving(const Rulegraph& from, const Rulegraph& to,
                                      const PositionMap& alpha) {
  require_total(from, to, alpha);
  for (PositionId p = 0; p < from.size(); ++p) {
    auto mapped = mapped_options(from, alpha, p);
    auto actual = to.options(alpha(p));
    if (!std::equal(mapped.begin(), mapped.end(), actual.begin(), actual.end())) {
      return {false, OptionWitness{p, {actual.begin(), actual.end()},
                                   std::move(mapped)}};
    }
  }
  return {};
}

SourceVerdict check_source_preserving(const Gamegraph& from, const Gamegraph& to,
                                      const PositionMap& alpha) {
  require_total(from.graph(), to.graph(), alpha);
  PositionId image = alpha(from.start());
  return {image == to.start(), image, to.start()};
}

Gamegraph ImageGraph::gamegraph() const {
  if (!start) {
    throw Error(ErrorKind::NoSource, "image of a rulegraph map has no start");
  }
  return Gamegraph(graph);
}

ImageGraph image_rulegraph(const Rulegraph& from, const Rulegraph& to,
                           const PositionMap& alpha) {
  auto verdict = check_option_preserving(from, to, alpha);
  if (!verdict) {
    const auto& w = *verdict.witness;
    throw Error(ErrorKind::NotOptionPreserving,
                "options of '" + from.label(w.position) + "' are not preserved",
                {from.label(w.position)});
  }
  ImageGraph out;
  out.embedding = alpha.image;
  std::sort(out.embedding.begin(), out.embedding.end());
  out.embedding.erase(std::unique(out.embedding.begin(), out.embedding.end()),
                      out.embedding.end());
  std::vector<PositionId> local(to.size(), PositionId(-1));
  for (PositionId i = 0; i < out.embedding.size(); ++i) {
    local[out.embedding[i]] = i;
  }
  std::vector<std::string> labels;
  std::vector<std::vector<PositionId>> options;
  for (PositionId x : out.embedding) {
    labels.push_back(to.label(x));
    auto& opts = options.emplace_back();
    for (PositionId y : to.options(x)) {
      // Options of an image position are images, so nothing is dropped.
      opts.push_back(local[y]);
    }
  }
  out.graph = Rulegraph::from_options(std::move(labels), std::move(options));
  out.corestriction.image.reserve(alpha.size());
  for (PositionId x : alpha.image) out.corestriction.image.push_back(local[x]);
  return out;
}

ImageGraph image_rulegraph(const Gamegraph& from, const Rulegraph& to,
                           const PositionMap& alpha) {
  auto out = image_rulegraph(from.graph(), to, alpha);
  out.start = out.corestriction(from.start());
  return out;
}

Partition kernel(const PositionMap& alpha) {
  return Partition::from_block_ids(alpha.image);
}

IsoVerdict are_isomorphic(const Rulegraph& a, const Rulegraph& b) {
  if (a.size() != b.size() || a.arrow_count() != b.arrow_count()) return {};

  if (options_injective(a) && options_injective(b)) {
    // Simple graphs are determined by their sets of canonical forms.
    HfArena arena;
    auto ca = canonicalize(a, arena);
    auto cb = canonicalize(b, arena);
    std::map<HfSet, PositionId> where;
    for (PositionId x = 0; x < b.size(); ++x) where.emplace(cb[x], x);
    PositionMap m;
    for (PositionId p = 0; p < a.size(); ++p) {
      auto it = where.find(ca[p]);
      if (it == where.end()) return {};
      m.image.push_back(it->second);
    }
    return {true, std::move(m)};
  }

  MapSearch opts;
  opts.require_injective = true;
  opts.budget = a.size();
  std::optional<PositionMap> found;
  MapSearcher(a, b, opts).run([&](const PositionMap& m) {
    found = m;
    return false;
  });
  if (!found) return {};
  return {true, std::move(found)};
}

std::size_t for_each_option_preserving_map(
    const Rulegraph& from, const Rulegraph& to, const MapSearch& opts,
    const std::function<bool(const PositionMap&)>& visit) {
  if (from.size() > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "map search over " + std::to_string(from.size()) +
                    " domain positions exceeds budget " +
                    std::to_string(opts.budget));
  }
  return MapSearcher(from, to, opts).run(visit);
}

std::optional<PositionMap> find_option_preserving_map(const Rulegraph& from,
                                                      const Rulegraph& to,
                                                      const MapSearch& opts) {
  std::optional<PositionMap> found;
  for_each_option_preserving_map(from, to, opts, [&](const PositionMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<PositionMap> find_option_preserving_map(const Gamegraph& from,
                                                      const Gamegraph& to,
                                                      bool require_source,
                                                      std::size_t budget) {
  MapSearch opts;
  opts.budget = budget;
  opts.require_source = require_source;
  opts.from_start = from.start();
  opts.to_start = to.start();
  return find_option_preserving_map(from.graph(), to.graph(), opts);
}

std::vector<PositionMap> all_option_preserving_maps(const Gamegraph& from,
                                                    const Gamegraph& to,
                                                    std::size_t budget) {
  MapSearch opts;
  opts.budget = budget;
  std::vector<PositionMap> out;
  for_each_option_preserving_map(from.graph(), to.graph(), opts,
                                 [&](const PositionMap& m) {
                                   out.push_back(m);
                                   return true;
                                 });
  return out;
}

}  // namespace impartial
