#include "impartial/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "impartial/hfset.hpp"
#include "impartial/kernels.hpp"

namespace impartial {

namespace {

std::vector<std::uint32_t> option_classes(const Rulegraph& g, const Partition& pi,
                                          PositionId p) {
  std::vector<std::uint32_t> out;
  for (PositionId q : g.options(p)) out.push_back(pi.block_of(q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_congruence(const Rulegraph& g, const Partition& pi) {
  if (pi.size() != g.size()) {
    throw Error(ErrorKind::NotACongruence,
                "partition size does not match the graph");
  }
  auto verdict = is_congruence(g, pi);
  if (!verdict) {
    auto [p, q] = *verdict.witness;
    throw Error(ErrorKind::NotACongruence,
                "'" + g.label(p) + "' and '" + g.label(q) +
                    "' are related but reach different classes",
                {g.label(p), g.label(q)});
  }
}

std::string block_label(const Rulegraph& g, const std::vector<PositionId>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ',';
    out += g.label(block[i]);
  }
  return out + "}";
}

// Union-find over position ids.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

PairVerdict is_congruence(const Rulegraph& g, const Partition& pi) {
  for (const auto& block : pi.blocks()) {
    if (block.size() < 2) continue;
    auto first = option_classes(g, pi, block.front());
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (option_classes(g, pi, block[i]) != first) {
        return {false, std::make_pair(block.front(), block[i])};
      }
    }
  }
  return {};
}

Gamegraph Quotient::gamegraph() const {
  if (!start) {
    throw Error(ErrorKind::NoSource, "quotient of a rulegraph has no start");
  }
  return Gamegraph(graph);
}

Quotient quotient(const Rulegraph& g, const Partition& pi) {
  require_congruence(g, pi);
  Quotient out;
  out.relation = pi;
  out.map.image = pi.block_ids();
  std::vector<std::string> labels;
  std::vector<std::vector<PositionId>> options(pi.block_count());
  for (const auto& block : pi.blocks()) labels.push_back(block_label(g, block));
  for (PositionId p = 0; p < g.size(); ++p) {
    for (PositionId q : g.options(p)) {
      options[pi.block_of(p)].push_back(pi.block_of(q));
    }
  }
  out.graph = Rulegraph::from_options(std::move(labels), std::move(options));
  return out;
}

Quotient quotient(const Gamegraph& g, const Partition& pi) {
  auto out = quotient(g.graph(), pi);
  out.start = out.map(g.start());
  return out;
}

Partition max_congruence(const Rulegraph& g) {
  HfArena arena;
  auto canon = canonicalize(g, arena);
  std::vector<std::uint32_t> ids;
  ids.reserve(canon.size());
  for (auto h : canon) ids.push_back(h.id);
  return Partition::from_block_ids(ids);
}

Quotient min_quotient(const Rulegraph& g) {
  return quotient(g, max_congruence(g));
}

Quotient min_quotient(const Gamegraph& g) {
  return quotient(g, max_congruence(g.graph()));
}

PairVerdict is_simple(const Rulegraph& g) {
  std::map<std::vector<PositionId>, PositionId> seen;
  for (PositionId p = 0; p < g.size(); ++p) {
    auto opts = g.options(p);
    auto [it, fresh] =
        seen.emplace(std::vector<PositionId>(opts.begin(), opts.end()), p);
    if (!fresh) return {false, std::make_pair(it->second, p)};
  }
  return {};
}

IsoVerdict emulationally_equivalent(const Rulegraph& a, const Rulegraph& b) {
  return are_isomorphic(min_quotient(a).graph, min_quotient(b).graph);
}

Partition meet(const Rulegraph& g, const Partition& a, const Partition& b) {
  require_congruence(g, a);
  require_congruence(g, b);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pairs;
  std::vector<std::uint32_t> ids(g.size());
  for (PositionId p = 0; p < g.size(); ++p) {
    auto key = std::make_pair(a.block_of(p), b.block_of(p));
    ids[p] = pairs.emplace(key, static_cast<std::uint32_t>(pairs.size()))
                 .first->second;
  }
  // The intersection itself can fail to be a congruence (two positions may
  // agree on option classes under a and under b for different reasons).
  return largest_congruence_below(g, Partition::from_block_ids(ids));
}

Partition largest_congruence_below(const Rulegraph& g, const Partition& pi) {
  Partition current = pi;
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> keys;
    std::vector<std::uint32_t> ids(g.size());
    for (PositionId p = 0; p < g.size(); ++p) {
      auto key = std::make_pair(current.block_of(p), option_classes(g, current, p));
      ids[p] = keys.emplace(std::move(key), static_cast<std::uint32_t>(keys.size()))
                   .first->second;
    }
    auto next = Partition::from_block_ids(ids);
    if (next.block_count() == current.block_count()) return next;
    current = std::move(next);
  }
}

Partition join(const Rulegraph& g, const Partition& a, const Partition& b) {
  require_congruence(g, a);
  require_congruence(g, b);
  Components uf(g.size());
  for (const auto* pi : {&a, &b}) {
    for (const auto& block : pi->blocks()) {
      for (PositionId p : block) uf.unite(block.front(), p);
    }
  }
  std::vector<std::uint32_t> ids(g.size());
  for (PositionId p = 0; p < g.size(); ++p) ids[p] = uf.find(p);
  return Partition::from_block_ids(ids);
}

Partition pushforward_congruence(const Rulegraph& g, const Partition& d,
                                 const Partition& c) {
  require_congruence(g, d);
  require_congruence(g, c);
  if (!d.refines(c)) {
    throw Error(ErrorKind::NotRefinement,
                d.to_string(g) + " does not refine " + c.to_string(g));
  }
  // Position k of g/d is block k of d; its class under c/d is the c-block of
  // any member.
  std::vector<std::uint32_t> ids(d.block_count());
  for (std::size_t k = 0; k < d.block_count(); ++k) {
    ids[k] = c.block_of(d.blocks()[k].front());
  }
  return Partition::from_block_ids(ids);
}

std::optional<std::size_t> CongruenceLattice::index_of(const Partition& pi) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == pi) return i;
  }
  return std::nullopt;
}

std::vector<Partition> all_congruences(const Rulegraph& g, std::size_t budget) {
  if (g.size() > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "congruence lattice of " + std::to_string(g.size()) +
                    " positions exceeds budget " + std::to_string(budget));
  }
  // Every congruence refines the maximum one. Positions related by the
  // maximum congruence share a birthday, so none is a proper subposition of
  // another and the vertical-collapse condition needs no separate filter.
  auto candidates = kernels::refinements(max_congruence(g));
  auto flags = kernels::scan_congruences_parallel(g, candidates);

  std::vector<Partition> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (flags[i]) out.push_back(std::move(candidates[i]));
  }
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a.block_ids() < b.block_ids();
  });
  return out;
}

CongruenceLattice con_lattice(const Rulegraph& g, std::size_t budget,
                              std::size_t max_elements) {
  CongruenceLattice lat;
  lat.elements = all_congruences(g, budget);
  if (lat.elements.size() > max_elements) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(lat.elements.size()) +
                    " congruences exceed the table limit " + std::to_string(max_elements));
  }

  const auto m = lat.elements.size();
  std::map<std::vector<std::uint32_t>, std::size_t> where;
  for (std::size_t i = 0; i < m; ++i) where[lat.elements[i].block_ids()] = i;
  lat.leq.assign(m, std::vector<bool>(m, false));
  lat.meet.assign(m, std::vector<std::size_t>(m, 0));
  lat.join.assign(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto& a = lat.elements[i];
      const auto& b = lat.elements[j];
      lat.leq[i][j] = a.refines(b);
      lat.leq[j][i] = b.refines(a);
      lat.meet[i][j] = lat.meet[j][i] = where.at(meet(g, a, b).block_ids());
      lat.join[i][j] = lat.join[j][i] = where.at(join(g, a, b).block_ids());
    }
  }
  lat.bottom = 0;
  lat.top = m - 1;
  return lat;
}

}  // namespace impartial
