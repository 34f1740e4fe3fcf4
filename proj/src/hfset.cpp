#include "impartial/hfset.hpp"

#include <algorithm>
#include <set>

namespace impartial {

std::size_t HfArena::KeyHash::operator()(
    const std::vector<std::uint32_t>& key) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ key.size();
  for (auto v : key) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

HfArena::HfArena() {
  nodes_.push_back(Node{});
  index_.emplace(std::vector<std::uint32_t>{}, 0);
}

HfSet HfArena::make(std::vector<HfSet> children) {
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  std::sort(children.begin(), children.end(),
            [this](HfSet a, HfSet b) { return compare(a, b) < 0; });

  std::vector<std::uint32_t> key;
  key.reserve(children.size());
  for (auto c : children) key.push_back(c.id);
  if (auto it = index_.find(key); it != index_.end()) return HfSet{it->second};

  Node node;
  node.rank = children.empty() ? 0 : rank(children.back()) + 1;
  node.children = std::move(children);
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  index_.emplace(std::move(key), id);
  return HfSet{id};
}

bool HfArena::contains(HfSet set, HfSet element) const {
  auto kids = children(set);
  return std::find(kids.begin(), kids.end(), element) != kids.end();
}

std::strong_ordering HfArena::compare(HfSet a, HfSet b) const {
  if (a == b) return std::strong_ordering::equal;
  const auto& x = nodes_.at(a.id);
  const auto& y = nodes_.at(b.id);
  if (x.rank != y.rank) return x.rank <=> y.rank;
  const auto n = std::min(x.children.size(), y.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.children[i] != y.children[i]) {
      return compare(x.children[i], y.children[i]);
    }
  }
  return x.children.size() <=> y.children.size();
}

std::string HfArena::to_string(HfSet s) const {
  const auto& kids = children(s);
  if (kids.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ',';
    out += to_string(kids[i]);
  }
  out += '}';
  return out;
}

namespace {

class HfParser {
 public:
  HfParser(std::string_view text, HfArena& arena) : text_(text), arena_(arena) {}

  HfSet parse_all() {
    auto s = parse_set();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  static constexpr std::string_view kEmpty = "∅";

  HfSet parse_set() {
    skip_space();
    if (text_.substr(pos_).starts_with(kEmpty)) {
      pos_ += kEmpty.size();
      return arena_.empty_set();
    }
    if (pos_ >= text_.size() || text_[pos_] != '{') fail("expected '{' or '∅'");
    ++pos_;
    std::vector<HfSet> kids;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return arena_.empty_set();
    }
    for (;;) {
      kids.push_back(parse_set());
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated set");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == '}') {
        ++pos_;
        break;
      }
      fail("expected ',' or '}'");
    }
    return arena_.make(std::move(kids));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  HfArena& arena_;
  std::size_t pos_ = 0;
};

}  // namespace

HfSet HfArena::parse(std::string_view text) {
  return HfParser(text, *this).parse_all();
}

std::vector<HfSet> canonicalize(const Rulegraph& g, HfArena& arena) {
  std::vector<HfSet> canon(g.size());
  std::vector<HfSet> kids;
  for (PositionId p : g.bottom_up()) {
    kids.clear();
    for (PositionId q : g.options(p)) kids.push_back(canon[q]);
    canon[p] = arena.make(kids);
  }
  return canon;
}

Rulegraph collection_to_rulegraph(std::span<const HfSet> collection,
                                  const HfArena& arena) {
  std::vector<HfSet> sets(collection.begin(), collection.end());
  std::sort(sets.begin(), sets.end(),
            [&](HfSet a, HfSet b) { return arena.compare(a, b) < 0; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<std::string> labels;
  std::vector<std::vector<PositionId>> options(sets.size());
  labels.reserve(sets.size());
  for (PositionId i = 0; i < sets.size(); ++i) {
    labels.push_back(arena.to_string(sets[i]));
    for (HfSet child : arena.children(sets[i])) {
      auto it = std::lower_bound(
          sets.begin(), sets.end(), child,
          [&](HfSet a, HfSet b) { return arena.compare(a, b) < 0; });
      if (it == sets.end() || *it != child) {
        auto missing = arena.to_string(child);
        throw Error(ErrorKind::NotMembershipClosed,
                    missing + " is an element of " + labels.back() +
                        " but not in the collection",
                    {missing});
      }
      options[i].push_back(static_cast<PositionId>(it - sets.begin()));
    }
  }
  return Rulegraph::from_options(std::move(labels), std::move(options));
}

}  // namespace impartial
