// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "impartial/enumeration.hpp"
#include "impartial/hfset.hpp"
#include "property_checks.hpp"

using namespace impartial;

namespace {

using Check = std::function<std::string()>;

#define EXPECT(cond, msg)          \
  do {                             \
    if (!(cond)) return (msg);     \
  } while (0)

std::string ul(const mpz_class& x) { return x.get_str(); }

// Sorted canonical forms of the sources; identifies a simple rulegraph up to
// isomorphism.
std::string fingerprint(const Rulegraph& g) {
  HfArena arena;
  auto canon = canonicalize(g, arena);
  std::vector<std::string> tops;
  for (auto s : sources(g)) tops.push_back(arena.to_string(canon[s]));
  std::sort(tops.begin(), tops.end());
  std::string out;
  for (auto& t : tops) out += t + ";";
  return out;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(IMPARTIAL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// ---- 1 ------------------------------------------------------------------

std::string by_positions() {
  const std::vector<std::uint64_t> rule{1, 1, 2, 9, 88, 1802, 75598};
  const std::vector<std::uint64_t> game{1, 1, 2, 8, 68, 1248, 48640};
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 7; ++n) {
    auto c = count_simple_rulegraphs(n);
    EXPECT(c.rulegraphs == rule[n - 1],
           "n=" + std::to_string(n) + " rulegraphs " + std::to_string(c.rulegraphs));
    EXPECT(c.gamegraphs == game[n - 1],
           "n=" + std::to_string(n) + " gamegraphs " + std::to_string(c.gamegraphs));
    EXPECT(c == kernels::count_extensional_serial(n), "serial and parallel counts differ");
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT(secs < 300, "n<=7 took " + std::to_string(secs) + "s");
  return {};
}

// ---- 2 ------------------------------------------------------------------

std::string by_birthday() {
  const std::vector<long> want{1, 1, 3, 4125};
  for (std::uint32_t d = 0; d <= 3; ++d) {
    EXPECT(x_total(d) == want[d], "x_" + std::to_string(d) + " = " + ul(x_total(d)));
    EXPECT(index_table(d).total(d) == want[d], "index table total differs at d=" + std::to_string(d));
  }
  auto digits = x_total(4).get_str().size();
  EXPECT(digits == 19724, "x_4 has " + std::to_string(digits) + " digits");

  std::set<std::string> seen;
  std::size_t count = 0;
  bool ok = true;
  stream_by_fbd(3, false, [&](const Rulegraph& g) {
    ++count;
    ok = ok && is_simple(g).holds && formal_birthday(g) == 3;
    seen.insert(fingerprint(g));
    return true;
  });
  EXPECT(ok, "a generated graph is not simple or has the wrong birthday");
  EXPECT(count == 4125, "generated " + std::to_string(count));
  EXPECT(seen.size() == 4125, "only " + std::to_string(seen.size()) + " isomorphism classes");
  return {};
}

// ---- 3 ------------------------------------------------------------------

std::vector<Rulegraph> census() {
  using A = std::vector<LabelArrow>;
  std::vector<Rulegraph> out;
  out.push_back(fixtures::graph({"a"}, {}));
  out.push_back(fixtures::graph({"a", "b"}, {{"a", "b"}}));
  out.push_back(fixtures::graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  out.push_back(fixtures::graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  const A chain{{"a", "b"}, {"b", "c"}, {"c", "d"}};
  const std::vector<A> extras{{},
                              {{"a", "d"}},
                              {{"a", "c"}},
                              {{"a", "c"}, {"a", "d"}},
                              {{"b", "d"}},
                              {{"b", "d"}, {"a", "d"}},
                              {{"b", "d"}, {"a", "c"}},
                              {{"a", "c"}, {"a", "d"}, {"b", "d"}}};
  for (const auto& e : extras) {
    A arrows = chain;
    arrows.insert(arrows.end(), e.begin(), e.end());
    out.push_back(fixtures::graph({"a", "b", "c", "d"}, arrows));
  }
  const A diamond1{{"a", "b1"}, {"a", "b2"}, {"b1", "c"}, {"b2", "c"}, {"b1", "d"}, {"c", "d"}};
  const A diamond2{{"a", "b1"}, {"a", "b2"}, {"b1", "c"}, {"b2", "c"},
                   {"a", "c"},  {"b2", "d"}, {"c", "d"}};
  for (const auto& base : {diamond1, diamond2}) {
    for (bool shortcut : {false, true}) {
      A arrows = base;
      if (shortcut) arrows.emplace_back("a", "d");
      out.push_back(fixtures::graph({"a", "b1", "b2", "c", "d"}, arrows));
    }
  }
  return out;
}

std::string gamegraph_census() {
  EXPECT(tower2(3) == 16, "tower2(3) = " + ul(tower2(3)));
  std::set<std::string> generated;
  std::size_t count = 0;
  for (std::uint32_t d = 0; d <= 3; ++d) {
    stream_by_fbd(d, true, [&](const Rulegraph& g) {
      ++count;
      generated.insert(fingerprint(g));
      return true;
    });
  }
  EXPECT(count == 16, "generated " + std::to_string(count) + " gamegraphs");
  std::set<std::string> figure;
  for (const auto& g : census()) {
    EXPECT(is_simple(g).holds && sources(g).size() == 1, "census graph is not a simple gamegraph");
    figure.insert(fingerprint(g));
  }
  EXPECT(figure.size() == 16, "census has duplicates");
  EXPECT(figure == generated, "generated set differs from the census");
  return {};
}

// ---- 4 ------------------------------------------------------------------

std::string extremes() {
  for (std::uint32_t d = 0; d <= 3; ++d) {
    const auto want_min = count_min_positions(d);
    mpz_class formula;
    mpz_ui_pow_ui(formula.get_mpz_t(), 2, d * (d + 1) / 2 - d);
    EXPECT(want_min == formula, "formula mismatch at d=" + std::to_string(d));
    const auto top = tower2(d).get_ui();
    std::uint64_t smallest = 0;
    std::vector<Rulegraph> biggest;
    stream_by_fbd(d, false, [&](const Rulegraph& g) {
      if (g.size() == d + 1) ++smallest;
      if (g.size() == top) biggest.push_back(g);
      return true;
    });
    EXPECT(mpz_class(static_cast<unsigned long>(smallest)) == want_min,
           "d=" + std::to_string(d) + ": " + std::to_string(smallest) + " smallest graphs");
    EXPECT(biggest.size() == 1, "d=" + std::to_string(d) + ": " +
                                    std::to_string(biggest.size()) + " largest graphs");
    EXPECT(are_isomorphic(biggest[0], build(spec::MGraph{d}).graph).holds,
           "largest graph is not M^" + std::to_string(d));
  }
  return {};
}

// ---- 5 ------------------------------------------------------------------

std::string figures() {
  {
    auto nm = tuple_to_multiset({3, 2});
    EXPECT(nm.from.size() == 12 && nm.to.size() == 9, "NIM tuple/multiset sizes");
    EXPECT(check_option_preserving(nm.from.graph(), nm.to.graph(), nm.map).holds &&
               check_source_preserving(nm.from, nm.to, nm.map).holds,
           "NIM map not option and source preserving");
  }
  {
    auto nm = wythoff_to_subtraction(1, 2);
    EXPECT(nm.from.size() == 5 && nm.to.size() == 4, "Wythoff/subtraction sizes");
    EXPECT(check_option_preserving(nm.from.graph(), nm.to.graph(), nm.map).holds &&
               check_source_preserving(nm.from, nm.to, nm.map).holds,
           "Wythoff map not option and source preserving");
  }
  {
    auto nm = grundy_drop_small_heaps(7);
    const auto& h = nm.to.graph();
    EXPECT(nm.from.size() == 14 && h.size() == 8, "Grundy sizes");
    EXPECT(check_option_preserving(nm.from.graph(), h, nm.map).holds, "Grundy map");
    auto beta = quotient(h, Partition::from_blocks(h.size(), {{h.at("⟦4⟧"), h.at("⟦3,3⟧")}}));
    EXPECT(check_option_preserving(nm.from.graph(), beta.graph, compose(beta.map, nm.map)).holds,
           "composition with the second identification");
  }
  {
    auto built = build(spec::Maze{3, 4});
    auto g = built.gamegraph();
    auto out = outcome_with_terminal_labels(g, *built.terminal_labels);
    const std::map<std::string, char> want{
        {"(0,0)", 'P'}, {"(1,0)", 'N'}, {"(2,0)", 'N'}, {"(3,0)", 'P'},
        {"(0,1)", 'N'}, {"(1,1)", 'P'}, {"(2,1)", 'N'}, {"(3,1)", 'P'},
        {"(0,2)", 'N'}, {"(1,2)", 'N'}, {"(2,2)", 'N'}};
    EXPECT(g.size() == 11, "maze size");
    for (auto& [label, o] : want) {
      EXPECT(to_char(out[g.graph().at(label)]) == o, "maze outcome at " + label);
    }
  }
  {
    auto r = fixtures::six_position_r();
    auto lat = con_lattice(r);
    std::set<std::string> got;
    for (auto& e : lat.elements) got.insert(e.to_string(r));
    EXPECT(got == (std::set<std::string>{"Δ", "1,2", "5,6", "1,2|5,6", "3,4|5,6", "1,2|3,4|5,6"}),
           "Con(R) differs");
    auto d = Partition::from_blocks(r.size(), {{r.at("5"), r.at("6")}});
    auto rd = quotient(r, d);
    EXPECT(rd.graph.size() == 5, "R/56 size");
    auto lat_d = con_lattice(rd.graph);
    EXPECT(lat_d.size() == 4, "Con(R/56) size");
    std::set<std::size_t> hit;
    for (auto& c : lat.elements) {
      if (!d.refines(c)) continue;
      auto idx = lat_d.index_of(pushforward_congruence(r, d, c));
      EXPECT(idx.has_value(), "pushforward is not a congruence of R/56");
      hit.insert(*idx);
    }
    EXPECT(hit.size() == lat_d.size(), "interval correspondence is not a bijection");
  }
  {
    auto s = box_sum(build(spec::Star{1}).gamegraph(), build(spec::Star{2}).gamegraph());
    auto q = min_quotient(s);
    EXPECT(s.size() == 6 && s.graph().arrow_count() == 9, "star sum shape");
    EXPECT(q.graph.size() == 5 && q.graph.arrow_count() == 7, "star sum minimum quotient shape");
  }
  {
    auto g = fixtures::emul_g();
    auto h = fixtures::emul_h();
    EXPECT(fixtures::brute_force_maps(g, h).empty() && fixtures::brute_force_maps(h, g).empty(),
           "exhaustive search found a map between G and H");
    EXPECT(!find_option_preserving_map(g, h) && !find_option_preserving_map(h, g),
           "map search found a map between G and H");
    EXPECT(emulationally_equivalent(g, h).holds, "G and H not emulationally equivalent");
  }
  EXPECT(are_isomorphic(min_quotient(fixtures::three_layer()).graph, fixtures::path(3)).holds,
         "three-layer graph does not minimize to a path");
  {
    HfArena arena;
    auto star2 = build(spec::Star{2}).gamegraph();
    auto canon = canonicalize(star2.graph(), arena);
    EXPECT(arena.to_string(canon[star2.start()]) == "{∅,{∅}}", "star two canonical form");
  }
  return {};
}

// ---- 6, 7 ---------------------------------------------------------------

std::string properties() {
  using Fn = std::string (*)(props::Context&);
  const std::vector<std::pair<const char*, Fn>> suite{
      {"nim-sum", props::nim_sum_law},
      {"P iff nim 0", props::p_iff_nim_zero},
      {"valuation invariance", props::valuation_invariance},
      {"kernel / first isomorphism", props::kernel_and_first_iso},
      {"quotient validity", props::quotient_validity},
      {"no vertical collapse", props::no_vertical_collapse},
      {"unique simple quotient", props::min_quotient_unique},
      {"greedy merge", props::greedy_merge_agrees}};
  std::uint64_t seed = 0xacce97;
  for (auto [name, fn] : suite) {
    props::Context cx(seed++);
    auto failure = fn(cx);
    EXPECT(failure.empty(), std::string(name) + ": " + failure);
  }
  return {};
}

std::string source_surjective() {
  props::Context cx(0xacce97 + 100);
  std::size_t maps = 0;
  auto failure = props::source_iff_surjective(cx, &maps);
  EXPECT(failure.empty(), failure);
  EXPECT(maps >= 1000, "only " + std::to_string(maps) + " maps checked");
  return {};
}

// ---- 8 ------------------------------------------------------------------

std::string cli_round_trip() {
  const std::vector<std::pair<std::string, GameSpec>> games{
      {"star 3", spec::Star{3}},
      {"nim-tuple 3 2", spec::NimTuple{{3, 2}}},
      {"nim-multiset 3 2", spec::NimMultiset{{3, 2}}},
      {"wythoff 1 2", spec::Wythoff{1, 2}},
      {"subtraction 3 1 2", spec::Subtraction{3, {1, 2}}},
      {"grundy 7", spec::Grundy{7}},
      {"maze 3 4", spec::Maze{3, 4}},
      {"m-graph 3", spec::MGraph{3}}};
  for (const auto& [args, game] : games) {
    auto b = build(game);
    GraphDocument doc{b.graph, b.start, b.terminal_labels};
    auto text = serialize_graph(doc);
    EXPECT(parse_graph(text) == doc, "library round trip fails for " + args);
    auto r = run("build " + args);
    EXPECT(r.status == 0, "`build " + args + "` exited " + std::to_string(r.status));
    EXPECT(parse_graph(r.out) == doc, "CLI output differs for " + args);
  }
  auto r = run("enumerate --by-positions 7");
  EXPECT(r.status == 0, "enumerate exited " + std::to_string(r.status));
  EXPECT(r.out == "75598\n", "enumerate printed " + r.out);
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"1 enumeration by positions matches Table 1 for n=1..7", by_positions},
      {"2 enumeration by formal birthday: x_0..x_3, x_4 digits, 4125 graphs", by_birthday},
      {"3 tower2(3)=16 and the 16 simple gamegraphs of birthday <= 3", gamegraph_census},
      {"4 fewest and most positions per birthday", extremes},
      {"5 figure golden values", figures},
      {"6 randomized property suites", properties},
      {"7 source preserving iff surjective", source_surjective},
      {"8 CLI round trip and enumerate", cli_round_trip}};
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    std::string failure;
    auto t0 = std::chrono::steady_clock::now();
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty()) {
      std::printf("PASS  %s  (%.0f ms)\n", name.c_str(), ms);
    } else {
      std::printf("FAIL  %s: %s\n", name.c_str(), failure.c_str());
      ++failed;
    }
  }
  return failed;
}
