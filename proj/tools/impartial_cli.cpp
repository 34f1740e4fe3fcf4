#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "impartial/builders.hpp"
#include "impartial/congruence.hpp"
#include "impartial/enumeration.hpp"
#include "impartial/serialize.hpp"
#include "impartial/valuation.hpp"

using nlohmann::json;
using namespace impartial;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDocument load(const std::string& path) { return parse_graph(slurp(path)); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json labels_of(const Rulegraph& g, std::span<const PositionId> ids) {
  json out = json::array();
  for (auto p : ids) out.push_back(g.label(p));
  return out;
}

json map_json(const PositionMap& alpha, const Rulegraph& from, const Rulegraph& to) {
  return json::parse(serialize_map(alpha, from, to));
}

json partition_json(const Partition& pi, const Rulegraph& g) {
  return json::parse(serialize_partition(pi, g))["blocks"];
}

GraphDocument document_of(const Quotient& q) {
  return GraphDocument{q.graph, q.start, std::nullopt};
}

// Per-position rendering of a named valuation; terminal-labeled needs the
// document's labels.
std::vector<std::string> valuation_strings(const GraphDocument& doc,
                                           const std::string& name) {
  std::vector<std::string> out;
  const auto& g = doc.graph;
  auto numbers = [&](const std::vector<std::uint64_t>& v) {
    for (auto x : v) out.push_back(std::to_string(x));
  };
  auto outcomes = [&](const std::vector<Outcome>& v) {
    for (auto o : v) out.push_back(std::string(1, to_char(o)));
  };
  if (name == "nim") {
    numbers(nim_values(g));
  } else if (name == "outcome+") {
    outcomes(outcome_normal(g));
  } else if (name == "outcome-") {
    outcomes(outcome_misere(g));
  } else if (name == "fbd") {
    numbers(formal_birthdays(g));
  } else if (name == "mindist") {
    numbers(min_distance_to_terminal(g));
  } else if (name == "terminal-labeled") {
    if (!doc.terminal_labels) {
      throw Error(ErrorKind::LabelMismatch, "document has no terminal_labels");
    }
    outcomes(outcome_with_terminal_labels(doc.gamegraph(), *doc.terminal_labels));
  } else if (name == "block") {
    auto pi = max_congruence(g);
    for (PositionId p = 0; p < g.size(); ++p) out.push_back(std::to_string(pi.block_of(p)));
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown valuation '" + name + "'");
  }
  return out;
}

GameSpec game_spec(const std::string& game, const std::vector<std::uint32_t>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(ErrorKind::InvalidSpec, game + " takes " + std::to_string(n) +
                                              " parameter(s)");
    }
  };
  if (game == "star") {
    need(1);
    return spec::Star{params[0]};
  }
  if (game == "nim-tuple") return spec::NimTuple{params};
  if (game == "nim-multiset") return spec::NimMultiset{params};
  if (game == "wythoff") {
    need(2);
    return spec::Wythoff{params[0], params[1]};
  }
  if (game == "subtraction") {
    if (params.size() < 2) {
      throw Error(ErrorKind::InvalidSpec, "subtraction takes n followed by the allowed amounts");
    }
    return spec::Subtraction{params[0], {params.begin() + 1, params.end()}};
  }
  if (game == "grundy") {
    need(1);
    return spec::Grundy{params[0]};
  }
  if (game == "maze") {
    need(2);
    return spec::Maze{params[0], params[1]};
  }
  if (game == "m-graph") {
    need(1);
    return spec::MGraph{params[0]};
  }
  throw Error(ErrorKind::InvalidSpec, "unknown game '" + game + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Impartial games as digraphs: valuations, maps, quotients, enumeration"};
  app.require_subcommand(1);
  int status = kTrue;

  // build
  auto* build_cmd = app.add_subcommand("build", "Build a named game as a graph document");
  std::string game;
  std::vector<std::uint32_t> params;
  bool allow_large = false;
  build_cmd->add_option("game", game,
                        "star | nim-tuple | nim-multiset | wythoff | subtraction | "
                        "grundy | maze | m-graph")
      ->required();
  build_cmd->add_option("params", params, "Integer parameters");
  build_cmd->add_flag("--allow-large", allow_large, "Permit m-graph 4");
  build_cmd->callback([&] {
    BuildOptions opts;
    opts.allow_large = allow_large;
    auto built = build(game_spec(game, params), opts);
    std::cout << serialize_graph(GraphDocument{built.graph, built.start,
                                               built.terminal_labels})
              << '\n';
  });

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate a valuation on every position");
  std::string file_a, file_b, valuation = "nim";
  analyze_cmd->add_option("file", file_a)->required();
  analyze_cmd->add_option("--valuation", valuation,
                          "nim | outcome+ | outcome- | fbd | mindist | terminal-labeled");
  analyze_cmd->callback([&] {
    auto doc = load(file_a);
    auto values = valuation_strings(doc, valuation);
    json j;
    j["valuation"] = valuation;
    json per = json::object();
    for (PositionId p = 0; p < doc.graph.size(); ++p) per[doc.graph.label(p)] = values[p];
    j["values"] = per;
    if (doc.start) j["start"] = values[*doc.start];
    emit(j);
  });

  // sum
  auto* sum_cmd = app.add_subcommand("sum", "Sum of two graphs");
  sum_cmd->add_option("left", file_a)->required();
  sum_cmd->add_option("right", file_b)->required();
  sum_cmd->callback([&] {
    auto a = load(file_a);
    auto b = load(file_b);
    GraphDocument out{box_sum(a.graph, b.graph), std::nullopt, std::nullopt};
    if (a.start && b.start) out.start = *a.start * b.graph.size() + *b.start;
    std::cout << serialize_graph(out) << '\n';
  });

  // check-map
  auto* check_map_cmd = app.add_subcommand("check-map", "Check a position map");
  std::string map_file, partition_file;
  bool want_source = false;
  check_map_cmd->add_option("src", file_a)->required();
  check_map_cmd->add_option("dst", file_b)->required();
  check_map_cmd->add_option("--map", map_file)->required();
  check_map_cmd->add_flag("--source", want_source, "Also require source preservation");
  check_map_cmd->callback([&] {
    auto from = load(file_a);
    auto to = load(file_b);
    auto alpha = parse_map(slurp(map_file), from.graph, to.graph);
    auto verdict = check_option_preserving(from.graph, to.graph, alpha);
    json j;
    j["option_preserving"] = verdict.holds;
    if (!verdict) {
      const auto& w = *verdict.witness;
      j["witness"] = {{"position", from.graph.label(w.position)},
                      {"image_options", labels_of(to.graph, w.image_options)},
                      {"mapped_options", labels_of(to.graph, w.mapped_options)}};
      status = kFalse;
    } else if (want_source) {
      auto sv = check_source_preserving(from.gamegraph(), to.gamegraph(), alpha);
      j["source_preserving"] = sv.holds;
      if (!sv) {
        j["witness"] = {{"image_of_start", to.graph.label(sv.image_of_start)},
                        {"codomain_start", to.graph.label(sv.codomain_start)}};
        status = kFalse;
      }
    }
    emit(j);
  });

  // find-map
  auto* find_map_cmd = app.add_subcommand("find-map", "Search for an option preserving map");
  std::size_t budget = 16;
  find_map_cmd->add_option("src", file_a)->required();
  find_map_cmd->add_option("dst", file_b)->required();
  find_map_cmd->add_flag("--source", want_source, "Require source preservation");
  find_map_cmd->add_option("--budget", budget, "Maximum domain size");
  find_map_cmd->callback([&] {
    auto from = load(file_a);
    auto to = load(file_b);
    MapSearch opts;
    opts.budget = budget;
    if (want_source) {
      opts.require_source = true;
      opts.from_start = from.gamegraph().start();
      opts.to_start = to.gamegraph().start();
    }
    auto found = find_option_preserving_map(from.graph, to.graph, opts);
    json j;
    j["found"] = found.has_value();
    if (found) {
      j["map"] = map_json(*found, from.graph, to.graph)["map"];
    } else {
      status = kFalse;
    }
    emit(j);
  });

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism");
  iso_cmd->add_option("left", file_a)->required();
  iso_cmd->add_option("right", file_b)->required();
  iso_cmd->callback([&] {
    auto a = load(file_a);
    auto b = load(file_b);
    auto v = are_isomorphic(a.graph, b.graph);
    json j;
    j["isomorphic"] = v.holds;
    if (v) {
      j["map"] = map_json(*v.map, a.graph, b.graph)["map"];
    } else {
      j["witness"] = {{"left_positions", a.graph.size()},
                      {"right_positions", b.graph.size()},
                      {"left_arrows", a.graph.arrow_count()},
                      {"right_arrows", b.graph.arrow_count()}};
      status = kFalse;
    }
    emit(j);
  });

  // check-congruence
  auto* check_con_cmd = app.add_subcommand("check-congruence", "Check a partition");
  check_con_cmd->add_option("file", file_a)->required();
  check_con_cmd->add_option("--partition", partition_file)->required();
  check_con_cmd->callback([&] {
    auto doc = load(file_a);
    auto pi = parse_partition(slurp(partition_file), doc.graph);
    auto v = is_congruence(doc.graph, pi);
    json j;
    j["congruence"] = v.holds;
    if (!v) {
      auto [p, q] = *v.witness;
      j["witness"] = {doc.graph.label(p), doc.graph.label(q)};
      status = kFalse;
    }
    emit(j);
  });

  // quotient
  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a congruence");
  quotient_cmd->add_option("file", file_a)->required();
  quotient_cmd->add_option("--partition", partition_file)->required();
  quotient_cmd->callback([&] {
    auto doc = load(file_a);
    auto pi = parse_partition(slurp(partition_file), doc.graph);
    auto q = doc.start ? quotient(doc.gamegraph(), pi) : quotient(doc.graph, pi);
    std::cout << serialize_graph(document_of(q)) << '\n';
  });

  // minquot
  auto* minquot_cmd = app.add_subcommand("minquot", "Minimum quotient");
  minquot_cmd->add_option("file", file_a)->required();
  minquot_cmd->callback([&] {
    auto doc = load(file_a);
    auto q = doc.start ? min_quotient(doc.gamegraph()) : min_quotient(doc.graph);
    std::cout << serialize_graph(document_of(q)) << '\n';
  });

  // con-lattice
  auto* lattice_cmd = app.add_subcommand("con-lattice", "All congruences with meet and join");
  std::size_t lattice_budget = 10;
  lattice_cmd->add_option("file", file_a)->required();
  lattice_cmd->add_option("--budget", lattice_budget, "Maximum number of positions");
  lattice_cmd->callback([&] {
    auto doc = load(file_a);
    auto lat = con_lattice(doc.graph, lattice_budget);
    json j;
    json elements = json::array();
    for (const auto& e : lat.elements) elements.push_back(partition_json(e, doc.graph));
    j["elements"] = elements;
    j["meet"] = lat.meet;
    j["join"] = lat.join;
    j["bottom"] = lat.bottom;
    j["top"] = lat.top;
    emit(j);
  });

  // emul
  auto* emul_cmd = app.add_subcommand("emul", "Decide emulational equivalence");
  emul_cmd->add_option("left", file_a)->required();
  emul_cmd->add_option("right", file_b)->required();
  emul_cmd->callback([&] {
    auto a = load(file_a);
    auto b = load(file_b);
    auto qa = min_quotient(a.graph);
    auto qb = min_quotient(b.graph);
    auto v = are_isomorphic(qa.graph, qb.graph);
    json j;
    j["equivalent"] = v.holds;
    if (v) {
      j["map"] = map_json(*v.map, qa.graph, qb.graph)["map"];
    } else {
      j["witness"] = {{"left_min_quotient_positions", qa.graph.size()},
                      {"right_min_quotient_positions", qb.graph.size()}};
      status = kFalse;
    }
    emit(j);
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Count or list simple rulegraphs");
  std::optional<std::uint32_t> by_fbd;
  std::optional<std::size_t> by_positions;
  std::optional<std::size_t> enum_budget;
  bool gamegraphs = false, stream = false, formula = false;
  auto* fbd_opt = enum_cmd->add_option("--by-fbd", by_fbd, "Formal birthday d");
  auto* pos_opt = enum_cmd->add_option("--by-positions", by_positions, "Number of positions n");
  fbd_opt->excludes(pos_opt);
  enum_cmd->add_flag("--gamegraphs", gamegraphs, "Only graphs with a single source");
  enum_cmd->add_flag("--stream", stream, "Print each graph as one JSON line");
  enum_cmd->add_flag("--formula", formula, "With --by-fbd: x_d from the index recursion");
  enum_cmd->add_option("--budget", enum_budget, "Override the size limit");
  enum_cmd->callback([&] {
    if (!by_fbd && !by_positions) {
      throw CLI::ValidationError("enumerate", "one of --by-fbd or --by-positions is required");
    }
    auto line = [](const Rulegraph& g) {
      std::cout << json::parse(serialize_graph(g)).dump() << '\n';
      return true;
    };
    if (by_positions) {
      const auto n = *by_positions;
      if (stream) {
        stream_simple_rulegraphs(n, gamegraphs, line,
                                 enum_budget.value_or(kDefaultStreamBudget));
      } else {
        auto c = count_simple_rulegraphs(n, enum_budget.value_or(kDefaultCountBudget));
        std::cout << (gamegraphs ? c.gamegraphs : c.rulegraphs) << '\n';
      }
      return;
    }
    const auto d = *by_fbd;
    if (formula) {
      if (gamegraphs) {
        std::cout << tower2(d) - (d == 0 ? 0 : tower2(d - 1)) << '\n';
      } else {
        std::cout << x_total(d, enum_budget ? static_cast<std::uint32_t>(*enum_budget) : 4)
                  << '\n';
      }
    } else if (stream) {
      stream_by_fbd(d, gamegraphs, line,
                    enum_budget ? static_cast<std::uint32_t>(*enum_budget) : kDefaultFbdBudget);
    } else {
      std::cout << count_by_fbd(d, gamegraphs,
                                enum_budget ? static_cast<std::uint32_t>(*enum_budget)
                                            : kDefaultFbdBudget)
                << '\n';
    }
  });

  // export
  auto* export_cmd = app.add_subcommand("export", "Render a graph document");
  bool dot = false;
  std::string annotate;
  export_cmd->add_option("file", file_a)->required();
  export_cmd->add_flag("--dot", dot, "Graphviz output")->required();
  export_cmd->add_option("--annotate", annotate,
                         "nim | outcome+ | outcome- | fbd | mindist | terminal-labeled | block");
  export_cmd->callback([&] {
    auto doc = load(file_a);
    std::optional<Annotation> ann;
    if (!annotate.empty()) ann = Annotation{annotate, valuation_strings(doc, annotate)};
    std::cout << export_dot(doc.graph, ann);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return status;
}
