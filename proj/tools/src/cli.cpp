#include "ggx/tools/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggx/error.hpp"
#include "ggx/graph_io.hpp"
#include "ggx/groups.hpp"
#include "ggx/perfect.hpp"
#include "ggx/power_graphs.hpp"
#include "ggx/reconstruct.hpp"
#include "ggx/tools/corpus.hpp"
#include "ggx/tools/suites.hpp"

namespace ggx::tools {

namespace {

using nlohmann::ordered_json;

constexpr const char* kModule = "cli";

// Large enough for S8.
constexpr std::size_t kCliGraphCap = kVerdictGraphCap;

[[noreturn]] void usage(const std::string& why) { throw Error(kModule, ErrorCode::kInvalidArgument, why); }

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') usage(std::string(what) + " must be a non-negative integer");
  return value;
}

// Flag first, then the environment, then the default.
std::uint64_t knob(const CLI::Option* flag, std::uint64_t flag_value, const char* env, std::uint64_t fallback) {
  if (flag->count() > 0) return flag_value;
  if (const char* value = std::getenv(env); value != nullptr && *value != '\0') return parse_count(value, env);
  return fallback;
}

ordered_json labels_of(const FiniteGroup& group, const std::vector<Vertex>& members) {
  ordered_json out = ordered_json::array();
  for (const Vertex v : members) out.push_back(group.label(v));
  return out;
}

ordered_json type_json(const ClassType& type) {
  if (!type.complex) return "simple";
  return ordered_json{{"complex", {{"p", type.prime}, {"r", type.r}, {"s", type.s}}}};
}

std::vector<std::string> split_cycle(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ';')) {
    const auto first = current.find_first_not_of(" \t");
    const auto last = current.find_last_not_of(" \t");
    if (first == std::string::npos) usage("empty element in --cycle");
    out.push_back(current.substr(first, last - first + 1));
  }
  if (out.empty()) usage("--cycle lists no elements");
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump() + '\n'; }

template <class G>
std::string render(const G& g, bool dot, bool csv) {
  if (dot) return to_dot(g);
  if (csv) return to_csv(g);
  return to_json(g) + '\n';
}

Graph read_graph(const std::string& path) {
  auto any = graph_from_json(read_text_file(path));
  if (auto* g = std::get_if<Graph>(&any)) return std::move(*g);
  throw Error("graphs", ErrorCode::kBadGraphFile, path + " holds a digraph, expected a graph");
}

// Writes to --out when given, otherwise returns the payload for stdout.
std::string emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) return payload;
  write_text_file(out_path, payload);
  return {};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;

  CLI::App app{"Power graphs, enhanced power graphs and their perfectness", "ggx"};
  app.require_subcommand(1);

  std::string spec, kind = "enhanced", in_path, out_path, file, cycle, suite, corpus_path;
  bool dot = false, csv = false;
  std::uint64_t budget = 0, jobs = 1, length = 0;
  std::function<int()> action;

  auto add_format_flags = [&](CLI::App* cmd) {
    auto* d = cmd->add_flag("--dot", dot, "Graphviz output");
    auto* c = cmd->add_flag("--csv", csv, "Edge list with a source,target header");
    d->excludes(c);
  };
  struct Knobs {
    CLI::Option* budget = nullptr;
    CLI::Option* jobs = nullptr;
  };
  auto add_knobs = [&](CLI::App* cmd) {
    return Knobs{cmd->add_option("--budget", budget, "Hole-search step budget (env GGX_BUDGET)"),
                 cmd->add_option("--jobs", jobs, "Worker threads (env GGX_JOBS)")};
  };

  auto* group_cmd = app.add_subcommand("group", "Group structure")->require_subcommand(1);
  auto* info = group_cmd->add_subcommand("info", "Order, element-order census and Sylow report");
  info->add_option("spec", spec, "Group spec, e.g. S5 or C30xC30")->required();
  info->callback([&] {
    action = [&] {
      const auto group = build_group(spec);
      ordered_json census = ordered_json::array();
      for (const auto& [order, count] : order_census(group)) census.push_back({{"order", order}, {"count", count}});
      ordered_json sylow = ordered_json::array();
      for (const auto& r : sylow_report(group).records) {
        sylow.push_back({{"prime", r.prime}, {"exponent", r.exponent}, {"unique", r.unique}, {"cyclic", r.cyclic}});
      }
      out << dump({{"group", spec}, {"order", group.order()}, {"orderCensus", census}, {"sylow", sylow}});
      return kExitOk;
    };
  });

  auto* graph_cmd = app.add_subcommand("graph", "Build and transform graphs")->require_subcommand(1);
  auto* build = graph_cmd->add_subcommand("build", "Build a graph of a group");
  build->add_option("--group", spec, "Group spec")->required();
  build->add_option("--kind", kind, "power, dpower or enhanced")
      ->check(CLI::IsMember({"power", "dpower", "enhanced"}));
  build->add_option("--out", out_path, "Write the graph here instead of stdout");
  add_format_flags(build);
  build->callback([&] {
    action = [&] {
      const auto group = build_group(spec);
      std::string payload;
      if (kind == "dpower") {
        payload = render(directed_power_graph(group, kCliGraphCap), dot, csv);
      } else if (kind == "power") {
        payload = render(power_graph(group, kCliGraphCap), dot, csv);
      } else {
        payload = render(enhanced_power_graph(group, kCliGraphCap), dot, csv);
      }
      out << emit(payload, out_path);
      return kExitOk;
    };
  });

  auto* quotient = graph_cmd->add_subcommand("quotient", "Twin quotient of a graph file");
  quotient->add_option("file", file, "Graph JSON")->required();
  add_format_flags(quotient);
  quotient->callback([&] {
    action = [&] {
      out << render(twin_quotient(read_graph(file)).first, dot, csv);
      return kExitOk;
    };
  });

  auto* classes = app.add_subcommand("classes", "The ≈ and ≡ partitions of the power graph and the class types");
  classes->add_option("--group", spec, "Group spec")->required();
  classes->callback([&] {
    action = [&] {
      const auto group = build_group(spec);
      const auto power = power_graph(group, kCliGraphCap);
      const auto d = class_decomposition(group, power);
      ordered_json approx = ordered_json::array();
      for (const auto& c : d.approx.classes) approx.push_back(labels_of(group, c));
      ordered_json equiv = ordered_json::array();
      for (std::size_t i = 0; i < d.equiv.size(); ++i) {
        ordered_json entry = {{"members", labels_of(group, d.equiv.classes[i])}};
        entry["type"] = d.types.empty() ? ordered_json(nullptr) : type_json(d.types[i]);
        equiv.push_back(entry);
      }
      const auto center = center_of_finite_component(power);
      out << dump({{"group", spec},
                   {"center", labels_of(group, center.center)},
                   {"approx", approx},
                   {"equiv", equiv}});
      return kExitOk;
    };
  });

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild graphs from a power graph file")->require_subcommand(1);
  auto* rec_enhanced = reconstruct->add_subcommand("enhanced", "Enhanced power graph from the power graph");
  auto* rec_directed = reconstruct->add_subcommand("directed", "Directed power graph, up to isomorphism");
  for (auto* cmd : {rec_enhanced, rec_directed}) {
    cmd->add_option("--in", in_path, "Power graph JSON")->required();
    cmd->add_option("--out", out_path, "Write the result here instead of stdout");
    add_format_flags(cmd);
  }
  rec_enhanced->callback([&] {
    action = [&] {
      out << emit(render(reconstruct_enhanced(read_graph(in_path)), dot, csv), out_path);
      return kExitOk;
    };
  });
  rec_directed->callback([&] {
    action = [&] {
      out << emit(render(reconstruct_directed(read_graph(in_path)), dot, csv), out_path);
      return kExitOk;
    };
  });

  auto* perfect = app.add_subcommand("perfect", "Perfectness of enhanced power graphs")->require_subcommand(1);
  auto* check = perfect->add_subcommand("check", "Decide perfectness of the enhanced power graph");
  check->add_option("--group", spec, "Group spec")->required();
  const auto check_knobs = add_knobs(check);
  check->callback([&] {
    action = [&] {
      const auto group = build_group(spec);
      const auto enhanced = enhanced_power_graph(group, kCliGraphCap);
      PerfectnessOptions po;
      po.budget = knob(check_knobs.budget, budget, "GGX_BUDGET", kDefaultHoleBudget);
      po.jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, knob(check_knobs.jobs, jobs, "GGX_JOBS", 1)));
      const auto v = perfectness_verdict(enhanced, po);
      ordered_json witness = nullptr;
      if (v.witness) {
        witness = {{"kind", to_string(v.witness->kind)}, {"labels", labels_of(group, v.witness->vertices)}};
      }
      ordered_json reductions = ordered_json::array();
      for (const auto& step : v.trace) reductions.push_back({{"step", step.step}, {"vertices", step.vertices}});
      out << dump({{"group", spec},
                   {"status", to_string(v.status)},
                   {"witness", witness},
                   {"reductions", reductions},
                   {"budgetSpent", v.budget_spent}});
      if (v.status == PerfectStatus::kUnknown) {
        err << "budget exhausted in the " << to_string(v.exhausted.value_or(HoleKind::kHole)) << " search\n";
        return kExitLimit;
      }
      return v.status == PerfectStatus::kPerfect ? kExitOk : kExitNegative;
    };
  });

  auto* witness = app.add_subcommand("witness", "Check explicit witnesses")->require_subcommand(1);
  auto* wcheck = witness->add_subcommand("check", "Do the elements induce a chordless cycle?");
  wcheck->add_option("--group", spec, "Group spec")->required();
  wcheck->add_option("--cycle", cycle, "Elements separated by ';'")->required();
  wcheck->add_option("--length", length, "Expected cycle length (default: number of elements)");
  wcheck->callback([&] {
    action = [&] {
      const auto group = build_group(spec);
      const auto labels = split_cycle(cycle);
      const std::size_t expected = length > 0 ? length : labels.size();
      const bool valid = witness_check(group, labels, expected);
      out << dump({{"group", spec}, {"length", expected}, {"labels", labels}, {"valid", valid}});
      return valid ? kExitOk : kExitNegative;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", suite, "reconstruction, perfectness, embedding, reductions or all")
      ->required()
      ->check(CLI::IsMember({"reconstruction", "perfectness", "embedding", "reductions", "all"}));
  verify->add_option("--corpus", corpus_path, "Corpus file, one group spec per line");
  const auto verify_knobs = add_knobs(verify);
  verify->callback([&] {
    action = [&] {
      SuiteOptions options;
      options.corpus = corpus_path.empty() ? default_corpus() : load_corpus(corpus_path);
      options.budget = knob(verify_knobs.budget, budget, "GGX_BUDGET", kDefaultHoleBudget);
      options.jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, knob(verify_knobs.jobs, jobs, "GGX_JOBS", 1)));
      options.progress = &err;
      ordered_json criteria = ordered_json::array();
      bool all = true;
      for (const int id : suite_criteria(suite)) {
        const auto r = run_criterion(id, options);
        all = all && r.pass;
        err << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << " in " << r.seconds << " s\n";
        criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
      }
      out << dump({{"suite", suite}, {"pass", all}, {"criteria", criteria}});
      return all ? kExitOk : kExitNegative;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    result.exit_code = action ? action() : kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = e.is_limit() ? kExitLimit : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    result.exit_code = kExitUsage;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace ggx::tools
