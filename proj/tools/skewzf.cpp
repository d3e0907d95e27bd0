#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "skewzf/forcing.hpp"
#include "skewzf/io.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/matroid.hpp"
#include "skewzf/skewrank.hpp"
#include "skewzf/suites.hpp"

namespace {

using namespace skewzf;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Usage, parse and precondition problems; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string graph6;
  std::string edges;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--graph6", in.graph6, "graph6 string, or - to read stdin");
  cmd.add_option("--edges", in.edges, "edge-list file (\"n m\" then m lines \"u v\"), or - for stdin");
}

void add_json_flag(CLI::App& cmd, bool& as_json) { cmd.add_flag("--json", as_json, "machine-readable output"); }

std::string read_stream(std::istream& is) { return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()}; }

Graph load_graph(const InputOptions& in) {
  if (in.graph6.empty() == in.edges.empty()) throw UsageError("give exactly one of --graph6 or --edges");
  if (!in.graph6.empty()) return parse_graph6(in.graph6 == "-" ? read_stream(std::cin) : in.graph6);
  if (in.edges == "-") return parse_graph_text(read_stream(std::cin));
  std::ifstream file(in.edges);
  if (!file) throw UsageError("cannot open " + in.edges);
  return parse_graph_text(read_stream(file));
}

json set_json(VertexSet s) { return s.to_vector(); }

json family_json(const SetFamily& f) {
  json out = json::array();
  for (VertexSet s : f.members()) out.push_back(set_json(s));
  return out;
}

json matching_json(const Matching& m) {
  json out = json::array();
  for (const Edge& e : m.edges()) out.push_back({e.u, e.v});
  return out;
}

std::string join_sets(const SetFamily& f) {
  std::string out;
  for (VertexSet s : f.members()) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> vs;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.find_first_not_of(" \t{}") == std::string::npos) continue;
    std::size_t used = 0;
    const std::string trimmed = token.substr(token.find_first_not_of(" \t{"));
    int v = 0;
    try {
      v = std::stoi(trimmed, &used);
    } catch (const std::exception&) {
      throw UsageError("bad vertex in --set: " + token);
    }
    if (v < 0) throw UsageError("bad vertex in --set: " + token);
    vs.push_back(v);
  }
  return VertexSet::from(vs);
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
}

int cmd_zminus(const Graph& g, bool all, bool as_json) {
  const auto z = zminus(g);
  json j = {{"order", g.order()}, {"zminus", z.value}, {"witness", set_json(z.witness)}};
  std::string text = "Z- = " + std::to_string(z.value);
  if (all) {
    const auto sets = all_minimum_szfs(g);
    j["sets"] = family_json(sets);
    text += "; sets: " + join_sets(sets);
  } else {
    text += "; witness: " + to_string(z.witness);
  }
  emit(as_json, j, text);
  return kExitPass;
}

int cmd_closure(const Graph& g, const std::string& set, bool as_json) {
  const VertexSet initial = parse_vertex_list(set);
  if (!initial.is_subset_of(g.vertex_set())) throw UsageError("set " + to_string(initial) + " is not within the graph");
  const auto trace = skew_closure(g, initial);
  const bool done = trace.all_black(g.order());
  json forces = json::array();
  std::string text;
  for (const Force& f : trace.forces) {
    forces.push_back({f.forcer, f.forced});
    text += std::to_string(f.forcer) + " -> " + std::to_string(f.forced) + '\n';
  }
  text += done ? "all black" : "stalled: " + to_string(trace.black);
  emit(as_json,
       {{"initial", set_json(trace.initial)}, {"black", set_json(trace.black)}, {"forces", forces}, {"all_black", done}},
       text);
  return kExitPass;
}

int cmd_match(const Graph& g, bool ur, bool as_json) {
  const Matching m = maximum_matching(g);
  const bool m_ur = is_uniquely_restricted(g, m);
  json j = {{"matching_number", m.size()}, {"matching", matching_json(m)}, {"uniquely_restricted", m_ur}};
  std::string text = "match = " + std::to_string(m.size()) + "; M = " + to_string(m) +
                     "; uniquely restricted: " + (m_ur ? "yes" : "no");
  if (ur) {
    const Matching best = maximum_ur_matching(g);
    const bool all_ur = all_max_matchings_ur(g);
    j["ur_matching_number"] = best.size();
    j["ur_matching"] = matching_json(best);
    j["all_maximum_ur"] = all_ur;
    text += "\nmax UR matching = " + std::to_string(best.size()) + "; M = " + to_string(best) +
            "\nall maximum matchings uniquely restricted: " + (all_ur ? "yes" : "no");
  }
  emit(as_json, j, text);
  return kExitPass;
}

int cmd_mr(const Graph& g, const std::string& mode, std::optional<std::uint32_t> p_opt, int trials,
           std::uint64_t seed, bool as_json) {
  json j = {{"mode", mode}};
  std::string text;
  if (mode == "bounds") {
    const auto b = rank_bounds(g);
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    text = "|G| - Z- = " + std::to_string(b.lower) + " <= mr- <= MR- = 2*match = " + std::to_string(b.upper);
  } else if (mode == "exhaustive") {
    const Prime p(p_opt.value_or(3));
    MinRankSearch r{0, 0, SkewMatrixGF::from_entries(p, 0, {})};
    try {
      r = min_skew_rank_search(g, p);
    } catch (const BudgetExceeded& e) {
      throw UsageError(e.what());
    }
    j["prime"] = p.value();
    j["min_rank"] = r.min_rank;
    j["matrices_visited"] = r.matrices_visited;
    text = "mr-(GF(" + std::to_string(p.value()) + ")) = " + std::to_string(r.min_rank);
  } else if (mode == "sampled") {
    const Prime p(p_opt.value_or(11));
    const int r = max_skew_rank_sampled(g, p, trials, seed);
    j["prime"] = p.value();
    j["trials"] = trials;
    j["max_rank"] = r;
    text = "MR-(GF(" + std::to_string(p.value()) + ")) sampled = " + std::to_string(r) + " over " +
           std::to_string(trials) + " trials";
  } else {
    const auto f = mr_formula(g);
    if (!f) throw UsageError("precondition failed: no closed form (needs a connected tree, unicyclic or complete multipartite graph)");
    j["value"] = f->value;
    j["formula"] = to_string(f->formula);
    j["matching_number"] = f->matching_number;
    switch (f->formula) {
      case RankFormula::complete_multipartite: text = "mr- = 2"; break;
      case RankFormula::unicyclic_even_cycle_no_ur: text = "mr- = 2*match - 2 = " + std::to_string(f->value); break;
      default: text = "mr- = 2*match = " + std::to_string(f->value); break;
    }
    text += " (" + to_string(f->formula) + ")";
  }
  emit(as_json, j, text);
  return kExitPass;
}

int cmd_matroid(const Graph& g, bool as_json) {
  const auto r = verify_zero_forcing_matroid(g);
  if (r.status == MatroidStatus::precondition_failed) {
    throw UsageError("precondition failed: " + r.detail);
  }
  const auto bases = matching_matroid_bases(g);
  emit(as_json,
       {{"status", to_string(r.status)},
        {"detail", r.detail},
        {"matching_bases", family_json(bases)},
        {"dual_bases", family_json(r.dual_matching)},
        {"forcing_sets", family_json(r.forcing_sets)}},
       "matching matroid bases: " + to_string(bases) + "\ndual bases: " + to_string(r.dual_matching) +
           "\nminimum forcing sets: " + to_string(r.forcing_sets) + "\n" + to_string(r.status) +
           (r.detail.empty() ? "" : ": " + r.detail));
  return r.status == MatroidStatus::pass ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, const SuiteParams& params, bool as_json) {
  const auto report = run_suite(suite, params);
  std::cout << (as_json ? report.to_json_lines() : report.to_text());
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew zero forcing, matchings and minimum skew rank of small graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  InputOptions in;
  auto* zm = app.add_subcommand("zminus", "skew zero forcing number and a minimum forcing set");
  add_input_options(*zm, in);
  bool all = false;
  zm->add_flag("--all", all, "list every minimum forcing set");

  auto* cl = app.add_subcommand("closure", "apply the skew color change rule from a starting set");
  add_input_options(*cl, in);
  std::string set;
  cl->add_option("--set", set, "comma-separated black vertices, e.g. 0,2 (default: empty)");

  auto* ma = app.add_subcommand("match", "maximum matching");
  add_input_options(*ma, in);
  bool ur = false;
  ma->add_flag("--ur", ur, "also report a maximum uniquely restricted matching");

  auto* mr = app.add_subcommand("mr", "minimum skew rank");
  add_input_options(*mr, in);
  std::string mode = "bounds";
  std::optional<std::uint32_t> p;
  int trials = 20;
  std::uint64_t seed = 1;
  mr->add_option("--mode", mode, "bounds | exhaustive | formula | sampled")
      ->check(CLI::IsMember({"bounds", "exhaustive", "formula", "sampled"}))
      ->capture_default_str();
  mr->add_option("--p", p, "odd prime (default 3 for exhaustive, 11 for sampled)");
  mr->add_option("--trials", trials, "random matrices for sampled mode")->capture_default_str();
  mr->add_option("--seed", seed, "seed for sampled mode")->capture_default_str();

  auto* mt = app.add_subcommand("matroid", "check forcing sets against the dual matching matroid");
  add_input_options(*mt, in);

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  for (auto* cmd : {zm, cl, ma, mr, mt, ve}) add_json_flag(*cmd, as_json);
  std::string suite;
  SuiteParams params;
  ve->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ve->add_option("--n-max", params.n_max, "largest order swept");
  ve->add_option("--p", params.p, "odd prime for exhaustive min rank (default 3)");
  ve->add_option("--samples", params.samples, "random graphs for the unicyclic suite")->capture_default_str();
  ve->add_option("--order-max", params.order_max, "largest random unicyclic order")->capture_default_str();
  ve->add_option("--trials", params.trials, "random matrices per graph for sampled MR")->capture_default_str();
  ve->add_option("--seed", params.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (ve->parsed()) return cmd_verify(suite, params, as_json);
    const Graph g = load_graph(in);
    if (zm->parsed()) return cmd_zminus(g, all, as_json);
    if (cl->parsed()) return cmd_closure(g, set, as_json);
    if (ma->parsed()) return cmd_match(g, ur, as_json);
    if (mr->parsed()) return cmd_mr(g, mode, p, trials, seed, as_json);
    return cmd_matroid(g, as_json);
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
