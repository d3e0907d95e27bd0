#include "skewzf/suites.hpp"

#include <random>
#include <stdexcept>

#include "skewzf/enumerate.hpp"
#include "skewzf/families.hpp"
#include "skewzf/forcing.hpp"
#include "skewzf/io.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/matroid.hpp"
#include "skewzf/properties.hpp"

namespace skewzf {

namespace {

void require_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "], got " + std::to_string(value));
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string count_note(const std::vector<int>& per_order, int first_order) {
  std::string out = "graphs per order:";
  for (std::size_t i = 0; i < per_order.size(); ++i) {
    out += " n=" + std::to_string(first_order + static_cast<int>(i)) + ":" + std::to_string(per_order[i]);
  }
  return out;
}

// Primes consulted when a rank claim fails over the primary field.
constexpr std::uint32_t kFallbackPrimes[] = {3, 5, 7};

int exact_min_rank(const Graph& g, Prime p) { return min_skew_rank_exhaustive(g, p); }

// Records a rank claim: pass over `p`, a finding if it only holds over some
// other small prime, a failure otherwise.
template <typename Claim>
void record_rank_claim(VerdictReport& report, const Graph& g, Prime p, const std::string& expected, Claim claim,
                       const std::string& prefix) {
  const int r = exact_min_rank(g, p);
  std::string actual = prefix + "mr-(GF(" + std::to_string(p.value()) + "))=" + std::to_string(r);
  if (claim(r)) {
    report.add(emit_graph6(g), expected, actual, true);
    return;
  }
  for (std::uint32_t q : kFallbackPrimes) {
    if (q == p.value()) continue;
    int rq = 0;
    try {
      rq = exact_min_rank(g, Prime(q));
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (claim(rq)) {
      actual += ", mr-(GF(" + std::to_string(q) + "))=" + std::to_string(rq);
      report.add({emit_graph6(g), expected, actual, InstanceStatus::finding});
      return;
    }
  }
  report.add(emit_graph6(g), expected, actual, false);
}

}  // namespace

VerdictReport suite_extreme(int n_max) {
  require_range("n_max", n_max, 2, 7);
  VerdictReport report("extreme");
  std::vector<int> per_order;
  for (int n = 2; n <= n_max; ++n) {
    const auto graphs = enumerate_connected(n);
    per_order.push_back(static_cast<int>(graphs.size()));
    for (const Graph& g : graphs) {
      const int z = zminus(g).value;
      const bool multipartite = is_complete_multipartite(g).has_value();
      const bool ok = ((z == n - 2) == multipartite) && z != n - 1 && z != n - 3;
      report.add(emit_graph6(g), "Z-=n-2 iff multipartite; Z- not in {n-1,n-3}",
                 "n=" + std::to_string(n) + ", Z-=" + std::to_string(z) + ", multipartite=" + yes_no(multipartite), ok);
    }
  }
  report.note(count_note(per_order, 2));
  return report;
}

VerdictReport suite_remark_order6(Prime p) {
  VerdictReport report("remark-order6");
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const bool z_side = zminus(g).value == n - 4;
      record_rank_claim(
          report, g, p, "(Z-=n-4) iff (mr-=4)", [&](int r) { return z_side == (r == 4); },
          "n=" + std::to_string(n) + ", Z-=n-4: " + yes_no(z_side) + ", ");
    }
  }
  return report;
}

VerdictReport suite_smallz_observations(int n_max) {
  require_range("n_max", n_max, 1, 7);
  const Prime p(3);
  VerdictReport report("smallz");
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const int z = zminus(g).value;
      const bool even = n % 2 == 0;
      if (z == 0) {
        const bool leaf = degree_stats(g).min_degree == 1;
        const bool unique_pm = has_unique_perfect_matching(g);
        report.add(emit_graph6(g), "Z-=0 => leaf, even order, unique perfect matching",
                   "leaf=" + yes_no(leaf) + ", even=" + yes_no(even) + ", unique PM=" + yes_no(unique_pm),
                   leaf && even && unique_pm);
      } else if (z == 1 && even) {
        const bool unique_pm = has_unique_perfect_matching(g);
        report.add(emit_graph6(g), "Z-=1, even order => unique perfect matching", "unique PM=" + yes_no(unique_pm),
                   unique_pm);
      } else if ((z == 1 || z == 2) && !even) {
        record_rank_claim(
            report, g, p, "Z-=" + std::to_string(z) + ", odd order => mr-=n-1",
            [&](int r) { return r == n - 1; }, "n=" + std::to_string(n) + ", ");
      } else if (z == 2 && even) {
        const bool unique_pm = has_unique_perfect_matching(g);
        record_rank_claim(
            report, g, p, "Z-=2, even order => mr- in {n,n-2}, mr-=n iff unique PM",
            [&](int r) { return (r == n || r == n - 2) && ((r == n) == unique_pm); },
            "n=" + std::to_string(n) + ", unique PM=" + yes_no(unique_pm) + ", ");
      }
    }
  }
  return report;
}

VerdictReport suite_unique_pm_order6() {
  VerdictReport report("unique-pm-order6");
  int count = 0;
  int z_one = 0;
  int z_zero = 0;
  for (const Graph& g : enumerate_connected(6)) {
    if (!has_unique_perfect_matching(g)) continue;
    ++count;
    const int z = zminus(g).value;
    if (z == 1) ++z_one;
    if (z == 0) ++z_zero;
    report.add(emit_graph6(g), "Z- in {0,1}", "Z-=" + std::to_string(z), z <= 1);
  }
  report.add("", "20 graphs", std::to_string(count) + " graphs", count == 20);
  report.add("", "1 graph with Z-=1", std::to_string(z_one), z_one == 1);
  report.add("", "19 graphs with Z-=0", std::to_string(z_zero), z_zero == 19);
  return report;
}

VerdictReport suite_cut_vertex(int n_max, Prime p) {
  require_range("n_max", n_max, 4, 6);
  VerdictReport report("cut-vertex");
  for (int n = 4; n <= n_max; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (cut_vertices(g).empty() || zminus(g).value != n - 4) continue;
      record_rank_claim(
          report, g, p, "cut-vertex, Z-=n-4 => mr-=4", [](int r) { return r == 4; }, "n=" + std::to_string(n) + ", ");
    }
  }
  return report;
}

VerdictReport suite_k3xk3(Prime p) {
  VerdictReport report("k3xk3");
  const Graph g = k3_times_k3();
  const std::string code = emit_graph6(g);
  const auto z = zminus(g);
  report.add(code, "Z-=5", "Z-=" + std::to_string(z.value), z.value == 5);
  const VertexSet cited = VertexSet::from({0, 1, 2, 3, 6});
  const bool forces = is_skew_forcing_set(g, cited);
  report.add(code, "{0,1,2,3,6} is a minimum forcing set",
             "forcing=" + yes_no(forces) + ", size 5 vs Z-=" + std::to_string(z.value), forces && z.value == 5);
  ExhaustiveOptions plain;
  plain.normalize_spanning_forest = false;
  const auto search = min_skew_rank_search(g, p, plain);
  report.add(code, "mr-(GF(" + std::to_string(p.value()) + "))=6",
             "mr-=" + std::to_string(search.min_rank) + " over " + std::to_string(search.matrices_visited) + " matrices",
             search.min_rank == 6);
  report.note("vertex (i,j) of K3 x K3 is labelled 3i+j; the cited set is 0-based");
  return report;
}

namespace {

void check_unicyclic(VerdictReport& report, const Graph& g) {
  const int n = g.order();
  const auto formula = mr_formula(g);
  const int z = zminus(g).value;
  if (!formula) {
    report.add(emit_graph6(g), "unicyclic", "no closed form", false);
    return;
  }
  const bool equality = z == n - formula->value;
  bool matching_found = false;
  if ((n - z) % 2 == 0) {
    for (const Matching& m : matchings_of_size(g, (n - z) / 2)) {
      if (is_skew_forcing_set(g, unsaturated_set(g, m))) {
        matching_found = true;
        break;
      }
    }
  }
  report.add(emit_graph6(g), "Z-=n-mr- and a matching with forcing unsaturated set",
             "n=" + std::to_string(n) + ", Z-=" + std::to_string(z) + ", mr-=" + std::to_string(formula->value) + " (" +
                 to_string(formula->formula) + "), matching=" + yes_no(matching_found),
             equality && matching_found);
}

}  // namespace

VerdictReport suite_unicyclic(int samples, int order_max, std::uint64_t seed) {
  require_range("order_max", order_max, 3, 12);
  if (samples < 0) throw std::invalid_argument("samples must be non-negative");
  VerdictReport report("unicyclic");
  for (int n = 3; n <= 10; ++n) check_unicyclic(report, cycle_graph(n));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int n = 3 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(order_max - 2)));
    check_unicyclic(report, random_unicyclic(n, rng));
  }
  report.note("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " random graphs of order 3.." +
              std::to_string(order_max));
  return report;
}

VerdictReport suite_special_table() {
  VerdictReport report("special-table");
  const auto check = [&](const std::string& name, const Graph& g, int expected) {
    const int z = zminus(g).value;
    report.add(emit_graph6(g), name + ": Z-=" + std::to_string(expected), "Z-=" + std::to_string(z), z == expected);
  };
  const auto num = [](int x) { return std::to_string(x); };
  for (int n = 2; n <= 10; ++n) check("P" + num(n), path_graph(n), n % 2 == 0 ? 0 : 1);
  for (int n = 3; n <= 10; ++n) check("C" + num(n), cycle_graph(n), n % 2 == 0 ? 2 : 1);
  for (int n = 4; n <= 9; ++n) check("W" + num(n), wheel_graph(n), n % 2 == 0 ? 2 : 3);
  for (int m : {3, 4}) {
    for (int k : {1, 2, 3}) check("P" + num(m) + "," + num(k), pineapple_graph(m, k), m + k - 4);
  }
  for (int s : {2, 3, 4}) check("Q" + num(s), hypercube_graph(s), 1 << (s - 1));
  for (int n : {2, 3, 4}) check("T" + num(n), super_triangle_graph(n), n - 1);
  for (int s = 1; s <= 5; ++s) check("H" + num(s), half_graph(s), 0);
  for (int s : {2, 3}) check("N" + num(s), necklace_graph(s), s);
  check("P3 o K1", corona(path_graph(3), complete_graph(1)), 0);
  check("C4 o K1", corona(cycle_graph(4), complete_graph(1)), 0);
  check("K4 o K1", corona(complete_graph(4), complete_graph(1)), 0);
  for (const auto& [t, s] : {std::pair{3, 2}, std::pair{4, 2}}) {
    check("C" + num(t) + " o K" + num(s), corona(cycle_graph(t), complete_graph(s)), s * t - 3 * t + 2);
  }
  for (int s : {2, 3}) check("P" + num(s) + " x P" + num(s), cartesian_product(path_graph(s), path_graph(s)), s);
  check("K3 x P2", cartesian_product(complete_graph(3), path_graph(2)), 2);
  for (int s : {3, 4}) check("K" + num(s) + " x P3", cartesian_product(complete_graph(s), path_graph(3)), s);
  return report;
}

VerdictReport suite_inequality_chain(const ChainOptions& options) {
  require_range("n_max_exhaustive", options.n_max_exhaustive, 1, 6);
  require_range("n_max_sampled", options.n_max_sampled, 1, 7);
  VerdictReport report("inequality-chain");
  for (int n = 1; n <= options.n_max_exhaustive; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const int lower = n - zminus(g).value;
      const int mr = exact_min_rank(g, options.p);
      const int upper = 2 * matching_number(g);
      report.add(emit_graph6(g), "n-Z- <= mr- <= 2match <= n",
                 std::to_string(lower) + " <= " + std::to_string(mr) + " <= " + std::to_string(upper) +
                     " <= " + std::to_string(n) + " over GF(" + std::to_string(options.p.value()) + ")",
                 lower <= mr && mr <= upper && upper <= n);
    }
  }
  int retries = 0;
  for (int n = 1; n <= options.n_max_sampled; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const int target = 2 * matching_number(g);
      int mr = max_skew_rank_sampled(g, options.sample_prime, options.trials, options.seed);
      std::string actual = "MR- sampled=" + std::to_string(mr);
      if (mr != target) {
        ++retries;
        mr = max_skew_rank_sampled(g, options.sample_prime, options.retry_trials, options.seed + 1);
        actual += ", retry=" + std::to_string(mr);
      }
      report.add(emit_graph6(g), "MR-=2match=" + std::to_string(target), actual, mr == target);
    }
  }
  report.note("sampled over GF(" + std::to_string(options.sample_prime.value()) + "), " +
              std::to_string(options.trials) + " trials, " + std::to_string(retries) + " retried with " +
              std::to_string(options.retry_trials));
  return report;
}

VerdictReport suite_matroid_duality(int tree_max, int bipartite_max) {
  require_range("tree_max", tree_max, 1, 16);
  require_range("bipartite_max", bipartite_max, 1, 8);
  VerdictReport report("matroid-duality");
  const auto duality = [&](const Graph& g, const std::string& kind) {
    const auto r = verify_zero_forcing_matroid(g);
    report.add(emit_graph6(g), kind + ": forcing sets = dual matching matroid bases",
               to_string(r.status) + (r.detail.empty() ? "" : " (" + r.detail + ")"),
               r.status == MatroidStatus::pass);
  };
  int bipartite_checked = 0;
  for (int n = 1; n <= bipartite_max; ++n) {
    for (const Graph& g : enumerate_connected_bipartite(n)) {
      if (!all_max_matchings_ur(g)) continue;
      ++bipartite_checked;
      duality(g, "bipartite");
    }
  }
  for (int n = 1; n <= tree_max; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      duality(t, "tree");
      const int z = zminus(t).value;
      const int match = matching_number(t);
      int mismatches = 0;
      int matchings = 0;
      for_each_matching(t, [&](const Matching& m) {
        ++matchings;
        const VertexSet u = unsaturated_set(t, m);
        const bool minimum_forcing = u.size() == z && is_skew_forcing_set(t, u);
        if ((m.size() == match) != minimum_forcing) ++mismatches;
      });
      report.add(emit_graph6(t), "M maximum iff unsaturated(M) minimum forcing",
                 std::to_string(mismatches) + " of " + std::to_string(matchings) + " matchings disagree",
                 mismatches == 0);
    }
  }
  report.note(std::to_string(bipartite_checked) + " connected bipartite graphs with all maximum matchings uniquely restricted");
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"special-table", "extreme",   "remark-order6",    "smallz",
                                                 "unique-pm-order6", "cut-vertex", "k3xk3", "unicyclic",
                                                 "inequality-chain", "matroid-duality"};
  return names;
}

VerdictReport run_suite(const std::string& name, const SuiteParams& params) {
  const Prime p(params.p.value_or(3));
  if (name == "special-table") return suite_special_table();
  if (name == "extreme") return suite_extreme(params.n_max.value_or(7));
  if (name == "remark-order6") return suite_remark_order6(p);
  if (name == "smallz") return suite_smallz_observations(params.n_max.value_or(7));
  if (name == "unique-pm-order6") return suite_unique_pm_order6();
  if (name == "cut-vertex") return suite_cut_vertex(params.n_max.value_or(6), p);
  if (name == "k3xk3") return suite_k3xk3(p);
  if (name == "unicyclic") return suite_unicyclic(params.samples, params.order_max, params.seed);
  if (name == "inequality-chain") {
    ChainOptions options;
    options.p = p;
    options.trials = params.trials;
    options.seed = params.seed;
    if (params.n_max) options.n_max_exhaustive = std::min(options.n_max_exhaustive, *params.n_max);
    if (params.n_max) options.n_max_sampled = *params.n_max;
    return suite_inequality_chain(options);
  }
  if (name == "matroid-duality") return suite_matroid_duality(params.n_max.value_or(9), std::min(params.n_max.value_or(8), 8));
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace skewzf
