#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewzf/report.hpp"
#include "skewzf/skewrank.hpp"

namespace skewzf {

/// Connected graphs of orders 2..n_max (n_max <= 7): Z^- = n-2 exactly for
/// complete multipartite graphs, and Z^- is never n-1 or n-3.
VerdictReport suite_extreme(int n_max = 7);

/// Connected graphs of orders 4..6: Z^- = n-4 iff the GF(p) minimum skew
/// rank is 4. A disagreement at p that vanishes at another small prime is a
/// field-dependence finding.
VerdictReport suite_remark_order6(Prime p = Prime(3));

/// Small Z^- observations over connected graphs up to n_max (<= 7). Rank
/// items are checked over GF(3), with GF(5) consulted on disagreement.
VerdictReport suite_smallz_observations(int n_max = 7);

/// Connected order-6 graphs with a unique perfect matching: 20 of them, one
/// with Z^- = 1 and nineteen with Z^- = 0.
VerdictReport suite_unique_pm_order6();

/// Connected graphs of orders 4..n_max (<= 6) with a cut-vertex and
/// Z^- = n-4 have GF(p) minimum skew rank 4.
VerdictReport suite_cut_vertex(int n_max = 6, Prime p = Prime(3));

/// The K3 x K3 example: Z^- = 5, {0,1,2,3,6} is a minimum forcing set, and
/// plain exhaustion over GF(p) gives minimum skew rank 6.
VerdictReport suite_k3xk3(Prime p = Prime(3));

/// Seeded random unicyclic graphs of order 3..order_max (<= 12) plus all
/// cycles up to 10: Z^- = n - mr_formula, and some matching of size
/// (n - Z^-)/2 leaves a forcing unsaturated set.
VerdictReport suite_unicyclic(int samples = 200, int order_max = 12, std::uint64_t seed = 1);

/// Closed-form Z^- values for the named families.
VerdictReport suite_special_table();

struct ChainOptions {
  int n_max_exhaustive = 5;
  int n_max_sampled = 6;
  Prime p = Prime(3);
  Prime sample_prime = Prime(11);
  int trials = 20;
  int retry_trials = 100;
  std::uint64_t seed = 1;
};

/// |G| - Z^- <= mr^-(GF(p)) <= 2 match <= |G| with exhaustive min rank, and
/// sampled maximum rank equal to 2 match.
VerdictReport suite_inequality_chain(const ChainOptions& options = {});

/// Trees up to tree_max (<= 16) and connected bipartite graphs whose maximum
/// matchings are all uniquely restricted up to bipartite_max (<= 8): the
/// minimum forcing sets are the dual matching matroid bases. For trees,
/// every matching is maximum iff its unsaturated set is a minimum forcing set.
VerdictReport suite_matroid_duality(int tree_max = 9, int bipartite_max = 8);

struct SuiteParams {
  std::optional<int> n_max;
  std::optional<std::uint32_t> p;
  int samples = 200;
  int order_max = 12;
  int trials = 20;
  std::uint64_t seed = 1;
};

/// Names accepted by run_suite, in a stable order.
const std::vector<std::string>& suite_names();

/// Dispatches by name ("special-table", "extreme", ...). Throws
/// std::invalid_argument for an unknown name or out-of-range parameter.
VerdictReport run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace skewzf
