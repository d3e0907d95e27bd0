#pragma once

#include <string>

#include "skewzf/graph.hpp"
#include "skewzf/set_family.hpp"

namespace skewzf {

/// Distinct saturated vertex sets of the maximum matchings of g.
SetFamily matching_matroid_bases(const Graph& g);

/// Equal cardinalities plus the basis exchange axiom, checked over every
/// (B1, B2, x) triple. Throws std::invalid_argument on an empty family.
bool is_matroid_basis_family(const SetFamily& f);

/// Complements of the members within the ground set.
SetFamily dual_bases(const SetFamily& f);

/// True iff every maximum matching of g is uniquely restricted.
bool all_max_matchings_ur(const Graph& g);

enum class MatroidStatus { pass, fail, precondition_failed };

std::string to_string(MatroidStatus s);

struct MatroidReport {
  MatroidStatus status = MatroidStatus::fail;
  std::string detail;
  SetFamily forcing_sets;   // all minimum skew zero forcing sets
  SetFamily dual_matching;  // complements of matching matroid bases
  bool forcing_is_basis_family = false;
  bool families_equal = false;
};

/// Checks that the minimum skew zero forcing sets of a bipartite graph whose
/// maximum matchings are all uniquely restricted form the dual of its
/// matching matroid. A violated precondition gives precondition_failed and
/// leaves the families empty.
MatroidReport verify_zero_forcing_matroid(const Graph& g);

}  // namespace skewzf
