#include "skewzf/matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewzf/forcing.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/properties.hpp"

namespace skewzf {

SetFamily::SetFamily(VertexSet ground, std::vector<VertexSet> members) : ground_(ground), members_(std::move(members)) {
  for (VertexSet m : members_) {
    if (!m.is_subset_of(ground_)) {
      throw std::invalid_argument("SetFamily: member " + to_string(m) + " is not a subset of " + to_string(ground_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(VertexSet s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::string to_string(const SetFamily& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.members().size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(f.members()[i]);
  }
  return out + "}";
}

SetFamily matching_matroid_bases(const Graph& g) {
  require_bitset_order(g, "matching_matroid_bases");
  std::vector<VertexSet> bases;
  for (const Matching& m : all_maximum_matchings(g)) bases.push_back(m.saturated());
  return SetFamily(g.vertex_set(), std::move(bases));
}

bool is_matroid_basis_family(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("is_matroid_basis_family: empty family");
  const int rank = f.members().front().size();
  for (VertexSet b : f.members()) {
    if (b.size() != rank) return false;
  }
  for (VertexSet b1 : f.members()) {
    for (VertexSet b2 : f.members()) {
      for (Vertex x : b1 - b2) {
        bool exchanged = false;
        for (Vertex y : b2 - b1) {
          VertexSet candidate = b1;
          candidate.erase(x);
          candidate.insert(y);
          if (f.contains(candidate)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

SetFamily dual_bases(const SetFamily& f) {
  std::vector<VertexSet> out;
  out.reserve(f.size());
  for (VertexSet b : f.members()) out.push_back(f.ground() - b);
  return SetFamily(f.ground(), std::move(out));
}

bool all_max_matchings_ur(const Graph& g) {
  const auto matchings = all_maximum_matchings(g);
  return std::all_of(matchings.begin(), matchings.end(),
                     [&](const Matching& m) { return is_uniquely_restricted(g, m); });
}

std::string to_string(MatroidStatus s) {
  switch (s) {
    case MatroidStatus::pass: return "pass";
    case MatroidStatus::fail: return "fail";
    case MatroidStatus::precondition_failed: return "precondition_failed";
  }
  return "unknown";
}

MatroidReport verify_zero_forcing_matroid(const Graph& g) {
  MatroidReport report;
  if (!is_bipartite(g)) {
    report.status = MatroidStatus::precondition_failed;
    report.detail = "not bipartite";
    return report;
  }
  if (!all_max_matchings_ur(g)) {
    report.status = MatroidStatus::precondition_failed;
    report.detail = "max matchings not uniquely restricted";
    return report;
  }
  report.forcing_sets = all_minimum_szfs(g);
  report.dual_matching = dual_bases(matching_matroid_bases(g));
  report.forcing_is_basis_family = is_matroid_basis_family(report.forcing_sets);
  report.families_equal = report.forcing_sets == report.dual_matching;
  if (report.forcing_is_basis_family && report.families_equal) {
    report.status = MatroidStatus::pass;
  } else {
    report.status = MatroidStatus::fail;
    report.detail = !report.forcing_is_basis_family ? "minimum forcing sets violate basis exchange"
                                                    : "minimum forcing sets differ from dual matching matroid bases";
  }
  return report;
}

}  // namespace skewzf
