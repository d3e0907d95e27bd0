#pragma once

#include <string>
#include <vector>

#include "skewzf/vertex_set.hpp"

namespace skewzf {

/// A collection of distinct subsets of a ground set, kept sorted.
class SetFamily {
 public:
  SetFamily() = default;
  /// Sorts and deduplicates `members`. Throws std::invalid_argument when a
  /// member is not contained in `ground`.
  SetFamily(VertexSet ground, std::vector<VertexSet> members);

  VertexSet ground() const { return ground_; }
  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexSet s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  VertexSet ground_;
  std::vector<VertexSet> members_;
};

/// "{{0},{2}}".
std::string to_string(const SetFamily& f);

}  // namespace skewzf
