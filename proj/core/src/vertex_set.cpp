#include "skewzf/vertex_set.hpp"

#include <stdexcept>

namespace skewzf {

VertexSet VertexSet::from(const std::vector<Vertex>& vertices) {
  VertexSet s;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxBitsetOrder) {
      throw std::out_of_range("vertex " + std::to_string(v) + " does not fit in a VertexSet");
    }
    s.insert(v);
  }
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace skewzf
