#include "skewzf/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

namespace skewzf {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int decode_char(char c) {
  const int x = static_cast<unsigned char>(c) - kBias;
  if (x < 0 || x > 63) throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return x;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(decode_char(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_char(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_char(text[i]));
    pos = 8;
  }
  if (n == 0) throw ParseError("graph6: order 0 is not supported");
  if (n > (1U << 20)) throw ParseError("graph6: order too large");

  const std::uint64_t bit_count = n * (n - 1) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError("graph6: expected " + std::to_string(byte_count) + " data bytes, found " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  const int order = static_cast<int>(n);
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_char(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    if ((decode_char(text[pos + k / 6]) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(order, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

class Tokens {
 public:
  explicit Tokens(std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
      const auto eol = text.find('\n');
      auto line = text.substr(0, eol);
      text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      ++line_no;
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      lines_.emplace_back(line_no, line);
    }
  }

  bool done() const { return next_ >= lines_.size(); }

  std::pair<long, long> pair() {
    if (done()) throw ParseError("edge list: unexpected end of input");
    const auto& [line_no, line] = lines_[next_++];
    long a = 0;
    long b = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{}) throw bad(line_no);
    p = r1.ptr;
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{}) throw bad(line_no);
    p = r2.ptr;
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p != end) throw bad(line_no);
    return {a, b};
  }

 private:
  static ParseError bad(std::size_t line_no) {
    return ParseError("edge list: line " + std::to_string(line_no) + " is not two integers");
  }

  std::vector<std::pair<std::size_t, std::string_view>> lines_;
  std::size_t next_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokens tokens(text);
  const auto [n, m] = tokens.pair();
  if (n < 1 || n > (1L << 20)) throw ParseError("edge list: vertex count must be positive");
  if (m < 0) throw ParseError("edge list: negative edge count");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    const auto [u, v] = tokens.pair();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!tokens.done()) throw ParseError("edge list: more edges than declared");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  // Comments only occur in edge lists.
  const auto body = trim(text);
  if (!body.empty() && body.front() == '#') return parse_edge_list(text);
  const auto eol = body.find('\n');
  const auto first_line = trim(body.substr(0, eol));
  std::size_t i = 0;
  while (i < first_line.size() && std::isdigit(static_cast<unsigned char>(first_line[i]))) ++i;
  const bool leading_int = i > 0;
  while (i < first_line.size() && std::isspace(static_cast<unsigned char>(first_line[i]))) ++i;
  const bool second_int = i < first_line.size() && std::isdigit(static_cast<unsigned char>(first_line[i]));
  if (leading_int && second_int) return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace skewzf
