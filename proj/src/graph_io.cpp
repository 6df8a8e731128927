#include "skew/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace skew {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    throw std::invalid_argument("graph6 writer supports at most 258047 vertices");
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  put_size(out, n);
  // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
  int bits = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + kBias));
        bits = value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto next = [&](const char* what) {
    if (pos >= text.size()) throw ParseError(std::string("graph6: unexpected end of input while reading ") + what, pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: invalid character", pos);
    ++pos;
    return c - kBias;
  };

  int n = next("vertex count");
  if (n == 63) {
    if (pos < text.size() && text[pos] == 126) throw ParseError("graph6: 8-byte size form is not supported", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next("vertex count");
  }
  std::vector<Edge> edges;
  int value = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        value = next("adjacency bits");
        bits = 6;
      }
      --bits;
      if ((value >> bits) & 1) edges.push_back({i, j});
    }
  }
  if (pos != text.size()) throw ParseError("graph6: trailing characters", pos);
  return Graph(n, edges);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::string to_arc_list(const OrientedGraph& og) {
  std::ostringstream out;
  out << og.order() << ' ' << og.size() << '\n';
  for (const Arc& a : og.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  long integer(const char* what) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) throw ParseError(std::string("arc list: expected ") + what, pos_);
    long value = 0;
    const char* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || end == begin) throw ParseError(std::string("arc list: expected ") + what, pos_);
    start_ = pos_;
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  void expect_end() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ != text_.size()) throw ParseError("arc list: trailing content", pos_);
  }

  std::size_t last_start() const { return start_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
};

}  // namespace

OrientedGraph from_arc_list(std::string_view text) {
  Scanner scan(text);
  const long n = scan.integer("vertex count");
  if (n < 0) throw ParseError("arc list: negative vertex count", scan.last_start());
  const long m = scan.integer("arc count");
  if (m < 0) throw ParseError("arc list: negative arc count", scan.last_start());
  std::vector<Arc> arcs;
  for (long k = 0; k < m; ++k) {
    const long i = scan.integer("arc tail");
    if (i < 0 || i >= n) throw ParseError("arc list: vertex out of range", scan.last_start());
    const long j = scan.integer("arc head");
    if (j < 0 || j >= n) throw ParseError("arc list: vertex out of range", scan.last_start());
    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  scan.expect_end();
  try {
    return OrientedGraph(static_cast<int>(n), arcs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("arc list: ") + e.what(), 0);
  }
}

}  // namespace skew
