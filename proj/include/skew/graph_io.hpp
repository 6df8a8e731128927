#pragma once

// Text formats: graph6 for undirected graphs, and a plain arc list for
// oriented graphs ("n m" header, then m lines "i j" meaning the arc i -> j).

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skew/graph.hpp"

namespace skew {

/// Malformed input. position() is a 0-based character offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

/// Reads one graph6 string per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

std::string to_arc_list(const OrientedGraph& og);
OrientedGraph from_arc_list(std::string_view text);

}  // namespace skew
