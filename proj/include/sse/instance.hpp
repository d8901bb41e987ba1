#ifndef SSE_INSTANCE_HPP
#define SSE_INSTANCE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sse/graph.hpp"

namespace sse {

/// Problem input: graph, terminal set, budget k, connectivity level p,
/// and problem-specific integer extras (eta, alpha, beta, lambda).
struct Instance {
  Graph graph;
  std::vector<int> terminals;  // sorted, unique
  int k = 0;
  int p = 1;
  std::map<std::string, int> extras;

  bool operator==(const Instance& o) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented instance format, 1-based vertex ids:
///   c <comment> | p edge <n> <m> | e <u> <v> | t <v> | x <key> <int>
Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& inst);

/// PACE-style decomposition file: `td <bags> <width+1> <n>` header,
/// then `b <bag-id> <v>...` lines and `te <b1> <b2>` tree edges.
TreeDecomposition parse_tree_decomposition(const std::string& text);

/// One 1-based vertex id per line.
std::vector<int> parse_layout(const std::string& text, int n);

}  // namespace sse

#endif
