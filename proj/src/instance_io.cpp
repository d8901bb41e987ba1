#include <algorithm>
#include <set>
#include <sstream>

#include "sse/instance.hpp"

namespace sse {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, "expected integer, got '" + s + "'");
  }
}

const std::set<std::string> kExtraKeys = {"k", "p", "eta", "alpha", "beta", "lambda"};

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, m = 0, edges_seen = 0;
  Instance inst;
  std::set<int> terminals;
  bool k_set = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "edge") throw ParseError(lineno, "malformed problem line");
      n = parse_int(toks[2], lineno);
      m = parse_int(toks[3], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "negative size in problem line");
      inst.graph = Graph(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "content before problem line");
    if (toks[0] == "e") {
      if (toks.size() != 3) throw ParseError(lineno, "malformed edge line");
      int u = parse_int(toks[1], lineno), v = parse_int(toks[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop rejected");
      if (inst.graph.has_edge(u - 1, v - 1)) throw ParseError(lineno, "duplicate edge");
      inst.graph.add_edge(u - 1, v - 1);
      ++edges_seen;
    } else if (toks[0] == "t") {
      if (toks.size() != 2) throw ParseError(lineno, "malformed terminal line");
      int v = parse_int(toks[1], lineno);
      if (v < 1 || v > n) throw ParseError(lineno, "terminal out of range");
      terminals.insert(v - 1);
    } else if (toks[0] == "x") {
      if (toks.size() != 3) throw ParseError(lineno, "malformed extras line");
      if (!kExtraKeys.count(toks[1])) throw ParseError(lineno, "unknown extras key '" + toks[1] + "'");
      int v = parse_int(toks[2], lineno);
      if (toks[1] == "k") {
        inst.k = v;
        k_set = true;
      } else if (toks[1] == "p") {
        inst.p = v;
      } else {
        inst.extras[toks[1]] = v;
      }
    } else {
      throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing problem line");
  if (edges_seen != m) throw ParseError(lineno, "edge count mismatch with problem line");
  inst.terminals.assign(terminals.begin(), terminals.end());
  if (!k_set) inst.k = n;
  if (inst.p < 1) throw ParseError(lineno, "p must be at least 1");
  if (inst.k < static_cast<int>(inst.terminals.size()) || inst.k > n)
    throw ParseError(lineno, "k out of range (|X| <= k <= n required)");
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p edge " << inst.graph.num_vertices() << " " << inst.graph.num_edges() << "\n";
  out << "x k " << inst.k << "\n";
  out << "x p " << inst.p << "\n";
  for (const auto& [key, val] : inst.extras) out << "x " << key << " " << val << "\n";
  for (int t : inst.terminals) out << "t " << t + 1 << "\n";
  for (const auto& [u, v] : inst.graph.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  TreeDecomposition td;
  int nbags = -1;
  std::vector<bool> seen_bag;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "td") {
      if (nbags >= 0) throw ParseError(lineno, "duplicate td header");
      if (toks.size() != 4) throw ParseError(lineno, "malformed td header");
      nbags = parse_int(toks[1], lineno);
      td.n = parse_int(toks[3], lineno);
      if (nbags < 1 || td.n < 0) throw ParseError(lineno, "bad td header values");
      td.bags.assign(nbags, {});
      seen_bag.assign(nbags, false);
      continue;
    }
    if (nbags < 0) throw ParseError(lineno, "content before td header");
    if (toks[0] == "b") {
      if (toks.size() < 2) throw ParseError(lineno, "malformed bag line");
      int id = parse_int(toks[1], lineno);
      if (id < 1 || id > nbags) throw ParseError(lineno, "bag id out of range");
      if (seen_bag[id - 1]) throw ParseError(lineno, "duplicate bag");
      seen_bag[id - 1] = true;
      for (size_t i = 2; i < toks.size(); ++i) {
        int v = parse_int(toks[i], lineno);
        if (v < 1 || v > td.n) throw ParseError(lineno, "bag vertex out of range");
        td.bags[id - 1].push_back(v - 1);
      }
    } else if (toks[0] == "te") {
      if (toks.size() != 3) throw ParseError(lineno, "malformed tree edge line");
      int a = parse_int(toks[1], lineno), b = parse_int(toks[2], lineno);
      if (a < 1 || a > nbags || b < 1 || b > nbags) throw ParseError(lineno, "tree edge bag out of range");
      td.tree_edges.emplace_back(a - 1, b - 1);
    } else {
      throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
    }
  }
  if (nbags < 0) throw ParseError(lineno, "missing td header");
  return td;
}

std::vector<int> parse_layout(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<int> layout;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks.size() != 1) throw ParseError(lineno, "expected one vertex id per line");
    int v = parse_int(toks[0], lineno);
    if (v < 1 || v > n) throw ParseError(lineno, "layout vertex out of range");
    layout.push_back(v - 1);
  }
  return layout;
}

}  // namespace sse
