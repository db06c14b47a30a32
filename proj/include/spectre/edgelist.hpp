#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

// Text format: header "n m", then m lines "u v w" (w optional, default 1),
// loops written "u u w", comments start with '#'. Canonical form sorts
// edges with u <= v lexicographically and prints weights with 17
// significant digits, so write(read(t)) round-trips bit-exactly.

inline Graph read_edgelist(std::istream& in) {
  std::string line;
  Index n = -1;
  long expected = -1;
  std::vector<Graph::Edge> edges;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> expected)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok)) { n = -1; continue; }  // blank/comment before header
        throw std::invalid_argument("edgelist: malformed header at line " + std::to_string(lineno));
      }
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) {
      std::string tok;
      std::istringstream probe(line);
      if (!(probe >> tok))
        continue;  // blank line
      throw std::invalid_argument("edgelist: malformed edge at line " + std::to_string(lineno));
    }
    double w = 1.0;
    ls >> w;
    std::string trailing;
    if (ls >> trailing)
      throw std::invalid_argument("edgelist: trailing tokens at line " + std::to_string(lineno));
    edges.push_back({static_cast<Index>(u), static_cast<Index>(v), w});
  }
  if (n < 0) throw std::invalid_argument("edgelist: missing header");
  if (static_cast<long>(edges.size()) != expected)
    throw std::invalid_argument("edgelist: header declares " + std::to_string(expected) +
                                " edges, found " + std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

inline Graph read_edgelist(const std::string& text) {
  std::istringstream in(text);
  return read_edgelist(in);
}

inline Graph canonicalized(const Graph& g) {
  std::vector<Graph::Edge> edges = g.edges();
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const Graph::Edge& a, const Graph::Edge& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  return Graph(g.order(), std::move(edges));
}

inline std::string write_edgelist(const Graph& g) {
  const Graph c = canonicalized(g);
  std::string out = std::to_string(c.order()) + " " + std::to_string(c.edge_count()) + "\n";
  char buf[64];
  for (const auto& e : c.edges()) {
    std::snprintf(buf, sizeof(buf), "%lld %lld %.17g\n",
                  static_cast<long long>(e.u), static_cast<long long>(e.v), e.w);
    out += buf;
  }
  return out;
}

}  // namespace spectre
