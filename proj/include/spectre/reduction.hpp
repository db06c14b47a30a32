#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spectre/graph.hpp"
#include "spectre/spectral.hpp"

namespace spectre {

/// Bijection on {0..n-1} given by its image sequence.
struct Permutation {
  std::vector<Index> image;

  Index size() const { return static_cast<Index>(image.size()); }
};

inline void validate_permutation(const Permutation& p, Index n) {
  if (p.size() != n) throw std::invalid_argument("permutation: wrong length");
  std::vector<char> seen(n, 0);
  for (Index v : p.image) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("permutation: not a bijection");
    seen[v] = 1;
  }
}

struct OrbitPartition {
  std::vector<Index> orbit_of;  // orbit id per vertex, ids are 0..count-1
  std::vector<Index> sizes;

  Index count() const { return static_cast<Index>(sizes.size()); }
};

/// Orbits of the group generated by the permutations: connected components
/// of the union of their functional graphs. Orbit ids follow the smallest
/// vertex in each orbit.
inline OrbitPartition orbits(Index n, const std::vector<Permutation>& gens) {
  for (const auto& p : gens) validate_permutation(p, n);
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](Index v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& p : gens)
    for (Index v = 0; v < n; ++v) {
      const Index a = find(v), b = find(p.image[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  OrbitPartition out;
  out.orbit_of.assign(n, -1);
  for (Index v = 0; v < n; ++v) {
    const Index root = find(v);
    if (out.orbit_of[root] < 0) {
      out.orbit_of[root] = out.count();
      out.sizes.push_back(0);
    }
    out.orbit_of[v] = out.orbit_of[root];
    ++out.sizes[out.orbit_of[v]];
  }
  return out;
}

/// True iff the permutation preserves the weighted adjacency relation
/// exactly, loops included.
inline bool check_automorphism(const Graph& g, const Permutation& p) {
  validate_permutation(p, g.order());
  std::map<std::pair<Index, Index>, double> weight;
  for (const auto& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    weight[{key.first, key.second}] += e.w;
  }
  std::map<std::pair<Index, Index>, double> mapped;
  for (const auto& e : g.edges()) {
    const auto key = std::minmax(p.image[e.u], p.image[e.v]);
    mapped[{key.first, key.second}] += e.w;
  }
  return weight == mapped;
}

/// Weighted directed looped quotient graph: weights(i,j) is the total edge
/// weight from any vertex of orbit i into orbit j.
struct QuotientGraph {
  Matrix weights;
  std::vector<Index> orbit_sizes;

  Index count() const { return static_cast<Index>(orbit_sizes.size()); }
};

/// Reduction-Lemma quotient. Every orbit member must yield the same row of
/// orbit weights; a representative-dependent row means the partition is not
/// equitable and raises.
inline QuotientGraph quotient(const Graph& g, const OrbitPartition& parts) {
  if (static_cast<Index>(parts.orbit_of.size()) != g.order())
    throw std::invalid_argument("quotient: partition size mismatch");
  const Index s = parts.count();
  // per-vertex outgoing weight into each orbit (loops contribute once,
  // matching the adjacency diagonal)
  Matrix rows = Matrix::Zero(g.order(), s);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      rows(e.u, parts.orbit_of[e.u]) += e.w;
    } else {
      rows(e.u, parts.orbit_of[e.v]) += e.w;
      rows(e.v, parts.orbit_of[e.u]) += e.w;
    }
  }
  QuotientGraph q;
  q.orbit_sizes = parts.sizes;
  q.weights = Matrix::Zero(s, s);
  std::vector<Index> representative(s, -1);
  for (Index v = 0; v < g.order(); ++v) {
    const Index o = parts.orbit_of[v];
    if (representative[o] < 0) {
      representative[o] = v;
      q.weights.row(o) = rows.row(v);
    } else if ((rows.row(v) - q.weights.row(o)).cwiseAbs().maxCoeff() > 1e-9) {
      throw std::invalid_argument("quotient: orbit rows are representative-dependent");
    }
  }
  return q;
}

/// Haemers-style quotient of an arbitrary vertex partition: entry (i,j)
/// averages the block weight over orbit i rather than requiring equitability.
/// Its eigenvalues interlace the graph's.
inline QuotientGraph quotient_haemers(const Graph& g, const OrbitPartition& parts) {
  if (static_cast<Index>(parts.orbit_of.size()) != g.order())
    throw std::invalid_argument("quotient_haemers: partition size mismatch");
  const Index s = parts.count();
  QuotientGraph q;
  q.orbit_sizes = parts.sizes;
  q.weights = Matrix::Zero(s, s);
  for (const auto& e : g.edges()) {
    const Index ou = parts.orbit_of[e.u], ov = parts.orbit_of[e.v];
    if (e.u == e.v) {
      q.weights(ou, ou) += e.w;
    } else {
      q.weights(ou, ov) += e.w;
      q.weights(ov, ou) += e.w;
    }
  }
  for (Index i = 0; i < s; ++i) q.weights.row(i) /= static_cast<double>(parts.sizes[i]);
  return q;
}

/// Eigenvalues of the quotient through the similarity D^{1/2} B D^{-1/2},
/// which detailed balance n_i B_ij = n_j B_ji makes symmetric.
inline Spectrum quotient_spectrum(const QuotientGraph& q) {
  const Index s = q.count();
  Matrix sym(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) {
      const double balance =
          q.orbit_sizes[i] * q.weights(i, j) - q.orbit_sizes[j] * q.weights(j, i);
      if (std::abs(balance) > 1e-9)
        throw std::invalid_argument("quotient_spectrum: detailed balance violated");
      sym(i, j) = q.weights(i, j) *
                  std::sqrt(static_cast<double>(q.orbit_sizes[i]) / q.orbit_sizes[j]);
    }
  sym = ((sym + sym.transpose()) / 2.0).eval();
  return eigenvalues_symmetric(sym);
}

/// Greedy multiset check that the quotient spectrum embeds in the full one.
inline bool verify_containment(const Spectrum& sub, const Spectrum& full, double tol = 1e-7) {
  return spectrum_contained(sub, full, tol);
}

}  // namespace spectre
