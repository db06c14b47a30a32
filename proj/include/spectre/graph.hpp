#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spectre/types.hpp"

namespace spectre {

/// Undirected weighted multigraph with real-weighted self-loops.
///
/// Loop convention: a self-loop of weight w contributes w to the adjacency
/// diagonal and w to the vertex degree (counted once). Edge order is
/// preserved so serialized output is deterministic.
template <typename Scalar = double>
class BasicGraph {
 public:
  struct Edge {
    Index u;
    Index v;
    Scalar w;
  };

  BasicGraph() = default;

  BasicGraph(Index n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (!std::isfinite(static_cast<double>(e.w)))
        throw std::invalid_argument("graph: non-finite edge weight");
    }
  }

  Index order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Index edge_count() const { return static_cast<Index>(edges_.size()); }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.u == e.v; });
  }

 private:
  Index n_ = 0;
  std::vector<Edge> edges_;
};

using Graph = BasicGraph<double>;

template <typename Scalar>
struct DegreeProfile {
  VectorX<Scalar> degrees;
  Scalar min = Scalar(0);
  Scalar max = Scalar(0);
  bool is_regular = false;
  Scalar regularity = Scalar(0);  // valid only when is_regular
};

/// Per-vertex degrees under the loop convention (loop weight counts once).
template <typename Scalar>
DegreeProfile<Scalar> degree_profile(const BasicGraph<Scalar>& g) {
  DegreeProfile<Scalar> p;
  p.degrees = VectorX<Scalar>::Zero(g.order());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      p.degrees[e.u] += e.w;
    } else {
      p.degrees[e.u] += e.w;
      p.degrees[e.v] += e.w;
    }
  }
  if (g.order() > 0) {
    p.min = p.degrees.minCoeff();
    p.max = p.degrees.maxCoeff();
    p.is_regular = (p.min == p.max);
    if (p.is_regular) p.regularity = p.min;
  }
  return p;
}

/// A(i,j) = total weight between i and j; A(i,i) = total loop weight at i.
template <typename Scalar>
MatrixX<Scalar> adjacency_matrix(const BasicGraph<Scalar>& g) {
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(g.order(), g.order());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      a(e.u, e.u) += e.w;
    } else {
      a(e.u, e.v) += e.w;
      a(e.v, e.u) += e.w;
    }
  }
  return a;
}

/// L = D - A. Loops cancel: they enter D and A equally.
template <typename Scalar>
MatrixX<Scalar> laplacian_matrix(const BasicGraph<Scalar>& g) {
  MatrixX<Scalar> l = -adjacency_matrix(g);
  const auto deg = degree_profile(g).degrees;
  for (Index i = 0; i < g.order(); ++i) l(i, i) += deg[i];
  return l;
}

/// D^{-1/2} L D^{-1/2}; every vertex must have positive degree.
template <typename Scalar>
MatrixX<Scalar> normalized_laplacian(const BasicGraph<Scalar>& g) {
  const auto deg = degree_profile(g).degrees;
  for (Index i = 0; i < g.order(); ++i) {
    if (!(deg[i] > Scalar(0)))
      throw std::invalid_argument("normalized_laplacian: vertex with non-positive degree");
  }
  MatrixX<Scalar> l = laplacian_matrix(g);
  VectorX<Scalar> dinv = deg.array().sqrt().inverse();
  return dinv.asDiagonal() * l * dinv.asDiagonal();
}

/// Cartesian product: vertex (u, u') of G box H maps to index u*|H| + u'.
/// Defined for loop-free factors only.
template <typename Scalar>
BasicGraph<Scalar> cartesian_product(const BasicGraph<Scalar>& g, const BasicGraph<Scalar>& h) {
  if (g.has_loops() || h.has_loops())
    throw std::invalid_argument("cartesian_product: factors must be loop-free");
  const Index nh = h.order();
  std::vector<typename BasicGraph<Scalar>::Edge> edges;
  edges.reserve(g.edges().size() * nh + h.edges().size() * g.order());
  for (Index u = 0; u < g.order(); ++u)
    for (const auto& e : h.edges())
      edges.push_back({u * nh + e.u, u * nh + e.v, e.w});
  for (const auto& e : g.edges())
    for (Index v = 0; v < nh; ++v)
      edges.push_back({e.u * nh + v, e.v * nh + v, e.w});
  return BasicGraph<Scalar>(g.order() * nh, std::move(edges));
}

/// Adds a loop of weight (max degree - deg(v)) to each deficient vertex,
/// making the graph regular under the loop convention.
template <typename Scalar>
BasicGraph<Scalar> regularize_with_loops(const BasicGraph<Scalar>& g) {
  const auto p = degree_profile(g);
  std::vector<typename BasicGraph<Scalar>::Edge> edges = g.edges();
  for (Index v = 0; v < g.order(); ++v) {
    const Scalar deficit = p.max - p.degrees[v];
    if (deficit != Scalar(0)) edges.push_back({v, v, deficit});
  }
  return BasicGraph<Scalar>(g.order(), std::move(edges));
}

}  // namespace spectre
