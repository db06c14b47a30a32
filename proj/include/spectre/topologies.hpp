#pragma once

#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectre/field.hpp"
#include "spectre/graph.hpp"
#include "spectre/group.hpp"
#include "spectre/spectral.hpp"

namespace spectre {

inline constexpr Index kMaxTopologyVertices = 10000;

namespace detail {

inline void check_vertex_budget(long long n, const char* what) {
  if (n > kMaxTopologyVertices)
    throw std::invalid_argument(std::string(what) + ": instance exceeds the vertex budget");
}

}  // namespace detail

inline Graph path_graph(Index n) {
  if (n < 1) throw std::invalid_argument("path_graph: n >= 1");
  std::vector<Graph::Edge> e;
  for (Index i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(Index n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3");
  std::vector<Graph::Edge> e;
  for (Index i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(e));
}

inline Graph complete_graph(Index n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n >= 1");
  std::vector<Graph::Edge> e;
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v) e.push_back({u, v, 1.0});
  return Graph(n, std::move(e));
}

/// Q_d: vertex index is the binary coordinate word.
inline Graph hypercube(int d) {
  if (d < 1 || d > 14) throw std::invalid_argument("hypercube: d in [1,14]");
  const Index n = Index(1) << d;
  std::vector<Graph::Edge> e;
  e.reserve(static_cast<size_t>(d) << (d - 1));
  for (Index v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      const Index u = v ^ (Index(1) << b);
      if (u > v) e.push_back({v, u, 1.0});
    }
  return Graph(n, std::move(e));
}

/// P_{k1} box ... box P_{kd}, row-major vertex order over the coordinates.
inline Graph grid(const std::vector<Index>& dims) {
  if (dims.empty()) throw std::invalid_argument("grid: at least one dimension");
  long long total = 1;
  for (Index k : dims) {
    if (k < 2) throw std::invalid_argument("grid: every side must be >= 2");
    total *= k;
    detail::check_vertex_budget(total, "grid");
  }
  Graph g = path_graph(dims[0]);
  for (size_t i = 1; i < dims.size(); ++i) g = cartesian_product(g, path_graph(dims[i]));
  return g;
}

/// C_k box ... box C_k (d factors), 2d-regular on k^d vertices.
inline Graph torus(Index k, int d) {
  if (k < 3) throw std::invalid_argument("torus: k >= 3 (non-degenerate cycles)");
  if (d < 1) throw std::invalid_argument("torus: d >= 1");
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= k;
    detail::check_vertex_budget(total, "torus");
  }
  Graph g = cycle_graph(k);
  for (int i = 1; i < d; ++i) g = cartesian_product(g, cycle_graph(k));
  return g;
}

namespace detail {

inline Index tuple_index(const std::vector<Index>& digits, Index base) {
  Index idx = 0;
  for (Index d : digits) idx = idx * base + d;
  return idx;
}

}  // namespace detail

/// k-ary s-fly butterfly, cyclic layer arrangement. Vertices are
/// (layer, a_0..a_{s-1}) with index layer*k^s + base-k word; layer i connects
/// forward to layer i+1 mod s changing only coordinate i. s = 2 produces
/// parallel straight edges, kept as multi-edges.
inline Graph butterfly(Index k, int s) {
  if (k < 2 || s < 2) throw std::invalid_argument("butterfly: k >= 2 and s >= 2");
  long long ks = 1;
  for (int i = 0; i < s; ++i) {
    ks *= k;
    detail::check_vertex_budget(ks * s, "butterfly");
  }
  const Index block = static_cast<Index>(ks);
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<size_t>(s) * block * k);
  std::vector<Index> digits(s, 0);
  for (Index word = 0; word < block; ++word) {
    Index w = word;
    for (int i = s - 1; i >= 0; --i) {
      digits[i] = w % k;
      w /= k;
    }
    for (int layer = 0; layer < s; ++layer) {
      const Index from = layer * block + word;
      const Index next = (layer + 1) % s;
      const Index digit = digits[layer];
      Index stride = 1;
      for (int i = layer + 1; i < s; ++i) stride *= k;
      const Index base_word = word - digit * stride;
      for (Index x = 0; x < k; ++x)
        edges.push_back({from, next * block + base_word + x * stride, 1.0});
    }
  }
  return Graph(static_cast<Index>(s) * block, std::move(edges));
}

/// Data Vortex on Z_A x Z_C x Z_2^{C-1}, regularized to 4-regular with
/// self-loops on the outer and inner rings. Cylinder transitions do not
/// wrap (c < C-1 only); height-routing edges flip bit c-1 while stepping the
/// angle; the innermost ring c = 0 steps the angle only.
inline Graph data_vortex(Index A, int C) {
  if (A < 3 || C < 2) throw std::invalid_argument("data_vortex: A >= 3 and C >= 2");
  const Index heights = Index(1) << (C - 1);
  const long long n = static_cast<long long>(A) * C * heights;
  detail::check_vertex_budget(n, "data_vortex");
  const auto vid = [&](Index a, Index c, Index h) { return (a * C + c) * heights + h; };
  std::vector<Graph::Edge> edges;
  for (Index a = 0; a < A; ++a)
    for (Index c = 0; c < C; ++c)
      for (Index h = 0; h < heights; ++h) {
        if (c < C - 1) edges.push_back({vid(a, c, h), vid((a + 1) % A, c + 1, h), 1.0});
        if (c > 0) edges.push_back({vid(a, c, h), vid((a + 1) % A, c, h ^ (Index(1) << (c - 1))), 1.0});
        if (c == 0) edges.push_back({vid(a, 0, h), vid((a + 1) % A, 0, h), 1.0});
      }
  return regularize_with_loops(Graph(static_cast<Index>(n), std::move(edges)));
}

/// Cube-connected graph CC(G,d): vertex (v, x) with index v*2^d + x; G-edges
/// within each hypercube coordinate, plus a single cube edge per vertex
/// flipping bit (v mod |V(G)|)... bit j with j = v (mod |V(G)|) for each of
/// the d/|V(G)| aligned blocks, so CC(C_d, d) is 3-regular and CC(K_1, d) = Q_d.
inline Graph cube_connected(const Graph& g, int d) {
  if (d < 1 || d > 14) throw std::invalid_argument("cube_connected: d in [1,14]");
  const Index nv = g.order();
  if (nv < 1) throw std::invalid_argument("cube_connected: base graph is empty");
  if (g.has_loops()) throw std::invalid_argument("cube_connected: base graph must be loop-free");
  const Index heights = Index(1) << d;
  detail::check_vertex_budget(static_cast<long long>(nv) * heights, "cube_connected");
  const auto vid = [&](Index v, Index x) { return v * heights + x; };
  std::vector<Graph::Edge> edges;
  for (Index x = 0; x < heights; ++x)
    for (const auto& e : g.edges()) edges.push_back({vid(e.u, x), vid(e.v, x), e.w});
  for (Index v = 0; v < nv; ++v)
    for (int bit = 0; bit < d; ++bit) {
      if (bit % nv != v % nv) continue;
      for (Index x = 0; x < heights; ++x) {
        const Index y = x ^ (Index(1) << bit);
        if (y > x) edges.push_back({vid(v, x), vid(v, y), 1.0});
      }
    }
  return Graph(nv * heights, std::move(edges));
}

/// Cube-connected cycles: CC(C_d, d), 3-regular on d 2^d vertices.
inline Graph ccc(int d) {
  if (d < 3) throw std::invalid_argument("ccc: d >= 3");
  return cube_connected(cycle_graph(d), d);
}

/// Independent spectrum oracle for CC(G,d) when |V(G)| = d: the union of the
/// spectra of G with one +-1 loop added per vertex, over all sign patterns.
inline Spectrum cc_spectrum_via_factors(const Graph& g, int d) {
  if (g.order() != d)
    throw std::invalid_argument("cc_spectrum_via_factors: base graph must have d vertices");
  if (d < 1 || d > 14) throw std::invalid_argument("cc_spectrum_via_factors: d in [1,14]");
  const Matrix base = adjacency_matrix(g);
  std::vector<double> values;
  values.reserve(static_cast<size_t>(g.order()) << d);
  for (Index signs = 0; signs < (Index(1) << d); ++signs) {
    Matrix m = base;
    for (int i = 0; i < d; ++i) m(i, i) += (signs >> i) & 1 ? 1.0 : -1.0;
    const Spectrum s = eigenvalues_symmetric(m);
    values.insert(values.end(), s.data(), s.data() + s.size());
  }
  return sorted_spectrum(std::move(values));
}

/// The k^2 x k^2 coupling matrix of the CLEX recursion: entry ((i,j),(a,b))
/// is 2 when (a,b) = (j,i), 1 when exactly one of a = j, b = i holds, else 0.
inline Matrix clex_coupling_matrix(Index k) {
  Matrix m = Matrix::Zero(k * k, k * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b) {
          const bool swap_hit = (i == b), cross_hit = (j == a);
          if (swap_hit && cross_hit)
            m(i * k + j, a * k + b) = 2.0;
          else if (swap_hit || cross_hit)
            m(i * k + j, a * k + b) = 1.0;
        }
  return m;
}

/// Closed-form spectrum of the coupling matrix: {2k, k^(k-1), (-k)^(k-1),
/// 0^((k-1)^2)} ascending.
inline Spectrum clex_m_spectrum(Index k) {
  if (k < 2 || k > 20) throw std::invalid_argument("clex_m_spectrum: k in [2,20]");
  std::vector<double> values;
  values.push_back(2.0 * k);
  for (Index i = 0; i < k - 1; ++i) values.push_back(static_cast<double>(k));
  for (Index i = 0; i < k - 1; ++i) values.push_back(-static_cast<double>(k));
  for (Index i = 0; i < (k - 1) * (k - 1); ++i) values.push_back(0.0);
  return sorted_spectrum(std::move(values));
}

/// Generalized CLEX on a t-regular connected base graph: adjacency
/// A_g (x) I + sum_j I (x) M (x) I realized as an undirected multigraph;
/// diagonal coupling entries become loops of weight 2. Regularity is
/// t + 2k(l-1) under the loop convention.
inline Graph clex_general(const Graph& g, int levels) {
  const Index k = g.order();
  if (levels < 1) throw std::invalid_argument("clex_general: l >= 1");
  if (k < 2) throw std::invalid_argument("clex_general: base graph needs >= 2 vertices");
  if (!degree_profile(g).is_regular || !is_connected(g))
    throw std::invalid_argument("clex_general: base graph must be regular and connected");
  long long total = 1;
  for (int i = 0; i < levels; ++i) {
    total *= k;
    detail::check_vertex_budget(total, "clex_general");
  }
  const Index n = static_cast<Index>(total);

  std::vector<Graph::Edge> edges;
  // base graph acts on the leading coordinate
  const Index lead_stride = n / k;
  for (const auto& e : g.edges())
    for (Index rest = 0; rest < lead_stride; ++rest)
      edges.push_back({e.u * lead_stride + rest, e.v * lead_stride + rest, e.w});

  // coupling blocks on each adjacent coordinate pair (p, p+1)
  for (int p = 0; p + 1 < levels; ++p) {
    Index high = 1;
    for (int i = 0; i < p; ++i) high *= k;
    Index low = 1;
    for (int i = p + 2; i < levels; ++i) low *= k;
    const Index pair_stride = low;        // step of the second coordinate
    const Index first_stride = low * k;   // step of the first coordinate
    for (Index hi = 0; hi < high; ++hi)
      for (Index lo = 0; lo < low; ++lo) {
        const Index origin = hi * (first_stride * k) + lo;
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j) {
            const Index u = origin + i * first_stride + j * pair_stride;
            // swap target (j,i): weight 2 (a loop when i = j)
            const Index swapped = origin + j * first_stride + i * pair_stride;
            if (u == swapped)
              edges.push_back({u, u, 2.0});
            else if (u < swapped)
              edges.push_back({u, swapped, 2.0});
            // (a, i) for a != j and (j, b) for b != i: weight 1
            for (Index a = 0; a < k; ++a) {
              if (a == j) continue;
              const Index v = origin + a * first_stride + i * pair_stride;
              if (u < v) edges.push_back({u, v, 1.0});
            }
            for (Index b = 0; b < k; ++b) {
              if (b == i) continue;
              const Index v = origin + j * first_stride + b * pair_stride;
              if (u < v) edges.push_back({u, v, 1.0});
            }
          }
      }
  }
  return Graph(n, std::move(edges));
}

/// CLEX C(k, l) with the complete-graph base.
inline Graph clex(Index k, int levels) {
  if (k < 2) throw std::invalid_argument("clex: k >= 2");
  return clex_general(complete_graph(k), levels);
}

/// Block rule for the cross edges of a G-connected-H product: given the
/// ordered endpoints of a G-edge, returns the block index at the first
/// endpoint. The default ranks the edge among the sorted neighbors of u.
using BlockRule = std::function<Index(Index u, Index v)>;

/// k-fold G-connected-H: |G| copies of H, with kt cross edges per G-edge.
/// Each copy's vertex block b (of size t) serves the b-th incident G-edge of
/// its copy; blocks are joined by the identity pairing repeated k times.
inline Graph g_conn_h(const Graph& g, const Graph& h, Index k, const BlockRule& rule = {}) {
  const auto gprof = degree_profile(g);
  const auto hprof = degree_profile(h);
  if (!gprof.is_regular || gprof.regularity <= 0)
    throw std::invalid_argument("g_conn_h: G must be regular");
  if (!hprof.is_regular) throw std::invalid_argument("g_conn_h: H must be regular");
  if (k < 1) throw std::invalid_argument("g_conn_h: k >= 1");
  const Index d = static_cast<Index>(gprof.regularity);
  if (h.order() % d != 0)
    throw std::invalid_argument("g_conn_h: |V(H)| must be divisible by the degree of G");
  const Index t = h.order() / d;
  detail::check_vertex_budget(static_cast<long long>(g.order()) * h.order(), "g_conn_h");

  // sorted neighbor ranks for the default rule
  std::vector<std::vector<Index>> nbrs(g.order());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) throw std::invalid_argument("g_conn_h: G must be loop-free");
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }
  for (auto& nb : nbrs) std::sort(nb.begin(), nb.end());
  const BlockRule block_of = rule ? rule : [&nbrs](Index u, Index v) {
    const auto& nb = nbrs[u];
    return static_cast<Index>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };

  const Index nh = h.order();
  std::vector<Graph::Edge> edges;
  for (Index v = 0; v < g.order(); ++v)
    for (const auto& e : h.edges()) edges.push_back({v * nh + e.u, v * nh + e.v, e.w});
  for (const auto& e : g.edges()) {
    const Index bu = block_of(e.u, e.v);
    const Index bv = block_of(e.v, e.u);
    if (bu < 0 || bu >= d || bv < 0 || bv >= d)
      throw std::invalid_argument("g_conn_h: block rule out of range");
    for (Index rep = 0; rep < k; ++rep)
      for (Index r = 0; r < t; ++r)
        edges.push_back({e.u * nh + bu * t + r, e.v * nh + bv * t + r, 1.0});
  }
  return Graph(g.order() * nh, std::move(edges));
}

/// DragonFly DF(H) = K_{|H|+1} connected-H with the rank pairing: vertex j of
/// copy i serves the global link to copy (j < i ? j : j+1).
inline Graph dragonfly(const Graph& h) {
  const auto prof = degree_profile(h);
  if (!prof.is_regular) throw std::invalid_argument("dragonfly: H must be regular");
  if (!is_connected(h)) throw std::invalid_argument("dragonfly: H must be connected");
  return g_conn_h(complete_graph(h.order() + 1), h, 1);
}

/// Peterson torus PT(a,b) on triples (x,y,p) with index (x*b + y)*10 + p.
inline Graph peterson_torus(Index a, Index b) {
  if (a < 2 || b < 2) throw std::invalid_argument("peterson_torus: a, b >= 2");
  if (a % 2 == 0 && b % 2 == 0)
    throw std::invalid_argument("peterson_torus: at least one of a, b must be odd");
  detail::check_vertex_budget(10LL * a * b, "peterson_torus");
  static constexpr int kPetersenEdges[15][2] = {{0, 5}, {0, 4}, {0, 1}, {4, 3}, {4, 7},
                                                {5, 9}, {5, 6}, {1, 8}, {1, 2}, {7, 8},
                                                {7, 6}, {8, 9}, {9, 3}, {6, 2}, {3, 2}};
  const auto vid = [&](Index x, Index y, Index p) {
    return (((x % a + a) % a) * b + ((y % b + b) % b)) * 10 + p;
  };
  std::vector<Graph::Edge> edges;
  for (Index x = 0; x < a; ++x)
    for (Index y = 0; y < b; ++y) {
      for (const auto& pe : kPetersenEdges) edges.push_back({vid(x, y, pe[0]), vid(x, y, pe[1]), 1.0});
      edges.push_back({vid(x, y, 6), vid(x, y + 1, 9), 1.0});            // longitudinal
      edges.push_back({vid(x, y, 1), vid(x + 1, y, 4), 1.0});            // latitudinal
      edges.push_back({vid(x, y, 2), vid(x + 1, y + 1, 3), 1.0});        // diagonal
      edges.push_back({vid(x, y, 7), vid(x - 1, y + 1, 8), 1.0});        // reverse diagonal
      edges.push_back({vid(x, y, 0), vid(x + a / 2, y + b / 2, 5), 1.0});  // diameter
    }
  return Graph(10 * a * b, std::move(edges));
}

/// The 10-vertex Petersen graph with the frozen labeling used by the
/// Peterson torus.
inline Graph petersen() {
  std::vector<Graph::Edge> e;
  for (auto [u, v] : std::initializer_list<std::pair<Index, Index>>{{0, 5}, {0, 4}, {0, 1}, {4, 3},
                                                                    {4, 7}, {5, 9}, {5, 6}, {1, 8},
                                                                    {1, 2}, {7, 8}, {7, 6}, {8, 9},
                                                                    {9, 3}, {6, 2}, {3, 2}})
    e.push_back({u, v, 1.0});
  return Graph(10, std::move(e));
}

/// SlimFly SF(q) on {0,1} x F_q x F_q for a prime power q = 1 mod 4:
/// intra-fiber edges from the even/odd power classes of a primitive element,
/// cross edges y = mx + c. (3q-1)/2-regular on 2q^2 vertices.
inline Graph slimfly(long q) {
  long p = 0;
  int e = 0;
  for (long cand = 2; cand <= q; ++cand) {
    if (!is_prime(cand)) continue;
    long power = cand;
    int deg = 1;
    while (power < q) {
      power *= cand;
      ++deg;
    }
    if (power == q) {
      p = cand;
      e = deg;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("slimfly: q must be a prime power");
  if (q % 4 != 1) throw std::invalid_argument("slimfly: q must be = 1 mod 4");
  detail::check_vertex_budget(2LL * q * q, "slimfly");

  const Field f(p, e);
  const long zeta = primitive_element(f);
  std::vector<char> even_class(q, 0), odd_class(q, 0);
  long power = f.one();
  for (long i = 0; i < q - 1; ++i) {
    (i % 2 == 0 ? even_class : odd_class)[power] = 1;
    power = f.mul(power, zeta);
  }

  const auto vid = [&](long side, long x, long y) { return side * q * q + x * q + y; };
  std::vector<Graph::Edge> edges;
  for (long side = 0; side < 2; ++side) {
    const auto& cls = side == 0 ? even_class : odd_class;
    for (long x = 0; x < q; ++x)
      for (long y = 0; y < q; ++y)
        for (long yp = y + 1; yp < q; ++yp)
          if (cls[f.sub(y, yp)]) edges.push_back({vid(side, x, y), vid(side, x, yp), 1.0});
  }
  for (long x = 0; x < q; ++x)
    for (long y = 0; y < q; ++y)
      for (long m = 0; m < q; ++m)
        edges.push_back({vid(0, x, y), vid(1, m, f.sub(y, f.mul(m, x))), 1.0});
  return Graph(2 * q * q, std::move(edges));
}

/// LPS Ramanujan graph X^{p,q}: the Cayley graph of PSL(2,p) or PGL(2,p)
/// with the (q+1)-element generator set.
inline Graph lps_graph(long p, long q) {
  const GeneratorSet s = lps_generators(p, q);
  const long count = s.kind == MatrixGroup::PSL ? p * (p * p - 1) / 2 : p * (p * p - 1);
  if (count > 3000) throw std::invalid_argument("lps_graph: vertex budget exceeded");
  const auto elements = group_elements(s.kind, p);
  return cayley_graph<GroupElement, GroupElementHash>(
      elements, s.elements,
      [&](const GroupElement& a, const GroupElement& b) { return multiply(a, b, s.kind, s.p); });
}

/// Complete binary fat tree with the given number of edge levels; edge
/// weights double toward the root (leaf edges weight 1). Heap indexing,
/// root = 0.
inline Graph fat_tree(int levels) {
  if (levels < 2 || levels > 10) throw std::invalid_argument("fat_tree: levels in [2,10]");
  const Index n = (Index(1) << (levels + 1)) - 1;
  std::vector<Graph::Edge> edges;
  for (Index v = 0; 2 * v + 2 < n; ++v) {
    int depth = 0;
    for (Index w = v; w > 0; w = (w - 1) / 2) ++depth;
    const double weight = static_cast<double>(Index(1) << (levels - 1 - depth));
    edges.push_back({v, 2 * v + 1, weight});
    edges.push_back({v, 2 * v + 2, weight});
  }
  return Graph(n, std::move(edges));
}

/// Pairing-model random k-regular graph; resamples until simple.
/// Deterministic for a fixed seed.
inline Graph random_regular(Index n, Index k, unsigned seed) {
  if (k >= n) throw std::invalid_argument("random_regular: k < n required");
  if ((n * k) % 2 != 0) throw std::invalid_argument("random_regular: nk must be even");
  std::mt19937_64 rng(seed);
  std::vector<Index> stubs(n * k);
  for (Index v = 0; v < n; ++v)
    for (Index i = 0; i < k; ++i) stubs[v * k + i] = v;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Graph::Edge> edges;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    bool ok = true;
    for (size_t i = 0; i < stubs.size() && ok; i += 2) {
      const Index u = stubs[i], v = stubs[i + 1];
      if (u == v || seen[u][v]) {
        ok = false;
        break;
      }
      seen[u][v] = seen[v][u] = 1;
      edges.push_back({std::min(u, v), std::max(u, v), 1.0});
    }
    if (ok) return Graph(n, std::move(edges));
  }
  throw std::runtime_error("random_regular: sampling failed to produce a simple graph");
}

}  // namespace spectre
