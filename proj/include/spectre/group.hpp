#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "spectre/field.hpp"
#include "spectre/graph.hpp"
#include "spectre/types.hpp"

namespace spectre {

enum class MatrixGroup { PSL, PGL };

/// 2x2 matrix over GF(p) in projective canonical form, row-major entries.
/// PGL form: first nonzero entry is 1. PSL form: determinant 1 and the
/// representative of {M, -M} whose first nonzero entry is the smaller
/// residue.
struct GroupElement {
  std::array<long, 4> m{};

  bool operator==(const GroupElement& o) const { return m == o.m; }
};

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const {
    size_t h = 0;
    for (long v : g.m) h = h * 1000003u + static_cast<size_t>(v);
    return h;
  }
};

namespace detail {

inline long mod_inverse(long a, long p) {
  const long inv = mod_pow(a, p - 2, p);
  if (a % p == 0) throw std::invalid_argument("mod_inverse: zero is not invertible");
  return inv;
}

inline long mod_sqrt(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  for (long s = 0; s < p; ++s)
    if (s * s % p == a) return s;
  throw std::invalid_argument("mod_sqrt: not a quadratic residue");
}

}  // namespace detail

inline long det_mod(const GroupElement& g, long p) {
  return ((g.m[0] * g.m[3] - g.m[1] * g.m[2]) % p + p) % p;
}

inline GroupElement canonicalize(GroupElement g, MatrixGroup kind, long p) {
  for (auto& v : g.m) v = (v % p + p) % p;
  const long det = det_mod(g, p);
  if (det == 0) throw std::invalid_argument("canonicalize: singular matrix");
  if (kind == MatrixGroup::PGL) {
    for (long v : g.m) {
      if (v != 0) {
        const long inv = detail::mod_inverse(v, p);
        for (auto& w : g.m) w = w * inv % p;
        return g;
      }
    }
  } else {
    // scale determinant to 1 (requires det to be a square mod p)
    const long s = detail::mod_sqrt(detail::mod_inverse(det, p), p);
    for (auto& w : g.m) w = w * s % p;
    for (long v : g.m) {
      if (v != 0) {
        if (v > p - v)
          for (auto& w : g.m) w = (p - w) % p;
        return g;
      }
    }
  }
  throw std::invalid_argument("canonicalize: zero matrix");
}

inline GroupElement multiply(const GroupElement& a, const GroupElement& b, MatrixGroup kind, long p) {
  GroupElement r;
  r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
  r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
  r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
  r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
  return canonicalize(r, kind, p);
}

inline GroupElement inverse(const GroupElement& g, MatrixGroup kind, long p) {
  // projective inverse: the adjugate
  GroupElement r;
  r.m = {g.m[3], p - g.m[1], p - g.m[2], g.m[0]};
  return canonicalize(r, kind, p);
}

/// All canonical elements of PSL(2,p) or PGL(2,p), in lexicographic entry
/// order. |PGL| = p(p^2-1), |PSL| = p(p^2-1)/2.
inline std::vector<GroupElement> group_elements(MatrixGroup kind, long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("group_elements: p must be an odd prime");
  if (p > 31) throw std::invalid_argument("group_elements: size guard p <= 31");
  std::vector<GroupElement> out;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d) {
          GroupElement g{{a, b, c, d}};
          if (det_mod(g, p) == 0) continue;
          if (kind == MatrixGroup::PGL) {
            // canonical iff the first nonzero entry is already 1
            long first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
            if (first != 1) continue;
          } else {
            if (det_mod(g, p) != 1) continue;
            long first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
            if (first > p - first) continue;
          }
          out.push_back(g);
        }
  return out;
}

struct GeneratorSet {
  std::vector<GroupElement> elements;
  MatrixGroup kind = MatrixGroup::PSL;
  long p = 0;
};

/// Integer quadruples (a0,a1,a2,a3) with a0 > 0 odd, a1,a2,a3 even, and
/// a0^2+a1^2+a2^2+a3^2 = q. For prime q = 1 mod 4 there are exactly q+1.
inline std::vector<std::array<long, 4>> sum_of_squares_solutions(long q) {
  if (!is_prime(q) || q % 4 != 1)
    throw std::invalid_argument("sum_of_squares_solutions: q must be a prime = 1 mod 4");
  std::vector<std::array<long, 4>> out;
  std::vector<long> evens;
  for (long v = 0; v * v <= q; v += 2) {
    evens.push_back(v);
    if (v != 0) evens.push_back(-v);
  }
  for (long a0 = 1; a0 * a0 <= q; a0 += 2)
    for (long a1 : evens)
      for (long a2 : evens)
        for (long a3 : evens)
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == q) out.push_back({a0, a1, a2, a3});
  std::sort(out.begin(), out.end());
  return out;
}

/// The q+1 LPS generators in PSL(2,p) when (q|p) = 1, in PGL(2,p) when
/// (q|p) = -1. i is the smallest positive solution of i^2 = -1 mod p.
inline GeneratorSet lps_generators(long p, long q) {
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("lps_generators: p, q must be prime");
  if (p == q) throw std::invalid_argument("lps_generators: p and q must be distinct");
  if (p % 4 != 1 || q % 4 != 1)
    throw std::invalid_argument("lps_generators: p, q must be = 1 mod 4");

  long i2 = -1;
  for (long i = 1; i < p; ++i)
    if (i * i % p == p - 1) {
      i2 = i;
      break;
    }
  if (i2 < 0) throw std::runtime_error("lps_generators: no sqrt(-1) mod p");

  GeneratorSet s;
  s.p = p;
  s.kind = legendre(q, p) == 1 ? MatrixGroup::PSL : MatrixGroup::PGL;
  for (const auto& [a0, a1, a2, a3] : sum_of_squares_solutions(q)) {
    GroupElement g;
    g.m[0] = ((a0 + i2 * a1) % p + p) % p;
    g.m[1] = ((a2 + i2 * a3) % p + p) % p;
    g.m[2] = ((-a2 + i2 * a3) % p + p) % p;
    g.m[3] = ((a0 - i2 * a1) % p + p) % p;
    if (det_mod(g, p) == 0)
      throw std::runtime_error("lps_generators: degenerate generator");
    s.elements.push_back(canonicalize(g, s.kind, p));
  }
  // the set must be closed under inverse for an undirected Cayley graph
  for (const auto& g : s.elements) {
    const GroupElement gi = inverse(g, s.kind, p);
    if (std::find(s.elements.begin(), s.elements.end(), gi) == s.elements.end())
      throw std::runtime_error("lps_generators: generator set not inverse-closed");
  }
  return s;
}

/// Cayley graph over an explicit element list. mul must return canonical
/// elements; S must be inverse-closed and identity-free. Each unordered
/// pair {g, g s} contributes one edge, so involutions count once.
template <typename Elem, typename Hash = std::hash<Elem>, typename Mul>
Graph cayley_graph(const std::vector<Elem>& elements, const std::vector<Elem>& generators,
                   Mul mul) {
  std::unordered_map<Elem, Index, Hash> index(elements.size() * 2);
  for (Index i = 0; i < static_cast<Index>(elements.size()); ++i) index.emplace(elements[i], i);

  std::vector<Graph::Edge> edges;
  for (Index i = 0; i < static_cast<Index>(elements.size()); ++i) {
    for (const Elem& s : generators) {
      const Elem t = mul(elements[i], s);
      const auto it = index.find(t);
      if (it == index.end()) throw std::invalid_argument("cayley_graph: product escapes element list");
      if (it->second == i) throw std::invalid_argument("cayley_graph: identity generator makes loops");
      if (it->second > i) edges.push_back({i, it->second, 1.0});
    }
  }
  return Graph(static_cast<Index>(elements.size()), std::move(edges));
}

/// Spectrum of the Cayley graph on Z_a x Z_b with generator multiset S
/// (inverse-closed): character sums sum_{(s,t) in S} cos(2 pi (x s / a + y t / b)).
inline Spectrum abelian_cayley_spectrum(long a, long b,
                                        const std::vector<std::pair<long, long>>& gens) {
  for (const auto& [s, t] : gens) {
    const auto inv = std::make_pair(((-s) % a + a) % a, ((-t) % b + b) % b);
    const auto norm = std::make_pair((s % a + a) % a, (t % b + b) % b);
    const long have = std::count_if(gens.begin(), gens.end(), [&](auto g) {
      return std::make_pair((g.first % a + a) % a, (g.second % b + b) % b) == norm;
    });
    const long have_inv = std::count_if(gens.begin(), gens.end(), [&](auto g) {
      return std::make_pair((g.first % a + a) % a, (g.second % b + b) % b) == inv;
    });
    if (have != have_inv)
      throw std::invalid_argument("abelian_cayley_spectrum: generator multiset not inverse-closed");
  }
  constexpr double kTwoPi = 6.283185307179586476925;
  std::vector<double> values;
  values.reserve(a * b);
  for (long x = 0; x < a; ++x)
    for (long y = 0; y < b; ++y) {
      double sum = 0.0;
      for (const auto& [s, t] : gens)
        sum += std::cos(kTwoPi * (static_cast<double>(x * s) / a + static_cast<double>(y * t) / b));
      values.push_back(sum);
    }
  std::sort(values.begin(), values.end());
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

}  // namespace spectre
