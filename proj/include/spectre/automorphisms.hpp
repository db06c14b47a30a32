#pragma once

#include <vector>

#include "spectre/field.hpp"
#include "spectre/reduction.hpp"
#include "spectre/topologies.hpp"

namespace spectre {

// Automorphism fixtures for the quotient constructions: each generator list
// is verified against its topology and its orbit structure matches the
// corresponding reduction argument.

/// One generator per coordinate, adding 1 mod k to that coordinate in every
/// layer. Orbits are the s layers.
inline std::vector<Permutation> butterfly_layer_automorphisms(Index k, int s) {
  Index block = 1;
  for (int i = 0; i < s; ++i) block *= k;
  const Index n = s * block;
  std::vector<Permutation> gens;
  for (int coord = 0; coord < s; ++coord) {
    Index stride = 1;
    for (int i = coord + 1; i < s; ++i) stride *= k;
    Permutation p;
    p.image.resize(n);
    for (Index v = 0; v < n; ++v) {
      const Index layer = v / block, word = v % block;
      const Index digit = word / stride % k;
      const Index shifted = word - digit * stride + (digit + 1) % k * stride;
      p.image[v] = layer * block + shifted;
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

/// One generator per height bit. Orbits are the A*C angle/cylinder fibers.
inline std::vector<Permutation> data_vortex_bit_flips(Index A, int C) {
  const Index heights = Index(1) << (C - 1);
  const Index n = A * C * heights;
  std::vector<Permutation> gens;
  for (int bit = 0; bit < C - 1; ++bit) {
    Permutation p;
    p.image.resize(n);
    for (Index v = 0; v < n; ++v)
      p.image[v] = v / heights * heights + (v % heights ^ (Index(1) << bit));
    gens.push_back(std::move(p));
  }
  return gens;
}

/// The shift (b,x,y) -> (b,x,y+zeta) by a primitive element. Its orbit
/// closure gives the 2q fibers of size q.
inline Permutation slimfly_shift(long q) {
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
  if (p == 0) throw std::invalid_argument("slimfly_shift: q must be a prime power");
  const Field f(p, e);
  const long zeta = primitive_element(f);
  Permutation perm;
  perm.image.resize(2 * q * q);
  for (long side = 0; side < 2; ++side)
    for (long x = 0; x < q; ++x)
      for (long y = 0; y < q; ++y)
        perm.image[side * q * q + x * q + y] = side * q * q + x * q + f.add(y, zeta);
  return perm;
}

/// Subtree swaps at every internal vertex of the heap-indexed fat tree.
/// Orbits are the depth levels.
inline std::vector<Permutation> fat_tree_level_automorphisms(int levels) {
  const Index n = (Index(1) << (levels + 1)) - 1;
  std::vector<Permutation> gens;
  for (Index v = 0; 2 * v + 2 < n; ++v) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    // swap the subtrees below v by parallel descent
    std::vector<std::pair<Index, Index>> frontier{{2 * v + 1, 2 * v + 2}};
    while (!frontier.empty()) {
      const auto [l, r] = frontier.back();
      frontier.pop_back();
      p.image[l] = r;
      p.image[r] = l;
      if (2 * l + 2 < n) {
        frontier.push_back({2 * l + 1, 2 * r + 1});
        frontier.push_back({2 * l + 2, 2 * r + 2});
      }
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

}  // namespace spectre
