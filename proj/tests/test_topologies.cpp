#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "spectre/connectivity.hpp"
#include "spectre/spectral.hpp"
#include "spectre/topologies.hpp"

using namespace spectre;

namespace {

constexpr double kPi = 3.14159265358979323846;

// multiset of undirected (u,v,w) triples for structural equality
std::multiset<std::tuple<Index, Index, double>> edge_multiset(const Graph& g) {
  std::multiset<std::tuple<Index, Index, double>> s;
  for (const auto& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  return s;
}

}  // namespace

TEST_CASE("hypercube") {
  const Graph q3 = hypercube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(degree_profile(q3).regularity == 3.0);
  CHECK(algebraic_connectivity(q3) == doctest::Approx(2.0));

  const Graph q1 = hypercube(1);
  CHECK(q1.order() == 2);
  CHECK(q1.edge_count() == 1);
  CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
}

TEST_CASE("grid") {
  const Graph q3 = grid({2, 2, 2});
  CHECK(spectra_equal(eigenvalues_symmetric(adjacency_matrix(q3)),
                      eigenvalues_symmetric(adjacency_matrix(hypercube(3))), 1e-9));

  CHECK(algebraic_connectivity(grid({3, 3})) == doctest::Approx(2.0 - 2.0 * std::cos(kPi / 3)));

  const Graph p5 = grid({5});
  CHECK(p5.order() == 5);
  CHECK(p5.edge_count() == 4);
  CHECK_THROWS_AS(grid({1, 3}), std::invalid_argument);
}

TEST_CASE("torus") {
  const Graph t = torus(4, 2);
  CHECK(t.order() == 16);
  CHECK(degree_profile(t).regularity == 4.0);
  CHECK(algebraic_connectivity(t) == doctest::Approx(2.0));

  const Graph c3 = torus(3, 1);
  CHECK(c3.order() == 3);
  CHECK(c3.edge_count() == 3);

  const Graph t52 = torus(5, 2);
  CHECK(t52.order() == 25);
  CHECK(t52.edge_count() == 50);
  CHECK(degree_profile(t52).regularity == 4.0);

  CHECK_THROWS_AS(torus(2, 2), std::invalid_argument);
}

TEST_CASE("butterfly") {
  const Graph b23 = butterfly(2, 3);
  CHECK(b23.order() == 24);
  CHECK(degree_profile(b23).is_regular);
  CHECK(degree_profile(b23).regularity == 4.0);

  const Graph b33 = butterfly(3, 3);
  CHECK(b33.order() == 81);
  CHECK(degree_profile(b33).regularity == 6.0);

  // s = 2 keeps the doubled straight edges as multi-edges
  const Graph b22 = butterfly(2, 2);
  CHECK(degree_profile(b22).regularity == 4.0);
  bool has_parallel = false;
  std::map<std::pair<Index, Index>, int> count;
  for (const auto& e : b22.edges()) ++count[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  for (const auto& [k, c] : count)
    if (c > 1) has_parallel = true;
  CHECK(has_parallel);
}

TEST_CASE("data vortex") {
  const Graph dv = data_vortex(4, 3);
  CHECK(dv.order() == 48);
  const auto prof = degree_profile(dv);
  CHECK(prof.is_regular);
  CHECK(prof.regularity == 4.0);

  // the raw graph (loops stripped) has degree 3 on the outer and inner rings
  std::vector<Graph::Edge> raw;
  for (const auto& e : dv.edges())
    if (e.u != e.v) raw.push_back(e);
  const auto rawprof = degree_profile(Graph(dv.order(), raw));
  CHECK(rawprof.min == 3.0);
  CHECK(rawprof.max == 4.0);
  // deficient vertices are exactly the rings c = 0 and c = C-1
  for (Index v = 0; v < dv.order(); ++v) {
    const Index c = v / 4 % 3;
    CHECK(rawprof.degrees[v] == ((c == 0 || c == 2) ? 3.0 : 4.0));
  }

  CHECK(data_vortex(3, 2).order() == 12);
  CHECK_THROWS_AS(data_vortex(2, 3), std::invalid_argument);
}

TEST_CASE("cube connected cycles") {
  const Graph c = ccc(3);
  CHECK(c.order() == 24);
  CHECK(degree_profile(c).is_regular);
  CHECK(degree_profile(c).regularity == 3.0);
  CHECK(is_connected(c));
  // rho2 equals 3 minus the top eigenvalue of the one-negative-loop cycle
  // variant; 2(1 - cos(pi/(d+2))) approximates it from below, with the ratio
  // shrinking toward 1 as d grows
  double prev_ratio = 2.0;
  for (int d : {3, 4, 5, 6}) {
    Matrix variant = adjacency_matrix(cycle_graph(d));
    variant.diagonal().array() += 1.0;
    variant(0, 0) -= 2.0;
    const Spectrum vs = eigenvalues_symmetric(variant);
    const double rho2 = algebraic_connectivity(ccc(d));
    CHECK(rho2 == doctest::Approx(3.0 - vs[vs.size() - 1]).epsilon(1e-9));
    const double ratio = rho2 / (2.0 * (1.0 - std::cos(kPi / (d + 2))));
    CHECK(ratio > 1.0);
    CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
  }

  // single-vertex base gives the hypercube
  const Graph k1(1, {});
  CHECK(edge_multiset(cube_connected(k1, 3)) == edge_multiset(hypercube(3)));
}

TEST_CASE("cc spectrum factor oracle") {
  for (int d : {3, 4}) {
    const Spectrum via_factors = cc_spectrum_via_factors(cycle_graph(d), d);
    const Spectrum direct = eigenvalues_symmetric(adjacency_matrix(ccc(d)));
    CHECK(spectra_equal(via_factors, direct, 1e-7));
  }
  // d = 1 base K_1: CC(K_1,1) = K_2 with spectrum {-1, 1}
  const Spectrum s = cc_spectrum_via_factors(Graph(1, {}), 1);
  CHECK(spectra_equal(s, sorted_spectrum({-1, 1}), 1e-12));

  // second largest eigenvalue comes from the single-negative-loop variant
  const Graph c3 = cycle_graph(3);
  Matrix variant = adjacency_matrix(c3);
  variant(0, 0) -= 1.0;
  variant(1, 1) += 1.0;
  variant(2, 2) += 1.0;
  const Spectrum vs = eigenvalues_symmetric(variant);
  const Spectrum full = eigenvalues_symmetric(adjacency_matrix(ccc(3)));
  CHECK(full[full.size() - 2] == doctest::Approx(vs[vs.size() - 1]).epsilon(1e-8));
}

TEST_CASE("clex") {
  const Graph c32 = clex(3, 2);
  CHECK(c32.order() == 9);
  const auto prof = degree_profile(c32);
  CHECK(prof.is_regular);
  CHECK(prof.regularity == 8.0);  // t + 2k(l-1) = 2 + 6

  CHECK(edge_multiset(clex(4, 1)) == edge_multiset(complete_graph(4)));

  for (auto [k, l, reg] : std::initializer_list<std::tuple<Index, int, double>>{
           {3, 3, 14.0}, {4, 2, 11.0}, {2, 3, 9.0}}) {
    const auto p = degree_profile(clex(k, l));
    CHECK(p.is_regular);
    CHECK(p.regularity == reg);
  }
}

TEST_CASE("clex coupling matrix spectrum") {
  CHECK(spectra_equal(clex_m_spectrum(2), sorted_spectrum({-2, 0, 2, 4}), 1e-12));
  CHECK(spectra_equal(clex_m_spectrum(3), sorted_spectrum({-3, -3, 0, 0, 0, 0, 3, 3, 6}), 1e-12));
  for (Index k : {2, 3, 4, 5, 6})
    CHECK(spectra_equal(clex_m_spectrum(k), eigenvalues_symmetric(clex_coupling_matrix(k)), 1e-8));
}

TEST_CASE("clex matches the kronecker description") {
  // adjacency(clex(k,l)) = A_Kk (x) I + sum_j I (x) M (x) I
  for (auto [k, l] : std::initializer_list<std::pair<Index, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    Index n = 1;
    for (int i = 0; i < l; ++i) n *= k;
    Matrix expect = Matrix::Zero(n, n);
    const Matrix ak = adjacency_matrix(complete_graph(k));
    const Matrix m = clex_coupling_matrix(k);
    // leading-coordinate term
    const Index lead = n / k;
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j)
        if (ak(i, j) != 0.0)
          for (Index r = 0; r < lead; ++r) expect(i * lead + r, j * lead + r) += ak(i, j);
    for (int pos = 0; pos + 1 < l; ++pos) {
      Index high = 1;
      for (int i = 0; i < pos; ++i) high *= k;
      Index low = 1;
      for (int i = pos + 2; i < l; ++i) low *= k;
      for (Index h = 0; h < high; ++h)
        for (Index a = 0; a < k * k; ++a)
          for (Index b = 0; b < k * k; ++b)
            if (m(a, b) != 0.0)
              for (Index r = 0; r < low; ++r)
                expect((h * k * k + a) * low + r, (h * k * k + b) * low + r) += m(a, b);
    }
    CHECK((adjacency_matrix(clex(k, l)) - expect).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("g-connected-h") {
  // CCC(d) is Q_d connected C_d with the generator-to-cycle-vertex rule
  for (int d : {3, 4}) {
    const Graph q = hypercube(d);
    const BlockRule bit_rule = [](Index u, Index v) {
      Index diff = u ^ v, bit = 0;
      while (!(diff & 1)) {
        diff >>= 1;
        ++bit;
      }
      return bit;
    };
    const Graph gh = g_conn_h(q, cycle_graph(d), 1, bit_rule);
    // relabel (cube vertex, cycle pos) -> (cycle pos, cube vertex)
    const Index heights = Index(1) << d;
    std::vector<Graph::Edge> relabeled;
    for (const auto& e : gh.edges())
      relabeled.push_back({(e.u % d) * heights + e.u / d, (e.v % d) * heights + e.v / d, e.w});
    CHECK(edge_multiset(Graph(gh.order(), relabeled)) == edge_multiset(ccc(d)));
  }

  // DragonFly(K4) is K5 connected K4 with the default rank rule
  const Graph df = dragonfly(complete_graph(4));
  CHECK(edge_multiset(df) == edge_multiset(g_conn_h(complete_graph(5), complete_graph(4), 1)));

  CHECK_THROWS_AS(g_conn_h(cycle_graph(4), complete_graph(5), 1), std::invalid_argument);
}

TEST_CASE("g-connected-h cross-edge counts") {
  const Graph g = hypercube(3);
  const Graph h = cycle_graph(6);  // t = 2
  const Graph gh = g_conn_h(g, h, 2);
  const auto prof = degree_profile(gh);
  CHECK(prof.is_regular);
  CHECK(prof.regularity == 4.0);  // r + k = 2 + 2

  // e({v} x V_H, {v'} x V_H) = kt for G-edges, 0 otherwise
  Matrix cross = Matrix::Zero(8, 8);
  for (const auto& e : gh.edges()) {
    const Index cu = e.u / 6, cv = e.v / 6;
    if (cu != cv) {
      cross(cu, cv) += e.w;
      cross(cv, cu) += e.w;
    }
  }
  const Matrix expect = 4.0 * adjacency_matrix(g);
  CHECK((cross - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("peterson torus") {
  const Graph pt = peterson_torus(3, 3);
  CHECK(pt.order() == 90);
  CHECK(degree_profile(pt).is_regular);
  CHECK(degree_profile(pt).regularity == 4.0);
  CHECK(is_connected(pt));
  CHECK(algebraic_connectivity(pt) <=
        (4.0 - 3.0 * std::cos(4.0 * kPi / 3) - std::cos(2.0 * kPi / 3)) / 5.0 + 1e-9);

  CHECK_THROWS_AS(peterson_torus(2, 2), std::invalid_argument);
}

TEST_CASE("dragonfly") {
  const Graph df = dragonfly(complete_graph(4));
  CHECK(df.order() == 20);
  CHECK(degree_profile(df).is_regular);
  CHECK(degree_profile(df).regularity == 4.0);
  CHECK(is_connected(df));
  CHECK(algebraic_connectivity(df) <= 1.0 + 1.0 / 4.0 + 1e-9);

  CHECK_THROWS_AS(dragonfly(path_graph(3)), std::invalid_argument);
}

TEST_CASE("slimfly") {
  const Graph sf5 = slimfly(5);
  CHECK(sf5.order() == 50);
  CHECK(degree_profile(sf5).is_regular);
  CHECK(degree_profile(sf5).regularity == 7.0);
  CHECK(std::abs(algebraic_connectivity(sf5) - 5.0) < 1e-6);

  const Graph sf9 = slimfly(9);
  CHECK(sf9.order() == 162);
  CHECK(degree_profile(sf9).regularity == 13.0);

  CHECK_THROWS_AS(slimfly(7), std::invalid_argument);
  CHECK_THROWS_AS(slimfly(6), std::invalid_argument);
}

TEST_CASE("lps graphs") {
  const Graph x = lps_graph(5, 13);
  CHECK(x.order() == 120);
  CHECK(degree_profile(x).regularity == 14.0);
  CHECK(is_connected(x));
  CHECK(is_bipartite(x));
  CHECK(lambda_nontrivial(x) <= 2.0 * std::sqrt(13.0) + 1e-8);

  // PGL(2,13) instance: vertex count p(p^2-1) = 2184, (q+1)-regular
  const Graph big = lps_graph(13, 5);
  CHECK(big.order() == 2184);
  CHECK(degree_profile(big).regularity == 6.0);
  CHECK(is_bipartite(big));

  CHECK_THROWS_AS(lps_graph(29, 13), std::invalid_argument);  // 12180 vertices, over budget
}

TEST_CASE("fat tree") {
  const Graph ft = fat_tree(4);
  CHECK(ft.order() == 31);
  CHECK(ft.edge_count() == 30);
  double max_w = 0, min_w = 1e9;
  for (const auto& e : ft.edges()) {
    max_w = std::max(max_w, e.w);
    min_w = std::min(min_w, e.w);
  }
  CHECK(max_w == 8.0);  // root edges
  CHECK(min_w == 1.0);  // leaf edges
  CHECK(fat_tree(2).order() == 7);
  CHECK_THROWS_AS(fat_tree(1), std::invalid_argument);
}

TEST_CASE("petersen fixture") {
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(degree_profile(p).regularity == 3.0);
  CHECK(spectra_equal(eigenvalues_symmetric(adjacency_matrix(p)),
                      sorted_spectrum({-2, -2, -2, -2, 1, 1, 1, 1, 1, 3}), 1e-9));
}

TEST_CASE("random regular") {
  const Graph g = random_regular(10, 3, 1);
  CHECK(degree_profile(g).is_regular);
  CHECK(degree_profile(g).regularity == 3.0);
  // simple: no loops, no parallel edges
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : g.edges()) {
    CHECK(e.u != e.v);
    CHECK(seen.insert({e.u, e.v}).second);
  }

  const Graph g2 = random_regular(9, 4, 7);
  CHECK(degree_profile(g2).regularity == 4.0);

  // deterministic under seed
  const Graph h1 = random_regular(12, 3, 99), h2 = random_regular(12, 3, 99);
  CHECK(edge_multiset(h1) == edge_multiset(h2));

  CHECK_THROWS_AS(random_regular(9, 5, 1), std::invalid_argument);
}
