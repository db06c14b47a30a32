#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spectre/connectivity.hpp"
#include "spectre/graph.hpp"
#include "spectre/types.hpp"

namespace spectre {

namespace detail {

inline Index eigensolver_max_dim() {
  if (const char* env = std::getenv("SPECTRE_MAX_N")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<Index>(v);
  }
  return 2500;
}

}  // namespace detail

/// All eigenvalues of a symmetric matrix, ascending. Householder
/// tridiagonalization + implicit-shift iteration (Eigen's selfadjoint
/// solver); deterministic.
inline Spectrum eigenvalues_symmetric(const Matrix& m) {
  if (m.rows() == 0) throw std::invalid_argument("eigenvalues_symmetric: empty matrix");
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues_symmetric: not square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");
  if (m.rows() > detail::eigensolver_max_dim())
    throw std::invalid_argument("eigenvalues_symmetric: dimension exceeds guard (set SPECTRE_MAX_N to raise)");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues_symmetric: solver failed to converge");
  return solver.eigenvalues();
}

/// Eigenvalues and eigenvectors (columns), ascending eigenvalue order.
inline std::pair<Spectrum, Matrix> eigenpairs_symmetric(const Matrix& m) {
  if (m.rows() == 0) throw std::invalid_argument("eigenpairs_symmetric: empty matrix");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("eigenpairs_symmetric: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenpairs_symmetric: solver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Max residual ||Mv - lambda v|| over all recovered eigenpairs.
inline double eigenpair_residual(const Matrix& m, const Spectrum& values, const Matrix& vectors) {
  double worst = 0.0;
  for (Index i = 0; i < values.size(); ++i)
    worst = std::max(worst, (m * vectors.col(i) - values[i] * vectors.col(i)).norm());
  return worst;
}

/// Greedy multiset equality on ascending sequences.
inline bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = 1e-7) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

/// True when every value of sub matches a distinct value of full within tol
/// (both ascending; greedy two-pointer matching).
inline bool spectrum_contained(const Spectrum& sub, const Spectrum& full, double tol = 1e-7) {
  Index j = 0;
  for (Index i = 0; i < sub.size(); ++i) {
    while (j < full.size() && full[j] < sub[i] - tol) ++j;
    if (j >= full.size() || std::abs(full[j] - sub[i]) > tol) return false;
    ++j;
  }
  return true;
}

inline Spectrum sorted_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

/// Second-smallest Laplacian eigenvalue rho_2.
inline double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("algebraic_connectivity: need at least 2 vertices");
  return eigenvalues_symmetric(laplacian_matrix(g))[1];
}

/// lambda(G): largest-magnitude adjacency eigenvalue after removing one copy
/// of k, and one copy of -k when the graph is bipartite. Requires a
/// connected regular graph.
inline double lambda_nontrivial(const Graph& g) {
  const auto prof = degree_profile(g);
  if (!prof.is_regular) throw std::invalid_argument("lambda_nontrivial: graph is not regular");
  if (!is_connected(g)) throw std::invalid_argument("lambda_nontrivial: graph is disconnected");
  const Spectrum eigs = eigenvalues_symmetric(adjacency_matrix(g));
  const Index n = eigs.size();
  Index lo = 0, hi = n - 1;
  --hi;  // drop the Perron eigenvalue k
  if (is_bipartite(g)) ++lo;  // drop -k
  double best = 0.0;
  for (Index i = lo; i <= hi; ++i) best = std::max(best, std::abs(eigs[i]));
  return best;
}

inline bool is_ramanujan(const Graph& g) {
  const auto prof = degree_profile(g);
  if (!prof.is_regular || prof.regularity < 2)
    throw std::invalid_argument("is_ramanujan: need a k-regular graph with k >= 2");
  return lambda_nontrivial(g) <= 2.0 * std::sqrt(prof.regularity - 1.0) + 1e-9;
}

/// Alon-Boppana: lambda >= 2 sqrt(k-1) (1 - 2/D) - 2/D for diameter D.
inline double alon_boppana_floor(long k, long diameter) {
  if (k < 2 || diameter < 1) throw std::invalid_argument("alon_boppana_floor: k >= 2, D >= 1");
  const double d = static_cast<double>(diameter);
  return 2.0 * std::sqrt(k - 1.0) * (1.0 - 2.0 / d) - 2.0 / d;
}

/// Limit of the Alon-Boppana floor as the diameter grows.
inline double alon_boppana_limit(long k) {
  if (k < 2) throw std::invalid_argument("alon_boppana_limit: k >= 2");
  return 2.0 * std::sqrt(k - 1.0);
}

/// BW(G) >= rho_2 n / 4.
inline double fiedler_bw_lower(double rho2, long n) {
  if (rho2 < 0 || n < 2) throw std::invalid_argument("fiedler_bw_lower: rho2 >= 0, n >= 2");
  return rho2 * static_cast<double>(n) / 4.0;
}

/// Cheeger-type upper bound sqrt(2 k rho_2) k n / 2, capped by the
/// first-moment bound m/2 = k n / 4.
inline double cheeger_bw_upper(long k, double rho2, long n) {
  const double kn = static_cast<double>(k) * static_cast<double>(n);
  const double cheeger = std::sqrt(2.0 * k * rho2) * kn / 2.0;
  return std::min(cheeger, kn / 4.0);
}

/// diam(G) <= 2 ceil(sqrt(2 Delta / rho_2) log2 n).
inline long alon_milman_diameter_upper(long n, long max_degree, double rho2) {
  if (rho2 <= 0) throw std::invalid_argument("alon_milman_diameter_upper: rho2 must be positive");
  const double bound = std::sqrt(2.0 * max_degree / rho2) * std::log2(static_cast<double>(n));
  return 2 * static_cast<long>(std::ceil(bound));
}

/// diam(G) >= 4 / (n rho_2).
inline double mckay_diameter_lower(long n, double rho2) {
  if (rho2 <= 0) throw std::invalid_argument("mckay_diameter_lower: rho2 must be positive");
  return 4.0 / (static_cast<double>(n) * rho2);
}

/// Tanner: h(G) >= 1 - k / (2k - 2 lambda_2).
inline double tanner_iso_lower(long k, double lambda2) {
  if (lambda2 >= static_cast<double>(k))
    throw std::invalid_argument("tanner_iso_lower: requires lambda2 < k");
  return 1.0 - k / (2.0 * k - 2.0 * lambda2);
}

/// Alon-Milman: lambda_2 <= k - h^2 / (4 + 2 h^2).
inline double lambda2_upper_from_h(long k, double h) {
  if (h < 0) throw std::invalid_argument("lambda2_upper_from_h: h >= 0");
  return k - h * h / (4.0 + 2.0 * h * h);
}

/// Lower bound on the bisection bandwidth of the alpha-fraction active
/// subset of a Ramanujan topology; may be negative (vacuous).
inline double active_subset_bw_bound(long k, long n, double alpha) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("active_subset_bw_bound: alpha in [0,1]");
  const double kd = static_cast<double>(k);
  return (alpha * kd * n / 2.0) *
         (alpha / 2.0 - (2.0 * std::sqrt(kd - 1.0) / kd) * (1.0 - alpha / 2.0));
}

struct DiscrepancyResult {
  double e_xy = 0.0;       // ordered-pair edge count between X and Y
  double deviation = 0.0;  // |e(X,Y) - (k/n)|X||Y||
  double bound = 0.0;      // (2 sqrt(k-1)/n) sqrt(|X|(n-|X|)|Y|(n-|Y|))
  bool holds = false;
};

/// Discrepancy check for a k-regular graph. e(X,Y) counts ordered pairs, so
/// an edge inside the overlap contributes twice and e(V,V) = kn; loops are
/// excluded.
inline DiscrepancyResult discrepancy_check(const Graph& g, const std::vector<Index>& xs,
                                           const std::vector<Index>& ys) {
  const Index n = g.order();
  std::vector<char> in_x(n, 0), in_y(n, 0);
  for (Index v : xs) {
    if (v < 0 || v >= n) throw std::invalid_argument("discrepancy_check: X index out of range");
    in_x[v] = 1;
  }
  for (Index v : ys) {
    if (v < 0 || v >= n) throw std::invalid_argument("discrepancy_check: Y index out of range");
    in_y[v] = 1;
  }
  const auto prof = degree_profile(g);
  if (!prof.is_regular) throw std::invalid_argument("discrepancy_check: graph is not regular");
  const double k = prof.regularity;

  DiscrepancyResult r;
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    if (in_x[e.u] && in_y[e.v]) r.e_xy += e.w;
    if (in_x[e.v] && in_y[e.u]) r.e_xy += e.w;
  }
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  const double nn = static_cast<double>(n);
  r.deviation = std::abs(r.e_xy - k / nn * nx * ny);
  r.bound = 2.0 * std::sqrt(k - 1.0) / nn * std::sqrt(nx * (nn - nx) * ny * (nn - ny));
  r.holds = r.deviation <= r.bound + 1e-9;
  return r;
}

/// Unit eigenvector of L for rho_2, sign fixed so the first entry of
/// magnitude above 1e-12 is positive.
inline Vector fiedler_vector(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("fiedler_vector: graph is disconnected");
  auto [values, vectors] = eigenpairs_symmetric(laplacian_matrix(g));
  Vector v = vectors.col(1);
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

struct SpectralReport {
  Index n = 0;
  double degree_min = 0.0;
  double degree_max = 0.0;
  bool regular = false;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_nontrivial = 0.0;  // meaningful for connected regular graphs
  double rho2 = 0.0;
  double spectral_gap = 0.0;  // lambda1 - lambda2
  double mu2 = 0.0;
  bool ramanujan = false;
  bool bipartite = false;
  bool connected = false;
};

inline SpectralReport spectral_report(const Graph& g) {
  SpectralReport r;
  r.n = g.order();
  const auto prof = degree_profile(g);
  r.degree_min = prof.min;
  r.degree_max = prof.max;
  r.regular = prof.is_regular;
  r.connected = is_connected(g);
  r.bipartite = is_bipartite(g);
  const Spectrum adj = eigenvalues_symmetric(adjacency_matrix(g));
  r.lambda1 = adj[adj.size() - 1];
  r.lambda2 = adj.size() > 1 ? adj[adj.size() - 2] : adj[0];
  if (g.order() >= 2) r.rho2 = algebraic_connectivity(g);
  r.spectral_gap = r.lambda1 - r.lambda2;
  if (prof.min > 0) r.mu2 = eigenvalues_symmetric(normalized_laplacian(g))[std::min<Index>(1, g.order() - 1)];
  if (r.regular && r.connected && prof.regularity >= 2) {
    r.lambda_nontrivial = lambda_nontrivial(g);
    r.ramanujan = is_ramanujan(g);
  }
  return r;
}

}  // namespace spectre
