#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/structure.hpp"

namespace hgs {

/// Dense symmetric adjacency matrix, row-major.
class AdjMatrix {
 public:
  AdjMatrix() = default;
  explicit AdjMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  std::vector<double> multiply(std::span<const double> x) const {
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      const double* r = data_.data() + i * n_;
      for (std::size_t j = 0; j < n_; ++j) acc += r[j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// (A)_ij = sum over edges e containing both i and j of 1/(|e|-1).
/// Accumulates in edge-list order so results are bit-reproducible.
inline AdjMatrix adjacency_matrix(const Hypergraph& g) {
  AdjMatrix a(g.num_vertices());
  for (const auto& e : g.edges()) {
    const double w = 1.0 / static_cast<double>(e.size() - 1);
    for (Vertex i : e)
      for (Vertex j : e)
        if (i != j) a.at(i, j) += w;
  }
  return a;
}

struct SpectralOptions {
  double tol = 1e-12;
  std::size_t max_iter = 200'000;
};

struct SpectrumResult {
  double rho = 0.0;
  std::vector<double> eigenvector;
  // max-norm of A x - rho x
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  // false when the input had several components (rho is the largest)
  bool connected = true;
};

namespace detail {

inline double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

/// Power iteration on A + I/2 from the all-ones vector; the shift keeps the
/// Perron root strictly dominant even when -rho is also an eigenvalue.
/// Meant for irreducible matrices.
inline SpectrumResult power_iteration(const AdjMatrix& a, const SpectralOptions& options = {}) {
  constexpr double shift = 0.5;
  SpectrumResult out;
  const std::size_t n = a.size();
  if (n == 0) {
    out.converged = true;
    return out;
  }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax;
  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    ax = a.multiply(x);
    const double lambda = detail::dot(x, ax);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
    out.rho = lambda;
    out.residual = residual;
    out.iterations = it;
    if (residual <= options.tol) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] + shift * x[i];
    const double len = detail::norm2(x);
    for (double& v : x) v /= len;
  }
  double sum = 0.0;
  for (double v : x) sum += v;
  if (sum < 0)
    for (double& v : x) v = -v;
  out.eigenvector = std::move(x);
  return out;
}

/// Spectral radius of A_G. A disconnected input is solved per component and
/// the largest root returned with connected = false; the eigenvector is the
/// winning component's Perron vector padded with zeros.
inline SpectrumResult spectral_radius(const Hypergraph& g, const SpectralOptions& options = {}) {
  const auto ids = component_ids(g);
  std::size_t components = 0;
  for (auto id : ids) components = std::max(components, id + 1);
  if (components <= 1) return power_iteration(adjacency_matrix(g), options);

  SpectrumResult best;
  best.converged = true;
  best.eigenvector.assign(g.num_vertices(), 0.0);
  bool have = false;
  std::size_t total_iterations = 0;
  for (std::size_t c = 0; c < components; ++c) {
    std::vector<Vertex> others;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (ids[v] != c) others.push_back(v);
    auto part = remove_vertices(g, others);
    auto r = power_iteration(adjacency_matrix(part.graph), options);
    total_iterations += r.iterations;
    best.converged = best.converged && r.converged;
    if (!have || r.rho > best.rho) {
      have = true;
      best.rho = r.rho;
      best.residual = r.residual;
      std::fill(best.eigenvector.begin(), best.eigenvector.end(), 0.0);
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (part.old_to_new[v]) best.eigenvector[v] = r.eigenvector[*part.old_to_new[v]];
    }
  }
  best.iterations = total_iterations;
  best.connected = false;
  return best;
}

inline std::vector<double> principal_eigenvector(const Hypergraph& g, const SpectralOptions& options = {}) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "principal eigenvector needs a connected hypergraph");
  auto r = spectral_radius(g, options);
  if (!r.converged) {
    throw Error(ErrorKind::NotConverged, "residual " + std::to_string(r.residual) + " after " +
                                             std::to_string(r.iterations) + " iterations");
  }
  return r.eigenvector;
}

inline double rayleigh_quotient(const AdjMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw Error(ErrorKind::BadParams, "vector length does not match matrix order");
  const double xx = detail::dot(x, x);
  if (xx == 0.0) throw Error(ErrorKind::ZeroVector, "Rayleigh quotient of the zero vector");
  const auto ax = a.multiply(x);
  return detail::dot(x, ax) / xx;
}

enum class BoundKind { upper, lower, tight, inconclusive };

/// Coordinate-wise certificate for a positive test vector y:
/// A y <= r y proves rho <= r, A y >= r y proves rho >= r.
struct BoundCertificate {
  BoundKind kind = BoundKind::inconclusive;
  double r = 0.0;
  // r y_i - (A y)_i
  std::vector<double> slack;
  bool tight = false;

  bool proves_upper() const { return kind == BoundKind::upper || kind == BoundKind::tight; }
  bool proves_lower() const { return kind == BoundKind::lower || kind == BoundKind::tight; }
};

inline BoundCertificate perron_bound_check(const AdjMatrix& a, std::span<const double> y, double r,
                                           double tol = 1e-9) {
  if (y.size() != a.size()) throw Error(ErrorKind::BadParams, "vector length does not match matrix order");
  for (double v : y)
    if (!(v > 0.0)) throw Error(ErrorKind::NonPositiveVector, "certificate vector must be strictly positive");
  BoundCertificate cert;
  cert.r = r;
  const auto ay = a.multiply(y);
  cert.slack.resize(y.size());
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    cert.slack[i] = r * y[i] - ay[i];
    lo = std::min(lo, cert.slack[i]);
    hi = std::max(hi, cert.slack[i]);
  }
  const bool upper = lo >= -tol;
  const bool lower = hi <= tol;
  cert.tight = upper && lower;
  cert.kind = cert.tight ? BoundKind::tight
              : upper    ? BoundKind::upper
              : lower    ? BoundKind::lower
                         : BoundKind::inconclusive;
  return cert;
}

/// Closed-form spectral radius of the k-th power of a d-regular graph.
inline double regular_power_radius(std::size_t k, std::size_t d) {
  if (k < 3 || d < 1) throw Error(ErrorKind::BadParams, "closed form needs k >= 3 and d >= 1");
  const double kk = static_cast<double>(k);
  const double dd = static_cast<double>(d);
  const double b = kk - 3.0 + dd;
  return (b + std::sqrt(b * b + 4.0 * dd * (kk - 1.0))) / (2.0 * (kk - 1.0));
}

/// Spectral radius of every k-uniform hypercycle, independent of its length.
/// k = 2 gives 2, the ordinary cycle value.
inline double hypercycle_radius(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::BadParams, "hypercycle radius needs k >= 2");
  const double c = static_cast<double>(k) - 1.0;
  return (c + std::sqrt(c * c + 8.0 * c)) / (2.0 * c);
}

/// Entry value of the tight test vector on the fresh vertices of a regular
/// power; 1 on the original vertices.
inline double regular_power_fresh_entry(std::size_t k, std::size_t d) {
  const double t = regular_power_radius(k, d);
  const double kk = static_cast<double>(k);
  return 2.0 / ((kk - 1.0) * t - (kk - 3.0));
}

struct OracleLimits {
  std::size_t max_dimension = 64;
  std::size_t max_sweeps = 100;
};

/// Full spectrum by cyclic Jacobi rotations, ascending. Independent of the
/// power iteration path.
inline std::vector<double> oracle_spectrum(const AdjMatrix& a, const OracleLimits& limits = {}) {
  const std::size_t n = a.size();
  if (n > limits.max_dimension) {
    throw Error(ErrorKind::SearchBudgetExceeded, "oracle limited to order " + std::to_string(limits.max_dimension));
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = a(i, j);
      scale += a(i, j) * a(i, j);
    }
  const double threshold = 1e-30 * std::max(scale, 1.0);
  for (std::size_t sweep = 0; sweep < limits.max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
    if (off <= threshold) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m[p][q];
        if (apq == 0.0) continue;
        const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double mrp = m[r][p];
          const double mrq = m[r][q];
          m[r][p] = c * mrp - s * mrq;
          m[r][q] = s * mrp + c * mrq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double mpr = m[p][r];
          const double mqr = m[q][r];
          m[p][r] = c * mpr - s * mqr;
          m[q][r] = s * mpr + c * mqr;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

inline double max_modulus(std::span<const double> eigenvalues) {
  double best = 0.0;
  for (double v : eigenvalues) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace hgs
