#include "rplan/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rplan {

namespace {

// Cyclic Jacobi on a dense real symmetric matrix (row-major, size n x n).
// Rotates until the off-diagonal Frobenius norm drops below
// 1e-13 * max(1, ||A||_F). Returns the unsorted diagonal.
std::vector<double> jacobi_symmetric(std::vector<double> a, int n) {
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };
  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double tol = 1e-13 * std::max(1.0, fro);

  for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a[i * n + i];
  return diag;
}

// Gauss-Hermite rule for weight exp(-t^2): nodes from the symmetric
// tridiagonal Jacobi matrix, weights from the orthonormal recurrence.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

HermiteRule gauss_hermite(int m) {
  std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i + 1 < m; ++i) {
    const double b = std::sqrt((i + 1) / 2.0);
    a[i * m + i + 1] = b;
    a[(i + 1) * m + i] = b;
  }
  HermiteRule rule;
  rule.nodes = jacobi_symmetric(std::move(a), m);
  std::sort(rule.nodes.begin(), rule.nodes.end());
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    // Orthonormal Hermite values at the node; weight = 2 / (p_{m-1}')^2
    // reduces to sqrt(pi)-normalized form below.
    const double x = rule.nodes[i];
    double pm1 = 0.0;
    double p = 1.0 / std::pow(std::numbers::pi, 0.25);
    for (int j = 0; j < m; ++j) {
      const double pnext =
          x * std::sqrt(2.0 / (j + 1)) * p - std::sqrt(j / (j + 1.0)) * pm1;
      pm1 = p;
      p = pnext;
    }
    // p is the orthonormal polynomial of degree m at the node (tiny but its
    // derivative relation uses p_{m-1} = pm1).
    const double dp = std::sqrt(2.0 * m) * pm1;
    rule.weights[i] = 2.0 / (dp * dp);
  }
  return rule;
}

double vandermonde_squared(std::span<const double> x) {
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double diff = x[i] - x[j];
      p *= diff * diff;
    }
  return p;
}

}  // namespace

std::complex<double> HermitianMatrix::trace() const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double HermitianMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
  return worst;
}

HermitianMatrix sample_gue(int d, RandomStream& rng) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  HermitianMatrix h(d);
  const double half = std::sqrt(0.5);
  for (int i = 0; i < d; ++i) {
    h.at(i, i) = rng.normal();
    for (int j = i + 1; j < d; ++j) {
      const double re = half * rng.normal();
      const double im = half * rng.normal();
      h.at(i, j) = {re, im};
      h.at(j, i) = {re, -im};
    }
  }
  return h;
}

HermitianMatrix sample_gue0(int d, RandomStream& rng) {
  HermitianMatrix h = sample_gue(d, rng);
  const double shift = h.trace().real() / d;
  for (int i = 0; i < d; ++i) h.at(i, i) -= shift;
  return h;
}

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  const int d = h.dim();
  double scale = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) scale = std::max(scale, std::abs(h.at(i, j)));
  if (h.hermiticity_defect() > 1e-12 * std::max(1.0, scale))
    throw std::invalid_argument("matrix is not Hermitian within tolerance");

  // Real symmetric embedding [[Re, -Im], [Im, Re]]; each eigenvalue of H
  // appears twice.
  const int n = 2 * d;
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const std::complex<double> v = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
      m[i * n + j] = v.real();
      m[i * n + (j + d)] = -v.imag();
      m[(i + d) * n + j] = v.imag();
      m[(i + d) * n + (j + d)] = v.real();
    }
  }
  std::vector<double> all = jacobi_symmetric(std::move(m), n);
  std::sort(all.begin(), all.end(), std::greater<>());
  std::vector<double> out(d);
  for (int i = 0; i < d; ++i) out[i] = all[2 * i];
  return out;
}

double gue0_density(std::span<const double> x) {
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    sumsq += x[i] * x[i];
    if (i + 1 < x.size() && x[i] < x[i + 1])
      throw std::invalid_argument("coordinates must be weakly decreasing");
  }
  if (std::abs(sum) > 1e-9)
    throw std::invalid_argument("coordinates must sum to zero");
  return std::exp(-0.5 * sumsq) * vandermonde_squared(x);
}

double normalization_constant(int d) {
  if (d < 2 || d > 4)
    throw UnsupportedDimensionError("normalization_constant supports 2 <= d <= 4");

  // Orthonormal (Helmert) basis of the zero-sum hyperplane; the integrand
  // exp(-|x|^2/2) * V(x)^2 is a polynomial times a Gaussian in the
  // hyperplane coordinates, so a tensor Gauss-Hermite rule is exact up to
  // roundoff. The full-hyperplane integral is d! times the ordered-region
  // one by symmetry of the integrand.
  const int k = d - 1;
  std::vector<std::vector<double>> basis(k, std::vector<double>(d, 0.0));
  for (int m = 1; m <= k; ++m) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int i = 0; i < m; ++i) basis[m - 1][i] = norm;
    basis[m - 1][m] = -m * norm;
  }

  const HermiteRule rule = gauss_hermite(32);
  const int mnodes = static_cast<int>(rule.nodes.size());
  double total = 0.0;
  std::vector<int> idx(k, 0);
  std::vector<double> x(d);
  for (;;) {
    double w = 1.0;
    std::fill(x.begin(), x.end(), 0.0);
    for (int a = 0; a < k; ++a) {
      const double u = std::numbers::sqrt2 * rule.nodes[idx[a]];
      w *= rule.weights[idx[a]];
      for (int i = 0; i < d; ++i) x[i] += u * basis[a][i];
    }
    total += w * vandermonde_squared(x);

    int a = 0;
    while (a < k && ++idx[a] == mnodes) idx[a++] = 0;
    if (a == k) break;
  }
  const double full = std::pow(std::numbers::sqrt2, k) * total;
  double dfact = 1.0;
  for (int i = 2; i <= d; ++i) dfact *= i;
  return full / dfact;
}

double largest_eig_cdf_d2(double t) {
  if (t <= 0.0) return 0.0;
  return std::erf(t) - (2.0 / std::sqrt(std::numbers::pi)) * t * std::exp(-t * t);
}

}  // namespace rplan
