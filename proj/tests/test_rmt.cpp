#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "rplan/rmt.hpp"
#include "rplan/stats.hpp"

using namespace rplan;

namespace {

// Simpson's rule quadrature oracle.
double simpson(const std::function<double(double)>& f, double a, double b,
               int intervals) {
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("sample_gue is Hermitian and seed-deterministic") {
  RandomStream a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    HermitianMatrix ha = sample_gue(4, a);
    HermitianMatrix hb = sample_gue(4, b);
    CHECK(ha.hermiticity_defect() == 0.0);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(ha.at(r, c) == hb.at(r, c));
  }
  CHECK_THROWS_AS(sample_gue(0, a), std::invalid_argument);
}

TEST_CASE("mean Tr H^2 is d^2 for GUE, d^2 - 1 for GUE0") {
  RandomStream rng(17);
  const int d = 3, draws = 100000;
  double sum_gue = 0.0, sum0 = 0.0, sumsq_gue = 0.0, sumsq0 = 0.0;
  for (int i = 0; i < draws; ++i) {
    HermitianMatrix a = sample_gue(d, rng);
    HermitianMatrix b = sample_gue0(d, rng);
    double ta = 0.0, tb = 0.0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        ta += std::norm(a.at(r, c));
        tb += std::norm(b.at(r, c));
      }
    sum_gue += ta;
    sumsq_gue += ta * ta;
    sum0 += tb;
    sumsq0 += tb * tb;
  }
  const double mean_gue = sum_gue / draws;
  const double se_gue =
      std::sqrt((sumsq_gue / draws - mean_gue * mean_gue) / draws);
  CHECK(std::abs(mean_gue - 9.0) < 3 * se_gue);

  const double mean0 = sum0 / draws;
  const double se0 = std::sqrt((sumsq0 / draws - mean0 * mean0) / draws);
  CHECK(std::abs(mean0 - 8.0) < 3 * se0);
}

TEST_CASE("sample_gue0 trace and spectrum-sum invariants") {
  RandomStream rng(23);
  for (int d : {1, 2, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      HermitianMatrix b = sample_gue0(d, rng);
      CHECK(std::abs(b.trace().real()) <= 1e-12 * d);
      CHECK(std::abs(b.trace().imag()) == 0.0);
      auto spec = eigenvalues(b);
      double sum = 0.0;
      for (std::size_t k = 0; k < spec.size(); ++k) {
        sum += spec[k];
        if (k) CHECK(spec[k] <= spec[k - 1]);
      }
      CHECK(std::abs(sum) < 1e-9);
    }
  }
  HermitianMatrix one = sample_gue0(1, rng);
  CHECK(one.at(0, 0) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("eigenvalues: diagonal, 2x2, and scalar examples") {
  HermitianMatrix diag(3);
  diag.at(0, 0) = 2.0;
  diag.at(1, 1) = -1.0;
  diag.at(2, 2) = -1.0;
  auto s = eigenvalues(diag);
  CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s[2] == doctest::Approx(-1.0).epsilon(1e-12));

  HermitianMatrix flip(2);
  flip.at(0, 1) = 1.0;
  flip.at(1, 0) = 1.0;
  auto f = eigenvalues(flip);
  CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(-1.0).epsilon(1e-12));

  HermitianMatrix scalar(1);
  scalar.at(0, 0) = 0.25;
  CHECK(eigenvalues(scalar)[0] == doctest::Approx(0.25));

  HermitianMatrix bad(2);
  bad.at(0, 1) = {1.0, 0.5};
  bad.at(1, 0) = {1.0, 0.5};  // not the conjugate
  CHECK_THROWS_AS(eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("eigenvalue residual against a random Hermitian matrix") {
  RandomStream rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    HermitianMatrix h = sample_gue(5, rng);
    auto spec = eigenvalues(h);
    // Characteristic polynomial sign checks: det(H - x I) via complex LU
    // would be heavy; instead verify Tr and Tr^2 moments match the spectrum.
    std::complex<double> tr = h.trace();
    double frob = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) frob += std::norm(h.at(i, j));
    double s1 = 0.0, s2 = 0.0;
    for (double x : spec) {
      s1 += x;
      s2 += x * x;
    }
    CHECK(s1 == doctest::Approx(tr.real()).epsilon(1e-10));
    CHECK(s2 == doctest::Approx(frob).epsilon(1e-10));
  }
}

TEST_CASE("gue0_density examples") {
  const double v = gue0_density(std::vector<double>{1.0, -1.0});
  CHECK(v == doctest::Approx(4.0 * std::exp(-1.0)).epsilon(1e-12));
  CHECK(v == doctest::Approx(1.471518).epsilon(1e-6));

  CHECK(gue0_density(std::vector<double>{0.0, 0.0}) == 0.0);
  CHECK(gue0_density(std::vector<double>{0.0}) == 1.0);

  CHECK_THROWS_AS(gue0_density(std::vector<double>{1.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gue0_density(std::vector<double>{-1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("normalization constant d=2 equals the 1d quadrature oracle") {
  // Parametrize x = (s/sqrt(2), -s/sqrt(2)), s >= 0: integrand 2 s^2 e^{-s^2/2}.
  const double oracle = simpson(
      [](double s) { return 2.0 * s * s * std::exp(-0.5 * s * s); }, 0.0, 12.0,
      20000);
  const double c2 = normalization_constant(2);
  CHECK(c2 == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(c2 == doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK_THROWS_AS(normalization_constant(1), UnsupportedDimensionError);
  CHECK_THROWS_AS(normalization_constant(5), UnsupportedDimensionError);
}

TEST_CASE("normalized d=2 marginal of x1 integrates to 1") {
  // Closed-form pdf of x1: (4/sqrt(pi)) u^2 e^{-u^2}.
  const double total = simpson(
      [](double u) {
        return 4.0 / std::sqrt(std::numbers::pi) * u * u * std::exp(-u * u);
      },
      0.0, 10.0, 20000);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("normalization constant d=3 and d=4 match ordered-region quadrature") {
  // Direct 2d tensor quadrature over the ordered region for d=3, Helmert
  // coordinates u1 = (x1-x2)/sqrt(2), u2 = (x1+x2-2x3)/sqrt(6).
  auto integrand3 = [](double u1, double u2) {
    const double x1 = u1 / std::sqrt(2.0) + u2 / std::sqrt(6.0);
    const double x2 = -u1 / std::sqrt(2.0) + u2 / std::sqrt(6.0);
    const double x3 = -2.0 * u2 / std::sqrt(6.0);
    if (!(x1 >= x2 && x2 >= x3)) return 0.0;
    const double vsq = (x1 - x2) * (x1 - x2) * (x1 - x3) * (x1 - x3) *
                       (x2 - x3) * (x2 - x3);
    return std::exp(-0.5 * (x1 * x1 + x2 * x2 + x3 * x3)) * vsq;
  };
  const int grid = 1200;
  const double lo = -8.0, hi = 8.0, h = (hi - lo) / grid;
  double direct = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      direct += integrand3(lo + (i + 0.5) * h, lo + (j + 0.5) * h) * h * h;
  CHECK(normalization_constant(3) == doctest::Approx(direct).epsilon(1e-3));
  // Known closed form 4*pi for d=3 pins the quadrature tightly.
  CHECK(normalization_constant(3) ==
        doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-10));
  CHECK(normalization_constant(4) ==
        doctest::Approx(12.0 * std::pow(2.0 * std::numbers::pi, 1.5))
            .epsilon(1e-10));
}

TEST_CASE("d=3 sampler matches quadrature of the normalized density") {
  // E[x1] two ways: Monte Carlo over sampled spectra vs ordered-region
  // quadrature of x1 * density / C_3.
  auto x_of = [](double u1, double u2) {
    return std::array<double, 3>{
        u1 / std::sqrt(2.0) + u2 / std::sqrt(6.0),
        -u1 / std::sqrt(2.0) + u2 / std::sqrt(6.0),
        -2.0 * u2 / std::sqrt(6.0)};
  };
  const int grid = 1600;
  const double lo = -8.0, hi = 8.0, h = (hi - lo) / grid;
  double integral = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      auto x = x_of(lo + (i + 0.5) * h, lo + (j + 0.5) * h);
      if (!(x[0] >= x[1] && x[1] >= x[2])) continue;
      const double vsq = (x[0] - x[1]) * (x[0] - x[1]) * (x[0] - x[2]) *
                         (x[0] - x[2]) * (x[1] - x[2]) * (x[1] - x[2]);
      integral += x[0] *
                  std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2])) *
                  vsq * h * h;
    }
  }
  const double expected_mean = integral / normalization_constant(3);

  RandomStream rng(314);
  const int draws = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double x1 = eigenvalues(sample_gue0(3, rng))[0];
    sum += x1;
    sumsq += x1 * x1;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sumsq / draws - mean * mean) / draws);
  CHECK(std::abs(mean - expected_mean) < std::max(3 * se, 0.01 * expected_mean));
}

TEST_CASE("largest_eig_cdf_d2 examples") {
  CHECK(largest_eig_cdf_d2(0.0) == 0.0);
  CHECK(largest_eig_cdf_d2(-2.0) == 0.0);
  CHECK(largest_eig_cdf_d2(1.0) == doctest::Approx(0.427594).epsilon(1e-5));
  CHECK(largest_eig_cdf_d2(50.0) == doctest::Approx(1.0).epsilon(1e-12));

  // Quadrature oracle: pdf (4/sqrt(pi)) u^2 e^{-u^2} on [0, 1].
  const double oracle = simpson(
      [](double u) {
        return 4.0 / std::sqrt(std::numbers::pi) * u * u * std::exp(-u * u);
      },
      0.0, 1.0, 20000);
  CHECK(largest_eig_cdf_d2(1.0) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("d=2 empirical laws match the analytic CDFs") {
  RandomStream rng(2718);
  const int draws = 50000;
  std::vector<double> x1(draws), chisq(draws);
  for (int i = 0; i < draws; ++i) {
    x1[i] = eigenvalues(sample_gue0(2, rng))[0];
    chisq[i] = 2.0 * x1[i] * x1[i];
  }
  EmpiricalSample sx(x1);
  CHECK(ks_one_sample(sx, largest_eig_cdf_d2) < 0.012);

  // 2 x1^2 against the chi-square(3) CDF = P(chi_3 <= sqrt(s)).
  EmpiricalSample sc(chisq);
  auto chi2_3 = [](double s) {
    if (s <= 0.0) return 0.0;
    const double t = std::sqrt(s);
    return std::erf(t / std::numbers::sqrt2) -
           std::sqrt(2.0 / std::numbers::pi) * t * std::exp(-0.5 * t * t);
  };
  CHECK(ks_one_sample(sc, chi2_3) < 0.012);

  // E[x1] = 2/sqrt(pi).
  double sum = 0.0, sumsq = 0.0;
  for (double v : x1) {
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sumsq / draws - mean * mean) / draws);
  CHECK(std::abs(mean - 2.0 / std::sqrt(std::numbers::pi)) < 3 * se);
}
