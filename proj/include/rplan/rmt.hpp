#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rplan/common.hpp"
#include "rplan/random.hpp"

namespace rplan {

// Dense d x d Hermitian matrix (column-major storage is irrelevant at these
// sizes; row-major is used).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int dim)
      : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  std::complex<double>& at(int i, int j) { return entries_[i * dim_ + j]; }
  const std::complex<double>& at(int i, int j) const {
    return entries_[i * dim_ + j];
  }

  std::complex<double> trace() const;
  // Largest deviation |H(i,j) - conj(H(j,i))|.
  double hermiticity_defect() const;

 private:
  int dim_;
  std::vector<std::complex<double>> entries_;
};

// GUE draw: diagonal entries N(0,1); off-diagonal real and imaginary parts
// N(0, 1/2), so the matrix density is proportional to exp(-Tr H^2 / 2).
HermitianMatrix sample_gue(int d, RandomStream& rng);

// Traceless GUE draw: B = A - (Tr A / d) I with A a GUE draw.
HermitianMatrix sample_gue0(int d, RandomStream& rng);

// All eigenvalues, sorted descending. Implemented by embedding into the
// 2d x 2d real symmetric matrix [[Re, -Im], [Im, Re]] and running cyclic
// Jacobi rotations; the doubled spectrum is deduplicated.
// Throws std::invalid_argument if the input is not Hermitian within 1e-12.
std::vector<double> eigenvalues(const HermitianMatrix& h);

// Unnormalized joint eigenvalue density on the zero-sum hyperplane:
//   exp(-(x_1^2+...+x_d^2)/2) * prod_{i<j} (x_i - x_j)^2.
// Requires sum x_i = 0 within 1e-9 and x weakly decreasing.
double gue0_density(std::span<const double> x);

// Normalization constant of the joint density over the ordered region of
// the hyperplane, with respect to (d-1)-dimensional surface measure in an
// orthonormal parametrization. Supported for 2 <= d <= 4.
double normalization_constant(int d);

// P(x_1 <= t) for the d = 2 traceless ensemble:
//   erf(t) - (2/sqrt(pi)) t exp(-t^2) for t >= 0, else 0.
double largest_eig_cdf_d2(double t);

}  // namespace rplan
