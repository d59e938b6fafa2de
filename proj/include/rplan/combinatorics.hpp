#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rplan/common.hpp"
#include "rplan/random.hpp"

namespace rplan {

// Permutation of {1,...,n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// Young diagram: weakly decreasing positive row lengths.
class YoungDiagram {
 public:
  YoungDiagram() = default;  // empty diagram
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int row(int i) const { return i < row_count() ? rows_[i] : 0; }
  int size() const;

  // Serialization used by CSV outputs: comma-separated parts, e.g. "3,1".
  std::string to_string() const;
  static YoungDiagram parse(const std::string& text);

  bool operator==(const YoungDiagram&) const = default;
  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<int> rows_;
};

// Standard Young tableau: labels 1..n, strictly increasing along rows and
// down columns.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  YoungDiagram shape() const;
  int size() const;

  bool operator==(const StandardTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Longest strictly increasing subsequence length, O(n log n) patience piles.
int lis(const Permutation& p);

// Longest strictly decreasing subsequence length.
int lds(const Permutation& p);

// Row-insertion RSK: returns the (insertion, recording) pair; both tableaux
// share a shape and the recording tableau tracks box-creation order.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p);

// Inverse of rsk; throws std::invalid_argument on shape mismatch or
// non-standard input.
Permutation inverse_rsk(const StandardTableau& insertion,
                        const StandardTableau& recording);

// All partitions of n into at most d parts, reverse-lexicographic order.
std::vector<YoungDiagram> partitions(int n, int d);

// Number of standard tableaux via the hook-length formula, exact.
Int hook_count(const YoungDiagram& shape);

// Number of standard tableaux via the d x d determinant
// n! * det[1/(lambda_i - i + j)!] with 1/m! = 0 for m < 0; evaluated
// fraction-free (denominators cleared row-wise, Bareiss elimination).
Int det_count(const YoungDiagram& shape, int d);

// Brute-force count of non-colliding particle trajectories realizing the
// shape: particles start at (d, d-1, ..., 1), one jumps +1 per step, strict
// ordering kept throughout, particle i ends at lambda_i + d - i.
// Guard: |shape| <= 12.
Int path_count_oracle(const YoungDiagram& shape, int d);

// Uniformly random standard tableau of the given shape, by backward corner
// removal with exact hook-count ratios.
StandardTableau sample_syt(const YoungDiagram& shape, RandomStream& rng);

}  // namespace rplan
