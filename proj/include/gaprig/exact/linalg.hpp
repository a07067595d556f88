#pragma once

#include <optional>
#include <vector>

#include "gaprig/exact/matrix.hpp"

namespace gaprig {

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Rref rref(Matrix m);
int rank(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
// Some solution of m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
Matrix inverse(const Matrix& m);
Scalar det(Matrix m);
// Rank of the matrix whose columns are the given vectors.
int rank_of(const std::vector<Vec>& cols);

// Coordinates with respect to a fixed list of independent vectors, using a
// sparse inverse on pivot positions.
class SpanCoords {
 public:
  SpanCoords() = default;
  SpanCoords(const std::vector<SparseVec>& basis, int length);

  int size() const { return static_cast<int>(basis_.size()); }
  int length() const { return length_; }
  // nullopt when x is outside the span
  std::optional<SparseVec> coords(const SparseVec& x) const;

 private:
  std::vector<SparseVec> basis_;
  int length_ = 0;
  std::vector<int> pivot_of_position_;   // position -> pivot slot or -1
  std::vector<SparseVec> inverse_cols_;  // pivot slot -> coefficient column
};

// Accumulate into a sparse vector (kept sorted; zeros dropped).
void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
Scalar sparse_get(const SparseVec& x, int index);

}  // namespace gaprig
