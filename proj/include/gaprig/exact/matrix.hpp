#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaprig/exact/scalar.hpp"

namespace gaprig {

using Vec = std::vector<Scalar>;

// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  // E_ij with zero-based indices
  static Matrix unit(int n, int i, int j);
  static Matrix diag(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix column(const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<Scalar>& data() const { return a_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const { return transpose().conj(); }
  Scalar trace() const;
  bool is_zero() const;

  Vec col(int j) const;
  Vec flatten() const { return a_; }
  SparseVec sparse_flat() const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix bracket(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& s);
bool vec_is_zero(const Vec& a);

}  // namespace gaprig
