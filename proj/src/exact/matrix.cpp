#include "gaprig/exact/matrix.hpp"

#include <sstream>

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix shape mismatch");
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(int n, int i, int j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::diag(const Vec& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw DomainError("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product not conformable");
  // Row-wise nonzero lists of b keep products of sparse Lie basis elements cheap.
  std::vector<std::vector<int>> nz(b.rows());
  for (int k = 0; k < b.rows(); ++k)
    for (int j = 0; j < b.cols(); ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j : nz[k]) c(i, j).add_mul(x, b(k, j));
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x.conj();
  return m;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of non-square matrix");
  Scalar t;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

SparseVec Matrix::sparse_flat() const {
  SparseVec s;
  for (size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) s.emplace_back(static_cast<int>(k), a_[k]);
  return s;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]\n";
  }
  return os.str();
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != static_cast<int>(v.size())) throw DomainError("matrix-vector not conformable");
  Vec out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i].add_mul(a(i, j), v[j]);
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  Vec c = a;
  for (size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

Vec vec_scale(const Vec& a, const Scalar& s) {
  Vec c = a;
  for (auto& x : c) x *= s;
  return c;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace gaprig
