#include "gaprig/exact/linalg.hpp"

#include <algorithm>
#include <map>

#include "gaprig/error.hpp"

namespace gaprig {

Rref rref(Matrix m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Scalar inv = Scalar(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

int rank_of(const std::vector<Vec>& cols) {
  if (cols.empty()) return 0;
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return rank(m);
}

std::vector<Vec> nullspace(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DomainError("solve: rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.reduced(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref rr = rref(aug);
  if (static_cast<int>(rr.pivots.size()) < n || rr.pivots[n - 1] != n - 1)
    throw DomainError("singular matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

Scalar det(Matrix m) {
  if (m.rows() != m.cols()) throw DomainError("det of non-square matrix");
  int n = m.rows();
  Scalar d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = Scalar(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

SpanCoords::SpanCoords(const std::vector<SparseVec>& basis, int length)
    : basis_(basis), length_(length), pivot_of_position_(length, -1) {
  const int d = static_cast<int>(basis.size());
  if (d == 0) return;
  // Rows of bt are the basis vectors; its pivot columns are positions where
  // the basis restricts to an invertible square block.
  Matrix bt(d, length);
  for (int a = 0; a < d; ++a)
    for (const auto& [pos, v] : basis[a]) bt(a, pos) = v;
  Rref rr = rref(bt);
  if (static_cast<int>(rr.pivots.size()) != d) throw DomainError("SpanCoords: dependent basis");
  Matrix block(d, d);  // block(p, a) = basis[a][pivots[p]]
  for (int p = 0; p < d; ++p) {
    pivot_of_position_[rr.pivots[p]] = p;
    for (int a = 0; a < d; ++a) block(p, a) = bt(a, rr.pivots[p]);
  }
  Matrix inv = inverse(block);  // coords = inv * x_P
  inverse_cols_.resize(d);
  for (int p = 0; p < d; ++p)
    for (int a = 0; a < d; ++a)
      if (!inv(a, p).is_zero()) inverse_cols_[p].emplace_back(a, inv(a, p));
}

std::optional<SparseVec> SpanCoords::coords(const SparseVec& x) const {
  std::map<int, Scalar> acc;
  for (const auto& [pos, v] : x) {
    if (pos < 0 || pos >= length_) throw DomainError("SpanCoords: position out of range");
    int p = pivot_of_position_[pos];
    if (p < 0) continue;
    for (const auto& [a, w] : inverse_cols_[p]) acc[a].add_mul(w, v);
  }
  SparseVec c;
  for (auto& [a, v] : acc)
    if (!v.is_zero()) c.emplace_back(a, std::move(v));
  // Reconstruct and compare, so membership is exact.
  SparseVec rebuilt;
  for (const auto& [a, v] : c) sparse_axpy(rebuilt, v, basis_[a]);
  if (rebuilt != x) {
    SparseVec diff = x;
    sparse_axpy(diff, Scalar(-1), rebuilt);
    if (!diff.empty()) return std::nullopt;
  }
  return c;
}

void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second;
      s.add_mul(a, x[j].second);
      if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

Scalar sparse_get(const SparseVec& x, int index) {
  auto it = std::lower_bound(x.begin(), x.end(), index,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != x.end() && it->first == index) return it->second;
  return Scalar(0);
}

}  // namespace gaprig
