#include "gaprig/lie/k_group.hpp"

#include "gaprig/error.hpp"

namespace gaprig {

Matrix random_real_k(const LieModel& m, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  SparseVec c;
  for (int a = 0; a < m.k_count(); ++a) {
    Scalar v(mpq_class(dist(rng)), mpq_class(dist(rng)));
    if (!v.is_zero()) c.emplace_back(a, v);
  }
  Matrix y = m.element(c);
  return (y + m.tau(y)) * Scalar::frac(1, 2);
}

Matrix cayley(const Matrix& x) {
  Matrix id = Matrix::identity(x.rows());
  return (id - x) * inverse(id + x);
}

std::vector<Matrix> sample_k(const LieModel& m, int count, std::mt19937_64& rng) {
  std::vector<Matrix> out;
  while (static_cast<int>(out.size()) < count) {
    Matrix x = random_real_k(m, rng);
    if (x.is_zero()) continue;
    out.push_back(cayley(x));
  }
  return out;
}

Matrix adjoint_action(const Matrix& k, const Matrix& k_inv, const Matrix& x) { return k * x * k_inv; }

}  // namespace gaprig
