#include "gaprig/lie/curvature.hpp"

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

void require_real_p(const Matrix& x, const LieModel& m) {
  auto c = m.try_coords(x);
  if (!c) throw DomainError("curvature: input outside the algebra");
  for (const auto& [a, v] : *c)
    if (a < m.k_count()) throw DomainError("curvature: input has a k component");
  if (m.tau(x) != x) throw DomainError("curvature: input not in the real form");
}

Scalar curvature_unchecked(const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& w,
                           const LieModel& m) {
  return -m.killing(bracket(bracket(x, y), z), w);
}

}  // namespace

Scalar curvature(const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& w, const LieModel& m) {
  for (const Matrix* v : {&x, &y, &z, &w}) require_real_p(*v, m);
  return curvature_unchecked(x, y, z, w, m);
}

Scalar holomorphic_sectional_curvature(const Matrix& alpha, const LieModel& m) {
  if (!m.in_pplus(alpha)) throw DomainError("holomorphic_sectional_curvature: alpha not in p+");
  Matrix x = alpha + m.tau(alpha);
  Matrix y = bracket(m.H0(), x);  // complex structure J
  Scalar num = curvature(x, y, y, x, m);
  Scalar bxx = m.killing(x, x), byy = m.killing(y, y), bxy = m.killing(x, y);
  Scalar den = bxx * byy - bxy * bxy;
  if (den.is_zero()) throw DomainError("degenerate plane");
  return num / den;
}

Scalar ricci(const Matrix& x, const Matrix& y, const LieModel& m) {
  // Trace over the complex basis p+ u p- of Z -> -[[Z,X],Y].
  Scalar tr;
  for (int a = m.k_count(); a < m.dim(); ++a) {
    Matrix v = -bracket(bracket(m.basis(a), x), y);
    tr += sparse_get(m.coords(v), a);
  }
  return tr;
}

std::vector<Matrix> real_p_basis(const LieModel& m) {
  std::vector<Matrix> out;
  for (int a = 0; a < m.p_count(); ++a) {
    const Matrix& al = m.basis(m.pplus_index(a));
    Matrix t = m.tau(al);
    out.push_back(al + t);
    out.push_back((al - t) * Scalar::i());
  }
  return out;
}

Matrix min_disk_direction(const LieModel& m) {
  if (!m.spec().irreducible()) throw DomainError("min_disk_direction: reducible model");
  const Factor& f = m.spec().factors[0];
  auto e = [&](int a) { return m.basis(m.pplus_index(a)); };
  switch (f.type) {
    case DomainType::I:
    case DomainType::II:
    case DomainType::III:
      return e(0);  // e11 for I and III, e12 for II
    case DomainType::IV:
      // Null direction P1 + i P2; the basis vectors P_k themselves are not minimal.
      return e(0) + e(1) * Scalar::i();
  }
  throw UnsupportedError("min_disk_direction");
}

CurvatureReport einstein_report(const LieModel& m) {
  if (!m.spec().irreducible()) throw DomainError("einstein_report needs an irreducible model");
  CurvatureReport rep;
  // Einstein constant: Ric(b_j, b_k) = rho B(b_j, b_k) on the complex basis of p.
  bool first = true;
  for (int a = m.k_count(); a < m.dim(); ++a)
    for (int b = m.k_count(); b < m.dim(); ++b) {
      Scalar r = ricci(m.basis(a), m.basis(b), m);
      const Scalar& g = m.killing_gram()(a, b);
      if (g.is_zero()) {
        if (!r.is_zero()) throw InvariantError("Ricci not proportional to the metric");
        continue;
      }
      Scalar c = r / g;
      if (first) {
        rep.einstein_killing = c;
        first = false;
      } else if (c != rep.einstein_killing) {
        throw InvariantError("Killing metric is not Einstein");
      }
    }
  Matrix dir = min_disk_direction(m);
  rep.min_disk_curvature = holomorphic_sectional_curvature(dir, m);
  for (int a = 0; a < m.p_count(); ++a) {
    Scalar h = holomorphic_sectional_curvature(m.basis(m.pplus_index(a)), m);
    if (h.re() < rep.min_disk_curvature.re())
      throw InvariantError("designated minimal-disk direction is not minimal");
  }
  rep.rho = rep.einstein_killing * Scalar(-2) / rep.min_disk_curvature;
  const Factor& f = m.spec().factors[0];
  rep.min_disk_direction = f.type == DomainType::IV ? "e1+i*e2" : m.pplus_labels()[0];
  return rep;
}

}  // namespace gaprig
