#include "gaprig/sections/sections.hpp"

#include <algorithm>
#include <numeric>

#include "gaprig/error.hpp"
#include "gaprig/lie/k_group.hpp"

namespace gaprig {

namespace {

SymTensor linear_form(int dim, const SparseVec& c) {
  SymTensor t(1, dim);
  for (const auto& [i, v] : c) t.add({i}, v);
  return t;
}

SymTensor leibniz(const std::vector<std::vector<SymTensor>>& z, int dim) {
  const int r = static_cast<int>(z.size());
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  SymTensor out(r, dim);
  do {
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) inv += perm[i] > perm[j];
    SymTensor term = SymTensor::constant(dim, inv % 2 ? -1 : 1);
    for (int i = 0; i < r && !term.is_zero(); ++i) term = sym_mul(term, z[i][perm[i]]);
    if (!term.is_zero()) out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Pfaffian by expansion along the first row.
SymTensor pfaffian(const std::vector<std::vector<SymTensor>>& z, const std::vector<int>& idx, int dim) {
  if (idx.empty()) return SymTensor::constant(dim, 1);
  SymTensor out(static_cast<int>(idx.size()) / 2, dim);
  for (size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    SymTensor term = sym_mul(z[idx[0]][idx[j]], pfaffian(z, rest, dim));
    out += (j % 2 ? term : term.scaled(-1));
  }
  return out;
}

const Factor& single_factor(const LieModel& m) {
  if (!m.spec().irreducible()) throw DomainError("section needs an irreducible model");
  return m.spec().factors.front();
}

}  // namespace

std::vector<std::vector<SymTensor>> tangent_matrix(const LieModel& m) {
  const Factor& f = single_factor(m);
  const int d = m.p_count();
  int rows = 0, cols = 0, col0 = 0;
  switch (f.type) {
    case DomainType::I:
      rows = f.p, cols = f.q, col0 = f.p;
      break;
    case DomainType::II:
    case DomainType::III:
      rows = cols = col0 = f.p;
      break;
    case DomainType::IV:
      throw DomainError("type IV has no matrix of linear forms; use the quadric");
  }
  std::vector<std::vector<SymTensor>> z(rows, std::vector<SymTensor>(cols, SymTensor(1, d)));
  for (int a = 0; a < d; ++a) {
    const Matrix& b = m.basis(m.pplus_index(a));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!b(i, col0 + j).is_zero()) z[i][j] += linear_form(d, {{a, b(i, col0 + j)}});
  }
  return z;
}

SymTensor det_section(const LieModel& m) {
  const Factor& f = single_factor(m);
  const int d = m.p_count();
  switch (f.type) {
    case DomainType::I:
      if (f.p != f.q) throw DomainError("det_section: I(p,q) with p != q has no determinant");
      return leibniz(tangent_matrix(m), d);
    case DomainType::III:
      return leibniz(tangent_matrix(m), d);
    case DomainType::II: {
      if (f.p % 2) throw DomainError("det_section: II(n) needs n even for the Pfaffian");
      std::vector<int> idx(f.p);
      std::iota(idx.begin(), idx.end(), 0);
      return pfaffian(tangent_matrix(m), idx, d);
    }
    case DomainType::IV: {
      SymTensor q(2, d);
      for (int k = 0; k < d; ++k) q.add({k, k}, 1);
      return q;
    }
  }
  throw UnsupportedError("det_section");
}

SymTensor theta_map(const SymTensor& det, const Vec& v) {
  if (static_cast<int>(v.size()) != det.dim()) throw DomainError("theta_map: vector length");
  SymTensor out(std::max(det.degree() - 1, 0), det.dim());
  for (int a = 0; a < det.dim(); ++a)
    if (!v[a].is_zero()) out += det.derivative(a).scaled(v[a]);
  return out;
}

PolySection tau_section(ModelPtr model, int p, WordWeight weight) {
  const LieModel& m = *model;
  SymTensor det = det_section(m);
  const int d = m.p_count();
  const int r = det.degree();
  if (p == 0) p = r;
  if (p < 1 || p > d) throw DomainError("tau_section: plane dimension out of range");
  const int mdeg = r - 1;
  MonomialIndex monos(d, mdeg);
  SubsetIndex subsets(d, p);
  // θ(e_a) as vectors over the degree-(r-1) monomial basis
  std::vector<AltTensor> theta;
  for (int a = 0; a < d; ++a) {
    Vec coords(monos.size());
    const SymTensor da = det.derivative(a);
    for (const auto& [k, c] : da.coeffs()) coords[monos.id(k)] = c;
    theta.push_back(AltTensor::vector(coords));
  }
  PolySection s;
  s.model = model;
  s.construction = "tau";
  s.m = mdeg;
  s.ell = mdeg + 1;
  s.p = p;
  s.poly = SymTensor(mdeg + 1, subsets.size());
  for (int id = 0; id < subsets.size(); ++id) {
    const Index& I = subsets.subset(id);
    AltTensor w = theta[I[0]];
    for (size_t k = 1; k < I.size() && !w.is_zero(); ++k) w = wedge(w, theta[I[k]]);
    if (w.is_zero()) continue;
    SymTensor nu = shuffle_mu(w, p, mdeg, d, weight);
    if (nu.is_zero()) continue;
    s.poly += sym_mul(SymTensor::variable(subsets.size(), id), nu);
  }
  return s;
}

Vec plucker(const Plane& plane) {
  const int d = plane.model().p_count(), p = plane.dim();
  SubsetIndex subsets(d, p);
  Vec out(subsets.size());
  for (int id = 0; id < subsets.size(); ++id) {
    const Index& I = subsets.subset(id);
    Matrix minor(p, p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) minor(i, j) = plane.vectors()[j][I[i]];
    out[id] = det(minor);
  }
  return out;
}

Scalar evaluate_t(const PolySection& s, const Plane& plane) {
  if (plane.dim() != s.p) throw DomainError("evaluate_t: plane dimension does not match the section");
  if (plane.model().p_count() != s.model->p_count()) throw DomainError("evaluate_t: model mismatch");
  return s.poly.evaluate(plucker(plane));
}

Scalar quadric_discriminant(const Plane& plane) {
  const LieModel& m = plane.model();
  const Factor& f = single_factor(m);
  if (f.type != DomainType::IV) throw DomainError("quadric_discriminant: type IV only");
  const int p = plane.dim();
  if (p < 1 || p >= f.p) throw DomainError("quadric_discriminant: need 1 <= p < n");
  Matrix q(p, p);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < m.p_count(); ++a) q(j, k).add_mul(plane.vectors()[j][a], plane.vectors()[k][a]);
  return det(q);
}

Plane annihilator(const Plane& plane) {
  Matrix rows = Matrix::from_rows(plane.vectors());
  return Plane(plane.model_ptr(), nullspace(rows));
}

Scalar projection_determinant(const Plane& plane, int factor) {
  const LieModel& m = plane.model();
  const BlockInfo& blk = m.blocks().at(factor);
  if (plane.dim() != blk.pplus_count) throw DomainError("projection_determinant: plane and factor dimensions differ");
  Matrix a(plane.dim(), plane.dim());
  for (int i = 0; i < plane.dim(); ++i)
    for (int j = 0; j < plane.dim(); ++j) a(i, j) = plane.vectors()[j][blk.pplus_begin + i];
  return det(a);
}

InvarianceReport k_invariance(const PolySection& s, int samples, int probes, std::mt19937_64& rng) {
  InvarianceReport rep;
  const ModelPtr& model = s.model;
  std::vector<Plane> planes;
  std::vector<Scalar> values;
  for (int tries = 0; static_cast<int>(planes.size()) < probes && tries < 50 * probes; ++tries) {
    Plane pl = random_plane(model, s.p, rng, 2);
    Scalar v = evaluate_t(s, pl);
    if (v.is_zero()) continue;
    planes.push_back(pl);
    values.push_back(v);
  }
  if (planes.empty()) {
    rep.detail = "section vanished on every probe plane";
    return rep;
  }
  for (const Matrix& k : sample_k(*model, samples, rng)) {
    Matrix kinv = inverse(k);
    std::optional<Scalar> chi;
    for (size_t i = 0; i < planes.size(); ++i) {
      Scalar ratio = evaluate_t(s, planes[i].transformed(k, kinv)) / values[i];
      if (!chi) {
        chi = ratio;
      } else if (*chi != ratio) {
        rep.invariant = false;
        rep.detail = "ratio differs across probe planes: " + chi->str() + " vs " + ratio.str();
      }
    }
    rep.characters.push_back(*chi);
  }
  return rep;
}

}  // namespace gaprig
