#include "gaprig/moment/sigma.hpp"

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

// i Σ_ab M_ab [p_a, τ p_b]
SparseVec sigma_from_weights(const LieModel& m, const Matrix& weights) {
  SparseVec s;
  for (int a = 0; a < m.p_count(); ++a)
    for (int b = 0; b < m.p_count(); ++b)
      if (!weights(a, b).is_zero()) sparse_axpy(s, weights(a, b) * Scalar::i(), m.bracket_tau(a, b));
  return s;
}

// M = V (G^{-1})^T V^*
Matrix plane_weights(const Plane& plane) {
  const LieModel& m = plane.model();
  const int p = plane.dim(), d = m.p_count();
  Matrix gi = inverse(plane.gram());
  Matrix w(d, d);
  const auto& v = plane.vectors();
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) {
      const Scalar& g = gi(k, j);
      if (g.is_zero()) continue;
      for (int a = 0; a < d; ++a) {
        if (v[j][a].is_zero()) continue;
        Scalar ga = v[j][a] * g;
        for (int b = 0; b < d; ++b)
          if (!v[k][b].is_zero()) w(a, b).add_mul(ga, v[k][b].conj());
      }
    }
  return w;
}

Scalar decompose_c(const LieModel& m, const SparseVec& s, const Matrix& h0) {
  SparseVec hc = m.coords(h0);
  return m.killing_coords(s, hc) / m.killing_coords(hc, hc);
}

// [Σ, v] in p+ coordinates
Vec ad_sigma(const LieModel& m, const SparseVec& s, const Vec& v) {
  SparseVec acc;
  for (const auto& [a, sa] : s)
    for (int c = 0; c < m.p_count(); ++c)
      if (!v[c].is_zero()) sparse_axpy(acc, sa * v[c], m.ad(a, m.pplus_index(c)));
  Vec out(m.p_count());
  for (const auto& [idx, val] : acc) {
    if (idx < m.k_count() || idx >= m.k_count() + m.p_count())
      throw InvariantError("[k, p+] left p+");
    out[idx - m.k_count()] = val;
  }
  return out;
}

}  // namespace

MomentValue sigma(const Plane& plane) {
  const LieModel& m = plane.model();
  MomentValue mv;
  if (plane.dim() == 0) {
    mv.value = Matrix(m.n(), m.n());
    mv.c = 0;
    mv.sigma_prime = mv.value;
    return mv;
  }
  mv.k_coords = sigma_from_weights(m, plane_weights(plane));
  for (const auto& [a, v] : mv.k_coords)
    if (a >= m.k_count()) throw InvariantError("Σ left k");
  mv.value = m.element(mv.k_coords);
  mv.c = decompose_c(m, mv.k_coords, m.H0());
  mv.sigma_prime = mv.value - m.H0() * mv.c;
  return mv;
}

Scalar k_norm2(const LieModel& m, const Matrix& x) { return -m.killing(x, m.tau(x)); }

Scalar sigma_norm2(const Plane& plane) {
  if (plane.dim() == 0) return Scalar(0);
  const LieModel& m = plane.model();
  SparseVec s = sigma(plane).k_coords;
  // Σ is τ-fixed, so h(Σ,Σ) = -B(Σ,Σ)
  return -m.killing_coords(s, s);
}

Scalar c_omega(const LieModel& m) {
  if (!m.spec().irreducible()) throw DomainError("c_omega needs an irreducible model; use c_omega_factors");
  return c_omega_factors(m).front();
}

std::vector<Scalar> c_omega_factors(const LieModel& m) {
  std::vector<Scalar> out;
  auto self = get_model(m.spec());
  for (size_t f = 0; f < m.blocks().size(); ++f) {
    const BlockInfo& blk = m.blocks()[f];
    std::vector<Vec> vs;
    for (int a = 0; a < blk.pplus_count; ++a) {
      Vec v(m.p_count());
      v[blk.pplus_begin + a] = 1;
      vs.push_back(std::move(v));
    }
    Plane pl(self, vs);
    SparseVec s = sigma_from_weights(m, plane_weights(pl));
    const Matrix& h = m.factor_H0()[f];
    Scalar c = decompose_c(m, s, h);
    if (m.element(s) != h * c) throw InvariantError("Σ(p+) not collinear with H0 in " + blk.factor.str());
    out.push_back(c);
  }
  return out;
}

bool is_critical(const Plane& plane) {
  if (plane.dim() == 0) return true;
  const LieModel& m = plane.model();
  SparseVec s = sigma(plane).k_coords;
  std::vector<Vec> cols = plane.vectors();
  for (const auto& v : plane.vectors()) cols.push_back(ad_sigma(m, s, v));
  return pplus_rank(cols) == plane.dim();
}

bool sigma_collinear_h0(const Plane& plane) { return sigma(plane).sigma_prime.is_zero(); }

Scalar sigma_norm2_lower_bound(const LieModel& m, int p) {
  // B(Σ, H0) = -p for every p-plane, so c = -p / B(H0,H0) and the bound is c²·(-B(H0,H0)).
  Scalar bhh = m.killing(m.H0(), m.H0());
  Scalar c = Scalar(-p) / bhh;
  return -(c * c * bhh);
}

Scalar grad_norm2(const Plane& plane, const std::vector<Vec>& w) {
  const LieModel& m = plane.model();
  const int p = plane.dim(), d = m.p_count();
  if (static_cast<int>(w.size()) != p) throw DomainError("grad_norm2: one direction per spanning vector");
  for (const auto& wj : w) {
    if (static_cast<int>(wj.size()) != d) throw DomainError("grad_norm2: direction length");
    for (const auto& vk : plane.vectors())
      if (!m.herm_coords(wj, vk).is_zero()) throw DomainError("grad_norm2: direction not orthogonal to the plane");
  }
  if (p == 0) return Scalar(0);
  Matrix gi = inverse(plane.gram());
  const auto& v = plane.vectors();
  // dM = W G^{-T} V^* + V G^{-T} W^*
  Matrix dm(d, d);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) {
      const Scalar& g = gi(k, j);
      if (g.is_zero()) continue;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          if (!w[j][a].is_zero() && !v[k][b].is_zero()) dm(a, b).add_mul(w[j][a] * g, v[k][b].conj());
          if (!v[j][a].is_zero() && !w[k][b].is_zero()) dm(a, b).add_mul(v[j][a] * g, w[k][b].conj());
        }
    }
  SparseVec s = sigma(plane).k_coords;
  SparseVec ds = sigma_from_weights(m, dm);
  // f = -B(Σ, Σ) for real Σ; df = -2 B(Σ, dΣ)
  return Scalar(-2) * m.killing_coords(s, ds);
}

}  // namespace gaprig
