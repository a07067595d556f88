#include "gaprig/moment/descent.hpp"

#include <cmath>

#include "gaprig/error.hpp"

namespace gaprig {

using cd = std::complex<double>;

FloatMoment::FloatMoment(const LieModel& m) : d_(m.p_count()), kc_(m.k_count()) {
  h_.resize(d_, d_);
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b) h_(a, b) = m.pplus_gram()(a, b).to_complex();
  bk_.resize(kc_, kc_);
  for (int i = 0; i < kc_; ++i)
    for (int j = 0; j < kc_; ++j) bk_(i, j) = m.killing_gram()(i, j).to_complex();
  t_.assign(static_cast<size_t>(d_) * d_, Eigen::VectorXcd::Zero(kc_));
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b)
      for (const auto& [idx, val] : m.bracket_tau(a, b)) {
        if (idx >= kc_) throw InvariantError("[p+, p-] left k");
        t_[a * d_ + b](idx) = val.to_complex();
      }
}

cd FloatMoment::herm(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) const {
  return (a.transpose() * h_ * b.conjugate())(0, 0);
}

CMat FloatMoment::orthonormalize(const CMat& v) const {
  CMat q = v;
  for (int j = 0; j < q.cols(); ++j) {
    for (int k = 0; k < j; ++k) q.col(j) -= herm(q.col(j), q.col(k)) * q.col(k);
    double n = std::sqrt(std::real(herm(q.col(j), q.col(j))));
    if (!(n > 1e-14)) throw NumericError("descent: plane collapsed");
    q.col(j) /= n;
  }
  return q;
}

Eigen::VectorXcd FloatMoment::sigma(const CMat& v) const {
  CMat m = v * v.adjoint();
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(kc_);
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b)
      if (std::abs(m(a, b)) > 0) s += (cd(0, 1) * m(a, b)) * t_[a * d_ + b];
  return s;
}

double FloatMoment::value(const CMat& v) const {
  Eigen::VectorXcd s = sigma(v);
  return -std::real((s.transpose() * bk_ * s)(0, 0));
}

CMat FloatMoment::gradient(const CMat& v) const {
  Eigen::VectorXcd y = bk_ * sigma(v);
  CMat a(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) a(i, j) = cd(0, -2) * y.cwiseProduct(t_[i * d_ + j]).sum();
  // df(W) = Re Σ_j W_jᵀ H conj(Z_j) with Z = conj(H)^{-1} (conj(A) + Aᵀ) V
  CMat z = h_.conjugate().partialPivLu().solve((a.conjugate() + a.transpose()) * v);
  for (int k = 0; k < z.cols(); ++k)
    for (int j = 0; j < v.cols(); ++j) z.col(k) -= herm(z.col(k), v.col(j)) * v.col(j);
  return z;
}

double FloatMoment::directional(const CMat& v, const CMat& w) const {
  CMat z = gradient(v);
  double s = 0;
  for (int j = 0; j < v.cols(); ++j) s += std::real(herm(w.col(j), z.col(j)));
  return s;
}

double FloatMoment::norm(const CMat& w) const {
  double s = 0;
  for (int j = 0; j < w.cols(); ++j) s += std::real(herm(w.col(j), w.col(j)));
  return std::sqrt(s);
}

CMat to_float(const Plane& plane) {
  CMat v(plane.model().p_count(), plane.dim());
  for (int j = 0; j < plane.dim(); ++j)
    for (int a = 0; a < v.rows(); ++a) v(a, j) = plane.vectors()[j][a].to_complex();
  return v;
}

DescentResult descent_flow(const Plane& start, int steps, double step_size, bool keep_planes) {
  if (step_size <= 0) throw DomainError("descent: step size must be positive");
  FloatMoment fm(start.model());
  DescentResult r;
  CMat v = fm.orthonormalize(to_float(start));
  double f = fm.value(v);
  r.values.push_back(f);
  if (keep_planes) r.planes.push_back(v);
  r.step_threshold = step_size;
  for (int it = 0; it < steps; ++it) {
    CMat g = fm.gradient(v);
    r.grad_norm = fm.norm(g);
    if (r.grad_norm < kCriticalTol) {
      r.critical = true;
      break;
    }
    double eta = step_size;
    CMat next;
    double fn = 0;
    for (int tries = 0;; ++tries) {
      next = fm.orthonormalize(v - eta * g);
      fn = fm.value(next);
      if (fn <= f || tries > 60) break;
      eta *= 0.5;
    }
    if (fn > f) break;  // no descent step at machine precision
    r.step_threshold = std::min(r.step_threshold, eta);
    v = next;
    f = fn;
    r.values.push_back(f);
    if (keep_planes) r.planes.push_back(v);
    ++r.steps;
  }
  if (!r.critical) {
    r.grad_norm = fm.norm(fm.gradient(v));
    r.critical = r.grad_norm < kCriticalTol;
  }
  r.terminal_value = f;
  if (!keep_planes) r.planes.push_back(v);
  return r;
}

}  // namespace gaprig
