#include "gaprig/cover/liouville.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gaprig/cover/kernels.hpp"
#include "gaprig/error.hpp"

namespace gaprig {

namespace {

constexpr double kPi = std::numbers::pi;

// Nearest grid indices of p, as integers mod n.
void nearest_index(const TorusSpec& t, cd p, int& pj, int& pk) {
  double s, tt;
  t.coords(p, s, tt);
  const int n = t.n;
  pj = static_cast<int>(std::lround(s * n)) % n;
  pk = static_cast<int>(std::lround(tt * n)) % n;
  if (pj < 0) pj += n;
  if (pk < 0) pk += n;
}

int wrap_dist(int a, int b, int n) {
  int d = std::abs(a - b) % n;
  return std::min(d, n - d);
}

// (−Δ_h + shift)^{-1} by FFT.
class Preconditioner {
 public:
  Preconditioner(const TorusSpec& t) : n_(t.n), half_(t.n / 2 + 1) {
    real_ = fftw_alloc_real(static_cast<size_t>(n_) * n_);
    spec_ = fftw_alloc_complex(static_cast<size_t>(n_) * half_);
    fwd_ = fftw_plan_dft_r2c_2d(n_, n_, real_, spec_, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_c2r_2d(n_, n_, spec_, real_, FFTW_ESTIMATE);
    const Stencil st = t.stencil();
    symbol_.resize(static_cast<size_t>(n_) * half_);
    for (int b = 0; b < n_; ++b)
      for (int a = 0; a < half_; ++a) {
        const double ta = 2 * kPi * a / n_, tb = 2 * kPi * b / n_;
        const double sa = std::sin(ta / 2), sb = std::sin(tb / 2);
        symbol_[static_cast<size_t>(b) * half_ + a] =
            4 * st.cxx * sa * sa + 4 * st.cyy * sb * sb + 4 * st.cxy * std::sin(ta) * std::sin(tb);
      }
  }
  ~Preconditioner() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(real_);
    fftw_free(spec_);
  }
  Preconditioner(const Preconditioner&) = delete;
  Preconditioner& operator=(const Preconditioner&) = delete;

  void apply(double shift, const double* in, double* out) {
    const long len = static_cast<long>(n_) * n_;
    std::copy(in, in + len, real_);
    fftw_execute(fwd_);
    const double scale = 1.0 / static_cast<double>(len);
    for (size_t i = 0; i < symbol_.size(); ++i) {
      const double f = scale / (symbol_[i] + shift);
      spec_[i][0] *= f;
      spec_[i][1] *= f;
    }
    fftw_execute(bwd_);
    std::copy(real_, real_ + len, out);
  }

 private:
  int n_, half_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan fwd_, bwd_;
  std::vector<double> symbol_;
};

// Solves (−Δ_h + D) x = b by preconditioned CG from x = 0.  Returns iterations.
int pcg(const Stencil& st, int n, const std::vector<double>& d, const std::vector<double>& b, std::vector<double>& x,
        Preconditioner& pre, double rel_tol, int max_it) {
  const long len = static_cast<long>(n) * n;
  double mean_d = 0;
  for (double di : d) mean_d += di;
  mean_d /= static_cast<double>(len);
  x.assign(len, 0.0);
  std::vector<double> r = b, z(len), p(len), q(len);
  const double bnorm = std::sqrt(kernels::dot(len, b.data(), b.data()));
  if (bnorm == 0) return 0;
  pre.apply(mean_d, r.data(), z.data());
  p = z;
  double rz = kernels::dot(len, r.data(), z.data());
  for (int it = 1; it <= max_it; ++it) {
    kernels::jacobian_apply(st, n, d.data(), p.data(), q.data());
    const double alpha = rz / kernels::dot(len, p.data(), q.data());
    kernels::axpy(len, alpha, p.data(), x.data());
    kernels::axpy(len, -alpha, q.data(), r.data());
    if (std::sqrt(kernels::dot(len, r.data(), r.data())) <= rel_tol * bnorm) return it;
    pre.apply(mean_d, r.data(), z.data());
    const double rz_new = kernels::dot(len, r.data(), z.data());
    const double beta = rz_new / rz;
    rz = rz_new;
    for (long i = 0; i < len; ++i) p[i] = z[i] + beta * p[i];
  }
  return max_it;
}

struct Residual {
  std::vector<double> f;  // Δ_h v − 2 w e^{2v} + c
  double l2 = 0;
  double curvature = 0;   // max |f| / (w e^{2v}) outside excluded cells
};

Residual evaluate(const SingularMetric& m, const std::vector<double>& v) {
  const long len = m.size();
  Residual r;
  r.f.resize(len);
  kernels::laplacian(m.torus.stencil(), m.torus.n, v.data(), r.f.data());
  for (long i = 0; i < len; ++i) {
    const double g = m.w_eq[i] * std::exp(2 * v[i]);
    r.f[i] += m.rhs_constant - 2 * g;
    r.l2 += r.f[i] * r.f[i];
    if (!m.excluded(i)) r.curvature = std::max(r.curvature, std::abs(r.f[i]) / g);
  }
  r.l2 = std::sqrt(r.l2);
  return r;
}

}  // namespace

bool within_cells(const TorusSpec& t, int j, int k, cd p, int cells) {
  int pj, pk;
  nearest_index(t, p, pj, pk);
  return wrap_dist(j, pj, t.n) <= cells && wrap_dist(k, pk, t.n) <= cells;
}

double SingularMetric::log_a(long i, cd p) const {
  const int j = static_cast<int>(i % torus.n), k = static_cast<int>(i / torus.n);
  const cd z = torus.point(j, k);
  const cd d = torus.reduce(z - p);
  if (std::abs(d) > 1e-9 * torus.step()) return log_density(i) + std::log(std::abs(d));
  // z sits on p: replace G(z − p) by its regular part.
  double s = 0;
  for (const cd& q : poles) {
    const cd dq = torus.reduce(z - q);
    s += std::abs(dq) > 1e-9 * torus.step() ? -green(torus, z - q) : -green_regular(torus, z - q);
  }
  return 2 * v[i] + s;
}

SingularMetric solve_liouville(const TorusSpec& torus, const std::vector<cd>& poles, const SolverOptions& opt) {
  torus.validate();
  if (poles.size() < 2) throw DomainError("need at least two half-order poles for a negative bundle");
  const int n = torus.n;
  const double h = torus.step();
  SingularMetric m;
  m.torus = torus;
  m.poles = poles;
  m.exclusion_cells = opt.exclusion_cells;
  const long len = m.size();
  m.v.assign(len, 0.0);
  m.log_w.assign(len, 0.0);
  m.w_eq.assign(len, 0.0);
  m.near.assign(len, -1);
  m.rhs_constant = kPi * static_cast<double>(poles.size()) / torus.area();

  // Pole boxes must not overlap.
  std::vector<std::pair<int, int>> idx(poles.size());
  for (size_t a = 0; a < poles.size(); ++a) nearest_index(torus, poles[a], idx[a].first, idx[a].second);
  for (size_t a = 0; a < poles.size(); ++a)
    for (size_t b = a + 1; b < poles.size(); ++b)
      if (wrap_dist(idx[a].first, idx[b].first, n) <= 2 * opt.exclusion_cells + 1 &&
          wrap_dist(idx[a].second, idx[b].second, n) <= 2 * opt.exclusion_cells + 1)
        throw NumericError("grid does not resolve the pole spacing");
  for (size_t a = 0; a < poles.size(); ++a)
    for (int dk = -opt.exclusion_cells; dk <= opt.exclusion_cells; ++dk)
      for (int dj = -opt.exclusion_cells; dj <= opt.exclusion_cells; ++dj) {
        const int j = ((idx[a].first + dj) % n + n) % n, k = ((idx[a].second + dk) % n + n) % n;
        m.near[torus.index(j, k)] = static_cast<int>(a);
      }

  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const long i = torus.index(j, k);
      const cd z = torus.point(j, k);
      if (m.near[i] < 0) {
        double s = 0;
        for (const cd& p : poles) s -= green(torus, z - p);
        m.log_w[i] = s;
        m.w_eq[i] = std::exp(s);
        continue;
      }
      // Near a pole: w = R(z)/|z − p| with R smooth; average 1/|z − p| over the cell.
      const cd p0 = poles[m.near[i]];
      const cd d = torus.reduce(z - p0);
      double log_r = -green_regular(torus, z - p0);
      for (size_t a = 0; a < poles.size(); ++a)
        if (static_cast<int>(a) != m.near[i]) log_r -= green(torus, z - poles[a]);
      const double r = std::abs(d);
      m.log_w[i] = r > 1e-9 * h ? log_r - std::log(r) : std::numeric_limits<double>::infinity();
      m.w_eq[i] = std::exp(log_r) * cell_mean_inverse_distance(d, h, torus.tau);
    }

  const Stencil st = torus.stencil();
  Preconditioner pre(torus);
  Residual res = evaluate(m, m.v);
  std::vector<double> d(len), delta, trial(len);
  for (int it = 0; it < opt.newton_max; ++it) {
    if (res.curvature < opt.tol) {
      m.converged = true;
      break;
    }
    for (long i = 0; i < len; ++i) d[i] = 4 * m.w_eq[i] * std::exp(2 * m.v[i]);
    m.cg_iterations += pcg(st, n, d, res.f, delta, pre, opt.cg_rel_tol, opt.cg_max);
    double lambda = 1.0;
    Residual next;
    for (int halvings = 0; halvings < 40; ++halvings, lambda *= 0.5) {
      for (long i = 0; i < len; ++i) trial[i] = m.v[i] + lambda * delta[i];
      next = evaluate(m, trial);
      if (next.l2 < res.l2) break;
    }
    if (!(next.l2 < res.l2)) break;
    m.v.swap(trial);
    res = std::move(next);
    ++m.newton_steps;
  }
  if (!m.converged && res.curvature < opt.tol) m.converged = true;
  m.residual = curvature_residual(m);
  if (!m.converged)
    throw NumericError("Newton did not converge: curvature residual " + std::to_string(res.curvature) + " after " +
                       std::to_string(m.newton_steps) + " steps");
  return m;
}

double curvature_residual(const SingularMetric& m) {
  const long len = m.size();
  std::vector<double> lap(len);
  kernels::scalar::laplacian(m.torus.stencil(), m.torus.n, m.v.data(), lap.data());
  double worst = 0;
  for (long i = 0; i < len; ++i) {
    if (m.excluded(i)) continue;
    const double k = -(lap[i] + m.rhs_constant) / m.density(i);
    worst = std::max(worst, std::abs(k + 2));
  }
  return worst;
}

double curvature_residual_fourth_order(const SingularMetric& m, double radius) {
  if (m.torus.tau.real() != 0) throw UnsupportedError("fourth-order residual needs a rectangular lattice");
  const int n = m.torus.n;
  const double b = m.torus.tau.imag();
  const double cx = static_cast<double>(n) * n / 12, cy = cx / (b * b);
  auto at = [&](int j, int k) { return m.v[m.torus.index(((j % n) + n) % n, ((k % n) + n) % n)]; };
  double worst = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const cd z = m.torus.point(j, k);
      bool far = true;
      for (const cd& p : m.poles) far = far && std::abs(m.torus.reduce(z - p)) >= radius;
      if (!far) continue;
      const double c = at(j, k);
      const double lap = cx * (-at(j + 2, k) + 16 * at(j + 1, k) - 30 * c + 16 * at(j - 1, k) - at(j - 2, k)) +
                         cy * (-at(j, k + 2) + 16 * at(j, k + 1) - 30 * c + 16 * at(j, k - 1) - at(j, k - 2));
      const double kk = -(lap + m.rhs_constant) / m.density(m.torus.index(j, k));
      worst = std::max(worst, std::abs(kk + 2));
    }
  return worst;
}

}  // namespace gaprig
