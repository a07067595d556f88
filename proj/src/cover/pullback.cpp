#include "gaprig/cover/pullback.hpp"

#include <algorithm>
#include <cmath>

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

long scaled_index(const TorusSpec& t, int m, int j, int k) {
  const long n = t.n;
  return t.index(static_cast<int>((static_cast<long>(m) * j) % n), static_cast<int>((static_cast<long>(m) * k) % n));
}

bool near_any(const TorusSpec& t, int j, int k, const std::vector<cd>& pts, int cells) {
  for (const cd& p : pts)
    if (within_cells(t, j, k, p, cells)) return true;
  return false;
}

void check_odd(int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("m must be odd and >= 1");
}

}  // namespace

std::vector<double> pullback_field(const TorusSpec& t, const std::vector<double>& density, int m) {
  check_odd(m);
  if (density.size() != static_cast<size_t>(t.n) * t.n) throw DomainError("pullback_field: grid size mismatch");
  std::vector<double> out(density.size());
  const double jac = double(m) * m;
  for (int k = 0; k < t.n; ++k)
    for (int j = 0; j < t.n; ++j) out[t.index(j, k)] = jac * density[scaled_index(t, m, j, k)];
  return out;
}

double mu_ratio_at(const SingularMetric& base, int m, int j, int k) {
  check_odd(m);
  const long i = base.torus.index(j, k);
  return std::exp(base.log_density(i) - base.log_density(scaled_index(base.torus, m, j, k))) / (double(m) * m);
}

PullbackReport pullback_check(const SingularMetric& base, int m, cd e, const SolverOptions& opt) {
  check_odd(m);
  const TorusSpec& t = base.torus;
  const std::vector<cd> dm = torsion_divisor(m, t, e);
  if (t.n / m < 4 * (opt.exclusion_cells + 1)) throw NumericError("grid too coarse for m = " + std::to_string(m));
  const SingularMetric direct = solve_liouville(t, dm, opt);
  PullbackReport r;
  r.m = m;
  r.card = static_cast<int>(dm.size());
  r.direct_residual = direct.residual;
  r.direct_newton_steps = direct.newton_steps;
  const double jac = double(m) * m;
  for (int k = 0; k < t.n; ++k)
    for (int j = 0; j < t.n; ++j) {
      if (near_any(t, j, k, dm, opt.exclusion_cells)) continue;
      const long i = t.index(j, k);
      const double pulled = jac * base.density(scaled_index(t, m, j, k));
      const double own = direct.density(i);
      r.rel_sup_diff = std::max(r.rel_sup_diff, std::abs(pulled - own) / own);
      ++r.compared_points;
    }
  return r;
}

MuTable mu_decay(const SingularMetric& base, const std::vector<int>& ms, cd e) {
  const TorusSpec& t = base.torus;
  const std::vector<cd> d1 = {cd(0, 0), t.reduce(e)};
  const int cells = base.exclusion_cells;
  MuTable out;
  for (int m : ms) {
    check_odd(m);
    const std::vector<cd> dm = torsion_divisor(m, t, e);
    MuRow row;
    row.m = m;
    row.card = static_cast<int>(dm.size());
    row.residual = base.residual;
    for (int k = 0; k < t.n; ++k)
      for (int j = 0; j < t.n; ++j) {
        const long i = t.index(j, k);
        bool handled = false;
        // Boxes around 0 and e: θ₁/Φ_m*θ₁ = a(y)/(m·a(my)), since my − p = m(y − p) there.
        for (const cd& p : d1)
          if (within_cells(t, j, k, p, cells)) {
            const double ratio = std::exp(base.log_a(i, p) - base.log_a(scaled_index(t, m, j, k), p)) / m;
            row.mu_near_pole = std::max(row.mu_near_pole, ratio);
            handled = true;
          }
        // Other points of D_m: Φ_m*θ₁ blows up there and the ratio tends to 0.
        if (handled || near_any(t, j, k, dm, cells)) continue;
        row.mu_grid = std::max(row.mu_grid, mu_ratio_at(base, m, j, k));
      }
    row.mu = std::max(row.mu_grid, row.mu_near_pole);
    row.m_mu = m * row.mu;
    out.sup_m_mu = std::max(out.sup_m_mu, row.m_mu);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace gaprig
