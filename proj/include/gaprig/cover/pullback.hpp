#pragma once

#include <vector>

#include "gaprig/cover/liouville.hpp"

namespace gaprig {

// (Φ_m* f)(z_i) = m²·f(m z_i) for a density f sampled on the grid.
std::vector<double> pullback_field(const TorusSpec& t, const std::vector<double>& density, int m);

struct PullbackReport {
  int m = 1;
  int card = 0;               // #D_m
  double rel_sup_diff = 0;    // max |m²θ₁(mz) − θ_m(z)| / θ_m(z)
  long compared_points = 0;
  double direct_residual = 0;
  int direct_newton_steps = 0;
};

// Compares Φ_m*θ₁ with a direct solve for D_m on the same grid.  `e` is the second pole of the base.
PullbackReport pullback_check(const SingularMetric& base, int m, cd e, const SolverOptions& opt = {});

struct MuRow {
  int m = 1;
  int card = 0;
  double mu = 0;
  double m_mu = 0;
  double residual = 0;
  double mu_grid = 0;        // sup of θ₁/Φ_m*θ₁ over non-excluded grid points
  double mu_near_pole = 0;   // sup of a(y)/(m·a(my)) on the boxes around 0 and e
};

struct MuTable {
  std::vector<MuRow> rows;
  double sup_m_mu = 0;
};

// base must be the solve for D₁ = {0, e}.
MuTable mu_decay(const SingularMetric& base, const std::vector<int>& ms, cd e);

// θ₁(y)/Φ_m*θ₁(y) at the grid point (j,k).
double mu_ratio_at(const SingularMetric& base, int m, int j, int k);

}  // namespace gaprig
