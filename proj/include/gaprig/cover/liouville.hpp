#pragma once

#include <vector>

#include "gaprig/cover/torus.hpp"

namespace gaprig {

struct SolverOptions {
  double tol = 1e-10;  // max |K + 2| outside the excluded cells
  int newton_max = 40;
  int cg_max = 400;
  double cg_rel_tol = 1e-12;
  int exclusion_cells = 3;
};

// e^{2u}|dz|² with u = v + S,  S = −½ Σ G(z − p_k).  Every pole has order ½.
struct SingularMetric {
  TorusSpec torus;
  std::vector<cd> poles;
  int exclusion_cells = 3;

  std::vector<double> v;
  std::vector<double> log_w;   // 2S; +inf on a pole grid point
  std::vector<double> w_eq;    // weight used by the discrete equation (cell mean near poles)
  std::vector<int> near;       // pole index within the exclusion box, else -1

  double rhs_constant = 0;     // π·#poles/area
  double residual = 0;         // max |K + 2| outside excluded cells
  int newton_steps = 0;
  int cg_iterations = 0;
  bool converged = false;

  long size() const { return static_cast<long>(torus.n) * torus.n; }
  bool excluded(long i) const { return near[i] >= 0; }
  double log_density(long i) const { return 2 * v[i] + log_w[i]; }
  double density(long i) const { return std::exp(log_density(i)); }
  // log(e^{2u(z_i)}·|z_i − p|), finite at z_i = p.
  double log_a(long i, cd p) const;
};

SingularMetric solve_liouville(const TorusSpec& torus, const std::vector<cd>& poles, const SolverOptions& opt = {});

// Discrete curvature recomputed from the stored field: K = −e^{−2u}(Δ_h v + ΔS),
// with ΔS = π·#poles/area exactly away from the poles.  Max |K + 2| outside excluded cells.
double curvature_residual(const SingularMetric& m);

// Same quantity with a fourth-order Laplacian on v (rectangular lattices), over grid
// points at distance ≥ radius from every pole.
double curvature_residual_fourth_order(const SingularMetric& m, double radius);

// Chebyshev index box test: is grid point (j,k) within `cells` of the grid point nearest to p.
bool within_cells(const TorusSpec& t, int j, int k, cd p, int cells);

}  // namespace gaprig
