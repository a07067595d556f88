#pragma once

#include <complex>
#include <vector>

#include "gaprig/cover/kernels.hpp"

namespace gaprig {

using cd = std::complex<double>;

// E = C / (Z + τZ), sampled at z_jk = (j + kτ)/N.
struct TorusSpec {
  cd tau{0.0, 1.0};
  int n = 512;

  void validate() const;
  double area() const { return tau.imag(); }
  double step() const { return 1.0 / n; }
  cd point(double j, double k) const { return (j + k * tau) / static_cast<double>(n); }
  long index(int j, int k) const { return static_cast<long>(k) * n + j; }
  // Lattice coordinates (s, t) with z = s + tτ.
  void coords(cd z, double& s, double& t) const;
  // Representative of z with s, t in [-1/2, 1/2).
  cd reduce(cd z) const;
  Stencil stencil() const;
};

// log|θ₁(πz | τ)|
double log_abs_theta1(cd z, cd tau);

// Periodic Green's function: ΔG = 2πδ₀ − 2π/area, G(z) ~ log|z| at 0.
double green(const TorusSpec& t, cd z);
// G(z) − log|z'| with z' the reduced representative; finite at 0.
double green_regular(const TorusSpec& t, cd z);

// Φ_m^{-1}({0, e}) for z ↦ mz, reduced to [0,1)² lattice coordinates.
std::vector<cd> torsion_divisor(int m, const TorusSpec& t, cd e);

// Mean of 1/|z| over the parallelogram center + h·([-1/2,1/2] + τ[-1/2,1/2]).
double cell_mean_inverse_distance(cd center, double h, cd tau);

}  // namespace gaprig
