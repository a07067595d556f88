#pragma once

#include <vector>

#include "gaprig/moment/plane.hpp"

namespace gaprig {

// Σ = c·H0 + Σ' with B(H0, Σ') = 0.
struct MomentValue {
  Matrix value;
  SparseVec k_coords;  // coordinates of Σ in the model basis (all in k)
  Scalar c;
  Matrix sigma_prime;
};

// Gram-corrected Σ = i Σ_{j,k} (G^{-1})_{kj} [v_j, τ v_k].
MomentValue sigma(const Plane& plane);
// h(Σ, Σ) = -B(Σ, τΣ); real and nonnegative.
Scalar sigma_norm2(const Plane& plane);
Scalar k_norm2(const LieModel& m, const Matrix& x);
// Scalar c with Σ(p+) = c·H0; requires an irreducible model.
Scalar c_omega(const LieModel& m);
// One scalar per irreducible factor, from that factor's p+ and H0.
std::vector<Scalar> c_omega_factors(const LieModel& m);
// [Σ, v_j] in span(v) for every j.
bool is_critical(const Plane& plane);
// Σ' == 0
bool sigma_collinear_h0(const Plane& plane);
// Lower bound c²‖H0‖² of ‖Σ‖² over p-planes (attained iff Σ ∝ H0).
Scalar sigma_norm2_lower_bound(const LieModel& m, int p);

// Directional derivative of ‖Σ‖² when v_j moves along w_j, with every w_j
// h-orthogonal to the plane.
Scalar grad_norm2(const Plane& plane, const std::vector<Vec>& w);

}  // namespace gaprig
