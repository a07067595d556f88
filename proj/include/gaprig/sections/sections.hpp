#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaprig/exact/tensor.hpp"
#include "gaprig/moment/plane.hpp"

namespace gaprig {

// Section of L^{-ℓ}⊗E^ℓ on the Grassmannian of p-planes, trivialized at o:
// a polynomial on Λ^p T in Plücker coordinates (SubsetIndex(dim T, p)).
struct PolySection {
  ModelPtr model;
  std::string construction;
  int m = 0;    // slot degree r-1
  int ell = 0;  // degree of the polynomial in Plücker coordinates
  int p = 0;    // plane dimension
  SymTensor poly{0, 0};
};

// r×r matrix of linear forms on p+ whose generic norm is the section: the
// upper-right block for I(r,r) and III(n), the skew block for II(2m).
std::vector<std::vector<SymTensor>> tangent_matrix(const LieModel& m);
// det for I(r,r) and III(n), Pfaffian for II(2m), Σ x_k² for IV(n).
SymTensor det_section(const LieModel& m);
// Σ_a v_a ∂_a det
SymTensor theta_map(const SymTensor& det, const Vec& v);

// τ(P) = Σ_I P_I · μ(θ(e_{i1}) ∧ ... ∧ θ(e_{ip}))(P).  p defaults to the rank.
PolySection tau_section(ModelPtr model, int p = 0, WordWeight weight = WordWeight::Polarization);
// Plücker coordinates of v_1 ∧ ... ∧ v_p
Vec plucker(const Plane& plane);
Scalar evaluate_t(const PolySection& s, const Plane& plane);

// det of Q(v_j, v_k) with Q(x, y) = Σ x_k y_k on p+ of IV(n)
Scalar quadric_discriminant(const Plane& plane);
// Kernel of the coordinate pairing Σ_a v_a φ_a, with T* identified with T
// through the dual basis (the trace pairing for type I).
Plane annihilator(const Plane& plane);
// Determinant of the projection of the plane onto the p+ of one factor;
// requires p = dim of that factor.
Scalar projection_determinant(const Plane& plane, int factor);

struct InvarianceReport {
  bool invariant = true;
  std::vector<Scalar> characters;  // t(kP)/t(P), one per sampled k
  std::string detail;
};
// For each sampled k, t(kP)/t(P) must agree across the probe planes.
InvarianceReport k_invariance(const PolySection& s, int samples, int probes, std::mt19937_64& rng);

}  // namespace gaprig
