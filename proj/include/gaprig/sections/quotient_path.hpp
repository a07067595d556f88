#pragma once

#include <string>
#include <vector>

#include "gaprig/sections/sections.hpp"

namespace gaprig {

// Restriction of polynomials on T to a subspace D = span(basis), written in
// the coordinates y_k dual to the basis: e*_a ↦ Σ_k (b_k)_a y_k.
SymTensor restrict_to(const SymTensor& f, const std::vector<Vec>& basis);

// Hand computation in quotient variables for a k-dimensional subspace D of
// T_o(I(r,r)) (or of T*, via the dual-basis identification).
struct QuotientComputation {
  std::vector<SymTensor> theta_bar;  // κθ(b_j), over the k variables y_j
  // coefficient of (y_1 ∧ ... ∧ y_k)^{r-1} in μ̄(θ̄(b_1) ∧ ... ∧ θ̄(b_k))
  Scalar full_words;         // every term, words counted as in the hand computation
  Scalar retained_words;     // only square-free terms of each θ̄ (the terms the hand computation keeps)
  Scalar full_polarized;     // every term, equivariant polarization weights
  bool theta_bar_all_zero = false;
};

QuotientComputation quotient_computation(const LieModel& m, const std::vector<Vec>& basis);

// Keep only monomials without a repeated variable.
SymTensor square_free_part(const SymTensor& f);

// Polynomial from "e23*e31 - e21*e33" over the model's p+ labels, or over
// custom variable names.
SymTensor poly_from_string(const std::string& text, const std::vector<std::string>& names);

}  // namespace gaprig
