#pragma once

#include <optional>
#include <string>

#include "gaprig/embed/embedding.hpp"
#include "gaprig/sections/sections.hpp"

namespace gaprig {

// Nonvanishing test of an explicit invariant section at the tangent plane of an embedding.
struct BridgeRow {
  std::string embedding;
  bool h3 = false;
  std::string section;  // which construction was evaluated
  Scalar value;
  bool nonzero() const { return !value.is_zero(); }
  // Tangent-side value where a cotangent construction replaces it (II3 in I33).
  std::optional<Scalar> tangent_value;
};

// nullopt when no explicit section is built for this embedding:
//   IV(p) ⊂ IV(n): quadric discriminant;
//   III3_in_I33: degree-6 τ on the symmetric 6-plane;
//   II3_in_I33: tangent construction (θ̄ ≡ 0) and degree-6 τ on the annihilator;
//   polydisks and diagonal disks in a target with a determinant-type norm: τ with p = dim of the plane.
std::optional<BridgeRow> bridge_check(const EmbeddingSpec& e);

// Cached τ sections by (model, p).
const PolySection& cached_tau(const ModelPtr& model, int p);

}  // namespace gaprig
