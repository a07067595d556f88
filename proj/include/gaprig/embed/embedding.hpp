#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaprig/moment/plane.hpp"

namespace gaprig {

// Lie homomorphism ρ: g' → g given by the images of the source basis.
// Base points are aligned at o.
class EmbeddingSpec {
 public:
  // Checks ρ([X,Y]) = [ρX, ρY] on all basis pairs and injectivity; throws DomainError.
  EmbeddingSpec(std::string name, ModelPtr source, ModelPtr target, std::vector<Matrix> images);
  // Image of X is f(X) for a linear f on source ambient matrices.
  static EmbeddingSpec from_map(std::string name, ModelPtr source, ModelPtr target,
                                const std::function<Matrix(const Matrix&)>& f);
  // Conjugation by an injective index map of ambient rows/columns.
  static EmbeddingSpec from_index_map(std::string name, ModelPtr source, ModelPtr target, const std::vector<int>& sigma);

  const std::string& name() const { return name_; }
  const LieModel& source() const { return *source_; }
  const LieModel& target() const { return *target_; }
  const ModelPtr& source_ptr() const { return source_; }
  const ModelPtr& target_ptr() const { return target_; }
  const std::vector<Matrix>& images() const { return images_; }

  Matrix apply(const Matrix& x) const;
  Matrix apply_coords(const SparseVec& c) const;
  // ρ(p'+) as a plane of target p+; throws DomainError when ρ(p'+) ⊄ p+.
  Plane tangent_plane() const;
  // Source basis precomposed with X ↦ -Xᵀ, which swaps p'+ and p'- (reflection conjugation for type IV).
  EmbeddingSpec flipped() const;

 private:
  std::string name_;
  ModelPtr source_;
  ModelPtr target_;
  std::vector<Matrix> images_;
};

struct ClassificationReport {
  bool h1 = false;
  bool h2 = false;
  bool h3 = false;
  std::vector<Scalar> c;  // c of each source factor, source normalization
  std::vector<Scalar> d;  // metric ratio of each source factor
  // Einstein constant of the target metric restricted to each factor.
  std::vector<Scalar> einstein_restricted;
  bool h3_einstein = false;  // all restricted Einstein constants equal (given h2)
  // Verdict with weights c/d (Σ of the tangent plane computed in the target) instead of c·d.
  bool h3_alternative = false;
  bool normalization_disagreement = false;
};

bool check_h1(const EmbeddingSpec& e);
bool check_h2(const EmbeddingSpec& e);
ClassificationReport check_h3(const EmbeddingSpec& e);
// B(ρX, ρτX) / B(X, τX) over p'+ of source factor i, checked constant.
Scalar compute_d(const EmbeddingSpec& e, int factor);

// -C·‖Σ‖² for a critical plane; C calibrated on p+ against the Einstein report.
Scalar geodesic_scalar_curvature(const Plane& plane);
Scalar curvature_constant(const LieModel& m);

// Disk I(1,1) → target through an sl2-triple on α + its τ-partner.
// Requires [[α, τα], α] = λα with λ > 0.
EmbeddingSpec disk_embedding(std::string name, ModelPtr target, const Matrix& alpha);

}  // namespace gaprig
