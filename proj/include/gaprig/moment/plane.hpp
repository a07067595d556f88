#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaprig/lie/lie_model.hpp"

namespace gaprig {

// p-dimensional subspace of p+ given by spanning vectors in p+ coordinates.
class Plane {
 public:
  Plane(ModelPtr model, std::vector<Vec> vectors);
  static Plane from_matrices(ModelPtr model, const std::vector<Matrix>& vectors);
  static Plane full(ModelPtr model);
  // "e11+e22, 2*e12-i*e21"; labels are the model's p+ labels.
  static Plane parse(ModelPtr model, const std::string& literal);

  const LieModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  int dim() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Vec>& vectors() const { return vectors_; }
  Matrix vector_matrix(int j) const { return model_->pplus_vector(vectors_.at(j)); }

  // G_jk = herm(v_j, v_k)
  Matrix gram() const;
  // v'_k = sum_j v_j A_jk
  Plane recombined(const Matrix& a) const;
  // k v k^{-1} on every spanning vector
  Plane transformed(const Matrix& k, const Matrix& k_inv) const;
  std::string str() const;

 private:
  ModelPtr model_;
  std::vector<Vec> vectors_;
};

// Spanning set with Gaussian-integer coordinates in [-range, range]; retried
// until independent.
Plane random_plane(const ModelPtr& model, int p, std::mt19937_64& rng, int range = 3);

// Each spanning vector moved by scale·w with w a random Gaussian-integer vector in [-2, 2].
Plane perturbed(const Plane& plane, std::mt19937_64& rng, const Scalar& scale = Scalar::frac(1, 10));
// Independent vectors of p+ (as coordinate columns).
int pplus_rank(const std::vector<Vec>& vectors);

}  // namespace gaprig
