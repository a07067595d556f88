#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gaprig/moment/plane.hpp"

namespace gaprig {

using CMat = Eigen::MatrixXcd;

// Floating copy of the model data needed for ‖Σ‖² and its gradient.
// Planes are d×p matrices of p+ coordinates.
class FloatMoment {
 public:
  explicit FloatMoment(const LieModel& m);

  int p_count() const { return d_; }
  // h-orthonormal columns spanning the same plane (modified Gram-Schmidt)
  CMat orthonormalize(const CMat& v) const;
  std::complex<double> herm(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) const;
  // Σ in k coordinates for h-orthonormal v
  Eigen::VectorXcd sigma(const CMat& v) const;
  double value(const CMat& v) const;
  // Gradient of ‖Σ‖² for the metric Re h, projected onto the h-complement of the plane.
  CMat gradient(const CMat& v) const;
  // d/dt ‖Σ‖²(v + t w); v h-orthonormal, w arbitrary
  double directional(const CMat& v, const CMat& w) const;
  double norm(const CMat& w) const;

 private:
  int d_ = 0;
  int kc_ = 0;
  CMat h_;
  CMat bk_;                          // Killing form restricted to k
  std::vector<Eigen::VectorXcd> t_;  // [p_a, τ p_b] at a*d + b
};

CMat to_float(const Plane& plane);

struct DescentResult {
  std::vector<CMat> planes;
  std::vector<double> values;
  double terminal_value = 0;
  double grad_norm = 0;
  bool critical = false;  // gradient norm below kCriticalTol
  int steps = 0;
  double step_threshold = 0;  // smallest step accepted by the halving rule
};

inline constexpr double kCriticalTol = 1e-8;

// Gradient descent with re-orthonormalization after each step.  A step that
// raises ‖Σ‖² is halved until it does not.
DescentResult descent_flow(const Plane& start, int steps, double step_size, bool keep_planes = false);

}  // namespace gaprig
