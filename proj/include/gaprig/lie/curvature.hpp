#pragma once

#include "gaprig/lie/lie_model.hpp"

namespace gaprig {

struct CurvatureReport {
  Scalar einstein_killing;     // Ric = einstein_killing * B on p
  Scalar min_disk_curvature;   // holomorphic sectional curvature, Killing metric
  Scalar rho;                  // Einstein constant once the minimal disk has curvature -2
  std::string min_disk_direction;
};

// R(X,Y,Z,W) = -B([[X,Y],Z],W) on the real form p.  The sign makes the
// holomorphic sectional curvature of the disk negative.
Scalar curvature(const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& w, const LieModel& m);

// Holomorphic sectional curvature of the real direction alpha + tau(alpha), alpha in p+.
Scalar holomorphic_sectional_curvature(const Matrix& alpha, const LieModel& m);

// Ric(X,Y) = trace(Z -> R(Z,X)Y) over p (complex-bilinear extension).
Scalar ricci(const Matrix& x, const Matrix& y, const LieModel& m);

// p+ direction of the minimal (characteristic) disk.
Matrix min_disk_direction(const LieModel& m);

CurvatureReport einstein_report(const LieModel& m);

// Real basis alpha + tau(alpha), i(alpha - tau(alpha)) of p.
std::vector<Matrix> real_p_basis(const LieModel& m);

}  // namespace gaprig
