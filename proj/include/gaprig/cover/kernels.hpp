#pragma once

#include <string>

namespace gaprig {

// Periodic N×N grid, index k*N + j.  The discrete Laplacian is
//   cxx·(v[j+1]+v[j-1]-2v) + cyy·(v[k+1]+v[k-1]-2v)
//   + cxy·(v[j+1,k+1] - v[j+1,k-1] - v[j-1,k+1] + v[j-1,k-1]).
struct Stencil {
  double cxx = 0;
  double cyy = 0;
  double cxy = 0;
};

namespace kernels {

enum class Isa { Scalar, Avx2 };

Isa active();
// Tests pin the implementation; returns false if the ISA is unavailable.
bool force(Isa isa);
void reset();
std::string isa_name(Isa isa);
bool avx2_available();

void laplacian(const Stencil& st, int n, const double* v, double* out);
// out = -Δ_h x + d∘x
void jacobian_apply(const Stencil& st, int n, const double* d, const double* x, double* out);
double dot(long len, const double* a, const double* b);
// y += a x
void axpy(long len, double a, const double* x, double* y);

namespace scalar {
void laplacian(const Stencil& st, int n, const double* v, double* out);
void jacobian_apply(const Stencil& st, int n, const double* d, const double* x, double* out);
double dot(long len, const double* a, const double* b);
void axpy(long len, double a, const double* x, double* y);
}  // namespace scalar

namespace avx2 {
void laplacian(const Stencil& st, int n, const double* v, double* out);
void jacobian_apply(const Stencil& st, int n, const double* d, const double* x, double* out);
double dot(long len, const double* a, const double* b);
void axpy(long len, double a, const double* x, double* y);
}  // namespace avx2

}  // namespace kernels
}  // namespace gaprig
