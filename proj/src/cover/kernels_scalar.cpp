#include "gaprig/cover/kernels.hpp"

namespace gaprig::kernels::scalar {

namespace {

inline double lap_at(const Stencil& st, int n, const double* v, int j, int k) {
  const int jp = j + 1 == n ? 0 : j + 1, jm = j == 0 ? n - 1 : j - 1;
  const int kp = k + 1 == n ? 0 : k + 1, km = k == 0 ? n - 1 : k - 1;
  const double c = v[k * n + j];
  double r = st.cxx * (v[k * n + jp] + v[k * n + jm] - 2 * c) + st.cyy * (v[kp * n + j] + v[km * n + j] - 2 * c);
  if (st.cxy != 0)
    r += st.cxy * (v[kp * n + jp] - v[km * n + jp] - v[kp * n + jm] + v[km * n + jm]);
  return r;
}

}  // namespace

void laplacian(const Stencil& st, int n, const double* v, double* out) {
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) out[k * n + j] = lap_at(st, n, v, j, k);
}

void jacobian_apply(const Stencil& st, int n, const double* d, const double* x, double* out) {
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const long i = static_cast<long>(k) * n + j;
      out[i] = d[i] * x[i] - lap_at(st, n, x, j, k);
    }
}

double dot(long len, const double* a, const double* b) {
  double s = 0;
  for (long i = 0; i < len; ++i) s += a[i] * b[i];
  return s;
}

void axpy(long len, double a, const double* x, double* y) {
  for (long i = 0; i < len; ++i) y[i] += a * x[i];
}

}  // namespace gaprig::kernels::scalar
