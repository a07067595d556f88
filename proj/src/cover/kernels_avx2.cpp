#include <immintrin.h>

#include "gaprig/cover/kernels.hpp"

namespace gaprig::kernels::avx2 {

namespace {

// One row k.  Interior columns 1..n-2 in blocks of four, the two wrap columns scalar.
template <bool Jacobian>
void row(const Stencil& st, int n, const double* d, const double* v, double* out, int k) {
  const int kp = k + 1 == n ? 0 : k + 1, km = k == 0 ? n - 1 : k - 1;
  const double* c = v + static_cast<long>(k) * n;
  const double* up = v + static_cast<long>(kp) * n;
  const double* dn = v + static_cast<long>(km) * n;
  double* o = out + static_cast<long>(k) * n;
  const double* dr = Jacobian ? d + static_cast<long>(k) * n : nullptr;
  const __m256d vxx = _mm256_set1_pd(st.cxx), vyy = _mm256_set1_pd(st.cyy), vxy = _mm256_set1_pd(st.cxy);
  const __m256d two = _mm256_set1_pd(2.0);
  const bool cross = st.cxy != 0;
  auto scalar_at = [&](int j) {
    const int jp = j + 1 == n ? 0 : j + 1, jm = j == 0 ? n - 1 : j - 1;
    double r = st.cxx * (c[jp] + c[jm] - 2 * c[j]) + st.cyy * (up[j] + dn[j] - 2 * c[j]);
    if (cross) r += st.cxy * (up[jp] - dn[jp] - up[jm] + dn[jm]);
    o[j] = Jacobian ? dr[j] * c[j] - r : r;
  };
  scalar_at(0);
  int j = 1;
  for (; j + 4 <= n - 1; j += 4) {
    __m256d cc = _mm256_loadu_pd(c + j);
    __m256d sx = _mm256_add_pd(_mm256_loadu_pd(c + j + 1), _mm256_loadu_pd(c + j - 1));
    __m256d sy = _mm256_add_pd(_mm256_loadu_pd(up + j), _mm256_loadu_pd(dn + j));
    sx = _mm256_fnmadd_pd(two, cc, sx);
    sy = _mm256_fnmadd_pd(two, cc, sy);
    __m256d r = _mm256_mul_pd(vxx, sx);
    r = _mm256_fmadd_pd(vyy, sy, r);
    if (cross) {
      __m256d x = _mm256_sub_pd(_mm256_loadu_pd(up + j + 1), _mm256_loadu_pd(dn + j + 1));
      x = _mm256_sub_pd(x, _mm256_loadu_pd(up + j - 1));
      x = _mm256_add_pd(x, _mm256_loadu_pd(dn + j - 1));
      r = _mm256_fmadd_pd(vxy, x, r);
    }
    if (Jacobian) r = _mm256_fmsub_pd(_mm256_loadu_pd(dr + j), cc, r);
    _mm256_storeu_pd(o + j, r);
  }
  for (; j < n; ++j) scalar_at(j);
}

}  // namespace

void laplacian(const Stencil& st, int n, const double* v, double* out) {
  for (int k = 0; k < n; ++k) row<false>(st, n, nullptr, v, out, k);
}

void jacobian_apply(const Stencil& st, int n, const double* d, const double* x, double* out) {
  for (int k = 0; k < n; ++k) row<true>(st, n, d, x, out, k);
}

double dot(long len, const double* a, const double* b) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  long i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  alignas(32) double buf[4];
  _mm256_store_pd(buf, _mm256_add_pd(acc0, acc1));
  double s = (buf[0] + buf[1]) + (buf[2] + buf[3]);
  for (; i < len; ++i) s += a[i] * b[i];
  return s;
}

void axpy(long len, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  long i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < len; ++i) y[i] += a * x[i];
}

}  // namespace gaprig::kernels::avx2
