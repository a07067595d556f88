#include "gaprig/cover/kernels.hpp"

#include <atomic>

namespace gaprig::kernels {

namespace {

bool detect_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_avx2() ? Isa::Avx2 : Isa::Scalar};
  return isa;
}

}  // namespace

bool avx2_available() {
  static const bool ok = detect_avx2();
  return ok;
}

Isa active() { return current().load(); }

bool force(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) return false;
  current().store(isa);
  return true;
}

void reset() { current().store(avx2_available() ? Isa::Avx2 : Isa::Scalar); }

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void laplacian(const Stencil& st, int n, const double* v, double* out) {
  if (active() == Isa::Avx2) return avx2::laplacian(st, n, v, out);
  scalar::laplacian(st, n, v, out);
}

void jacobian_apply(const Stencil& st, int n, const double* d, const double* x, double* out) {
  if (active() == Isa::Avx2) return avx2::jacobian_apply(st, n, d, x, out);
  scalar::jacobian_apply(st, n, d, x, out);
}

double dot(long len, const double* a, const double* b) {
  return active() == Isa::Avx2 ? avx2::dot(len, a, b) : scalar::dot(len, a, b);
}

void axpy(long len, double a, const double* x, double* y) {
  if (active() == Isa::Avx2) return avx2::axpy(len, a, x, y);
  scalar::axpy(len, a, x, y);
}

}  // namespace gaprig::kernels
