#include "gaprig/cover/torus.hpp"

#include <cmath>
#include <numbers>

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThetaTerms = 24;

// θ₁(w|τ) = 2 Σ (−1)^n q^{(n+½)²} sin((2n+1)w),  q = e^{iπτ}.  With divide, returns θ₁(w)/w.
cd theta1(cd w, cd tau, bool divide) {
  cd sum = 0;
  for (int n = 0; n < kThetaTerms; ++n) {
    const double e = (n + 0.5) * (n + 0.5);
    const cd qn = std::exp(cd(0, kPi) * tau * e);
    if (std::abs(qn) < 1e-300) break;
    const double k = 2 * n + 1;
    cd s;
    if (divide)
      s = std::abs(w) < 1e-12 ? cd(k) : std::sin(k * w) / w;
    else
      s = std::sin(k * w);
    sum += (n % 2 ? -1.0 : 1.0) * qn * s;
  }
  return 2.0 * sum;
}

}  // namespace

void TorusSpec::validate() const {
  if (!(tau.imag() > 0)) throw DomainError("lattice generator must have Im(tau) > 0");
  if (n < 128 || (n & (n - 1)) != 0) throw DomainError("grid size must be a power of two >= 128");
}

void TorusSpec::coords(cd z, double& s, double& t) const {
  t = z.imag() / tau.imag();
  s = z.real() - t * tau.real();
}

cd TorusSpec::reduce(cd z) const {
  double s, t;
  coords(z, s, t);
  s -= std::floor(s + 0.5);
  t -= std::floor(t + 0.5);
  return s + t * tau;
}

Stencil TorusSpec::stencil() const {
  const double a = tau.real(), b = tau.imag();
  const double n2 = static_cast<double>(n) * n;
  Stencil st;
  st.cxx = (a * a + b * b) / (b * b) * n2;
  st.cyy = n2 / (b * b);
  st.cxy = -2 * a / (b * b) * n2 / 4;
  return st;
}

double log_abs_theta1(cd z, cd tau) { return std::log(std::abs(theta1(kPi * z, tau, false))); }

double green(const TorusSpec& t, cd z) {
  const cd r = t.reduce(z);
  return std::log(std::abs(theta1(kPi * r, t.tau, false))) - kPi * r.imag() * r.imag() / t.tau.imag();
}

double green_regular(const TorusSpec& t, cd z) {
  const cd r = t.reduce(z);
  // θ₁(πr)/r = π·θ₁(w)/w with w = πr
  return std::log(kPi * std::abs(theta1(kPi * r, t.tau, true))) - kPi * r.imag() * r.imag() / t.tau.imag();
}

std::vector<cd> torsion_divisor(int m, const TorusSpec& t, cd e) {
  if (m < 1 || m % 2 == 0) throw DomainError("torsion_divisor needs odd m >= 1");
  double es, et;
  t.coords(e, es, et);
  auto is_int = [](double x) { return std::abs(x - std::round(x)) < 1e-12; };
  if (!is_int(2 * es) || !is_int(2 * et) || (is_int(es) && is_int(et)))
    throw DomainError("e must be a nonzero 2-torsion point");
  es = std::round(2 * es) / 2;
  et = std::round(2 * et) / 2;
  std::vector<cd> out;
  out.reserve(2 * m * m);
  const double shift[2][2] = {{0.0, 0.0}, {es, et}};
  for (const auto& sh : shift)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) {
        double s = (sh[0] + j) / m, tt = (sh[1] + k) / m;
        s -= std::floor(s);
        tt -= std::floor(tt);
        out.push_back(s + tt * t.tau);
      }
  return out;
}

double cell_mean_inverse_distance(cd center, double h, cd tau) {
  // Fan decomposition from the origin: ∫_triangle(0,A,B) 1/r = d·|asinh(t_B/d) − asinh(t_A/d)|.
  const cd e1 = h, e2 = h * tau;
  const cd v[4] = {center - 0.5 * e1 - 0.5 * e2, center + 0.5 * e1 - 0.5 * e2, center + 0.5 * e1 + 0.5 * e2,
                   center - 0.5 * e1 + 0.5 * e2};
  double total = 0;
  for (int i = 0; i < 4; ++i) {
    const cd a = v[i], b = v[(i + 1) % 4];
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    if (cross == 0) continue;
    const cd u = (b - a) / std::abs(b - a);
    const double ta = a.real() * u.real() + a.imag() * u.imag();
    const double tb = b.real() * u.real() + b.imag() * u.imag();
    const double d = std::abs(u.real() * a.imag() - u.imag() * a.real());
    const double piece = d * std::abs(std::asinh(tb / d) - std::asinh(ta / d));
    total += cross > 0 ? piece : -piece;
  }
  const double area = h * h * tau.imag();
  return std::abs(total) / area;
}

}  // namespace gaprig
