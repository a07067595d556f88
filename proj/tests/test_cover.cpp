#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gaprig/cover/pullback.hpp"
#include "gaprig/cover/riemann_hurwitz.hpp"
#include "gaprig/error.hpp"

using namespace gaprig;

namespace {

constexpr double kPi = std::numbers::pi;

TorusSpec square(int n) {
  TorusSpec t;
  t.n = n;
  return t;
}

const SingularMetric& base128() {
  static const SingularMetric m = solve_liouville(square(128), {cd(0, 0), cd(0.5, 0)});
  return m;
}

const SingularMetric& base256() {
  static const SingularMetric m = solve_liouville(square(256), {cd(0, 0), cd(0.5, 0)});
  return m;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("torus spec validation") {
  CHECK_THROWS_AS(square(64).validate(), DomainError);
  CHECK_THROWS_AS(square(200).validate(), DomainError);
  CHECK_NOTHROW(square(128).validate());
  TorusSpec bad;
  bad.tau = cd(1, 0);
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("theta quasi-periodicity and the Green's function") {
  for (cd tau : {cd(0, 1), cd(0.3, 1.1)}) {
    const cd z(0.11, 0.07);
    CHECK(log_abs_theta1(z + 1.0, tau) == doctest::Approx(log_abs_theta1(z, tau)));
    CHECK(log_abs_theta1(z + tau, tau) ==
          doctest::Approx(log_abs_theta1(z, tau) + kPi * tau.imag() + 2 * kPi * z.imag()).epsilon(1e-12));
    TorusSpec t;
    t.tau = tau;
    // ΔG = −2π/area away from the lattice
    const cd z0(0.3, 0.2);
    const double h = 1e-3;
    const double lap = (green(t, z0 + h) + green(t, z0 - h) + green(t, z0 + cd(0, h)) + green(t, z0 - cd(0, h)) -
                        4 * green(t, z0)) /
                       (h * h);
    CHECK(lap == doctest::Approx(-2 * kPi / t.area()).epsilon(1e-5));
    // G(z) − log|z| is continuous at 0
    const double eps = 1e-7;
    CHECK(green(t, cd(eps, 0)) - std::log(eps) == doctest::Approx(green_regular(t, 0)).epsilon(1e-6));
    CHECK(green(t, z0) == doctest::Approx(green(t, z0 + 1.0 + tau)));
  }
}

TEST_CASE("cell mean of 1/|z|") {
  // centered square: 4·asinh(1)/h
  const double h = 0.01;
  CHECK(cell_mean_inverse_distance(0, h, cd(0, 1)) == doctest::Approx(4 * std::asinh(1.0) / h).epsilon(1e-12));
  // off-center, skew cell: midpoint quadrature
  for (cd c : {cd(0.013, 0.004), cd(0.0031, -0.0027)}) {
    const cd tau(0.3, 1.1);
    const int q = 1000;
    double sum = 0;
    int hits = 0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        const cd z = c + h * ((a + 0.5) / q - 0.5) + h * tau * ((b + 0.5) / q - 0.5);
        sum += 1 / std::abs(z);
        ++hits;
      }
    CHECK(cell_mean_inverse_distance(c, h, tau) == doctest::Approx(sum / hits).epsilon(2e-3));
  }
}

TEST_CASE("torsion divisor") {
  const TorusSpec t = square(128);
  const cd e(0.5, 0);
  const auto d1 = torsion_divisor(1, t, e);
  REQUIRE(d1.size() == 2);
  CHECK(std::abs(d1[0]) < 1e-15);
  CHECK(std::abs(d1[1] - e) < 1e-15);
  for (int m : {3, 5}) {
    const auto dm = torsion_divisor(m, t, e);
    CHECK(dm.size() == static_cast<size_t>(2 * m * m));
    bool has0 = false, has_e = false;
    for (const cd& p : dm) {
      has0 = has0 || std::abs(t.reduce(p)) < 1e-12;
      has_e = has_e || std::abs(t.reduce(p - e)) < 1e-12;
      const cd image = t.reduce(double(m) * p);
      CHECK((std::abs(image) < 1e-12 || std::abs(t.reduce(image - e)) < 1e-12));
    }
    CHECK(has0);
    CHECK(has_e);
  }
  CHECK_THROWS_AS(torsion_divisor(2, t, e), DomainError);
  CHECK_THROWS_AS(torsion_divisor(3, t, cd(0.25, 0)), DomainError);
  // e = τ/2 works too
  CHECK(torsion_divisor(3, t, cd(0, 0.5)).size() == 18);
}

TEST_CASE("SIMD kernels match the scalar reference") {
  if (!kernels::avx2_available()) return;
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-1, 1);
  for (cd tau : {cd(0, 1), cd(0.3, 1.1)}) {
    TorusSpec t = square(128);
    t.tau = tau;
    const Stencil st = t.stencil();
    const int n = t.n;
    const long len = long(n) * n;
    std::vector<double> v(len), d(len), a(len), b(len);
    for (long i = 0; i < len; ++i) {
      v[i] = u(rng);
      d[i] = 1 + u(rng);
    }
    kernels::scalar::laplacian(st, n, v.data(), a.data());
    kernels::avx2::laplacian(st, n, v.data(), b.data());
    double worst = 0, scale = 0;
    for (long i = 0; i < len; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[i]));
      scale = std::max(scale, std::abs(a[i]));
    }
    CHECK(worst <= 1e-12 * scale);
    kernels::scalar::jacobian_apply(st, n, d.data(), v.data(), a.data());
    kernels::avx2::jacobian_apply(st, n, d.data(), v.data(), b.data());
    worst = 0;
    for (long i = 0; i < len; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    CHECK(worst <= 1e-12 * scale);
    CHECK(kernels::avx2::dot(len, v.data(), d.data()) ==
          doctest::Approx(kernels::scalar::dot(len, v.data(), d.data())).epsilon(1e-12));
    std::vector<double> y1 = d, y2 = d;
    kernels::scalar::axpy(len - 3, 0.7, v.data(), y1.data());
    kernels::avx2::axpy(len - 3, 0.7, v.data(), y2.data());
    for (long i = 0; i < len; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-15));
  }
}

TEST_CASE("dispatch can be pinned and the solve does not depend on it") {
  const TorusSpec t = square(128);
  REQUIRE(kernels::force(kernels::Isa::Scalar));
  const SingularMetric a = solve_liouville(t, {cd(0, 0), cd(0.5, 0)});
  kernels::reset();
  const SingularMetric& b = base128();
  double worst = 0;
  for (long i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.v[i] - b.v[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("Liouville solve with poles {0, e}") {
  const SingularMetric& m = base128();
  CHECK(m.converged);
  CHECK(m.residual < 1e-4);
  CHECK(curvature_residual(m) == doctest::Approx(m.residual));
  // total curvature: ∫ 2e^{2u} = π·#poles
  double mass = 0;
  for (long i = 0; i < m.size(); ++i) mass += 2 * m.w_eq[i] * std::exp(2 * m.v[i]);
  mass *= m.torus.area() / m.size();
  CHECK(mass == doctest::Approx(2 * kPi).epsilon(1e-8));
  // e^{2u}|z − p| bounded between positive constants near each pole
  const int n = m.torus.n;
  for (const cd& p : m.poles) {
    double lo = 1e300, hi = 0;
    for (int k = -6; k <= 6; ++k)
      for (int j = -6; j <= 6; ++j) {
        const int pj = static_cast<int>(std::lround(p.real() * n));
        const long i = m.torus.index(((pj + j) % n + n) % n, (k + n) % n);
        const double a = std::exp(m.log_a(i, p));
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
    CHECK(lo > 0.1);
    CHECK(hi / lo < 1.2);
  }
}

TEST_CASE("symmetries of the square-lattice solution") {
  const SingularMetric& m = base128();
  const int n = m.torus.n;
  double worst = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const double v = m.v[m.torus.index(j, k)];
      worst = std::max(worst, std::abs(v - m.v[m.torus.index((n - j) % n, (n - k) % n)]));
      worst = std::max(worst, std::abs(v - m.v[m.torus.index((j + n / 2) % n, k)]));
      worst = std::max(worst, std::abs(v - m.v[m.torus.index(j, (n - k) % n)]));
    }
  CHECK(worst < 1e-6);
}

TEST_CASE("skew lattice solve") {
  TorusSpec t = square(128);
  t.tau = cd(0.3, 1.1);
  const SingularMetric m = solve_liouville(t, {cd(0, 0), cd(0.5, 0)});
  CHECK(m.residual < 1e-4);
}

TEST_CASE("refinement lowers the fourth-order residual at a fixed radius") {
  const double r128 = curvature_residual_fourth_order(base128(), 0.1);
  const double r256 = curvature_residual_fourth_order(base256(), 0.1);
  CHECK(r256 * 2 <= r128);
}

TEST_CASE("solver failures are reported") {
  SolverOptions opt;
  opt.newton_max = 1;
  opt.tol = 1e-14;
  CHECK_THROWS_AS(solve_liouville(square(128), {cd(0, 0), cd(0.5, 0)}, opt), NumericError);
  CHECK_THROWS_AS(solve_liouville(square(128), {cd(0, 0), cd(0.01, 0)}), NumericError);
  CHECK_THROWS_AS(solve_liouville(square(128), {cd(0, 0)}), DomainError);
}

TEST_CASE("pullback") {
  const SingularMetric& base = base256();
  const cd e(0.5, 0);
  CHECK(pullback_check(base, 1, e).rel_sup_diff == 0);
  const PullbackReport r3 = pullback_check(base, 3, e);
  CHECK(r3.card == 18);
  CHECK(r3.direct_residual < 1e-4);
  CHECK(r3.rel_sup_diff < 0.02);
  // flat metric: Φ_m*ω = m²ω
  const std::vector<double> flat(base.size(), 1.7);
  for (int m : {3, 5})
    for (double x : pullback_field(base.torus, flat, m)) CHECK(x == 1.7 * m * m);
}

TEST_CASE("mu decay") {
  const SingularMetric& base = base256();
  const MuTable t = mu_decay(base, {1, 3, 5, 7}, cd(0.5, 0));
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].mu == doctest::Approx(1.0).epsilon(1e-12));
  for (size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].mu < t.rows[i - 1].mu);
    CHECK(t.rows[i].mu <= 1 + 1e-9);
    CHECK(t.rows[i].card == 2 * t.rows[i].m * t.rows[i].m);
  }
  for (size_t i = 2; i < t.rows.size(); ++i) CHECK(rel(t.rows[i].m_mu, t.rows[1].m_mu) < 0.2);
  // at a fixed point away from the poles the ratio is at most θ₁(y)/(m²·min θ₁)
  const int n = base.torus.n;
  double min_density = 1e300;
  for (long i = 0; i < base.size(); ++i)
    if (!base.excluded(i)) min_density = std::min(min_density, base.density(i));
  const long y = base.torus.index(n / 4, n / 4);
  for (int m : {3, 5, 7}) CHECK(mu_ratio_at(base, m, n / 4, n / 4) <= base.density(y) / (m * m * min_density));
}

TEST_CASE("Riemann-Hurwitz") {
  const RhResult r0 = rh_genus(2, 2, 0);
  CHECK(r0.genus == 3);
  CHECK(*r0.average_df2 == 1);
  const RhResult r32 = rh_genus(2, 2, 32);
  CHECK(r32.genus == 19);
  CHECK(*r32.average_df2 == mpq_class(1, 9));
  mpq_class last = 2;
  for (long r = 0; r <= 400; r += 8) {
    const mpq_class a = *rh_genus(2, 2, r).average_df2;
    CHECK(a < last);
    last = a;
  }
  CHECK_THROWS_AS(rh_genus(2, 2, 1), DomainError);
  CHECK_FALSE(rh_genus(2, 1, 4).average_df2.has_value());
  for (int m : {3, 5, 7}) {
    const RhResult r = rh_genus(2, 2, branch_count_for(m));
    CHECK(r.genus == 3 + 2 * (m * m - 1));
    CHECK(*r.average_df2 == mpq_class(1, m * m));
  }
  CoverSpec odd;
  odd.branch = {cd(0, 0), cd(0.5, 0), cd(0, 0.5)};
  CHECK_THROWS_AS(odd.validate(), DomainError);
  CoverSpec even = odd;
  even.branch.push_back(cd(0.5, 0.5));
  CHECK(even.genus().genus == 3);
}
