// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--criterion k]
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gaprig/cover/pullback.hpp"
#include "gaprig/cover/riemann_hurwitz.hpp"
#include "gaprig/embed/catalog.hpp"
#include "gaprig/embed/tables.hpp"
#include "gaprig/moment/descent.hpp"
#include "gaprig/moment/sigma.hpp"
#include "gaprig/sections/bridge.hpp"
#include "gaprig/sections/quotient_path.hpp"

using namespace gaprig;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool line(int k, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", k, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  return pass;
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const std::vector<std::string> kModels = {"I(1,1)", "I(2,2)", "I(2,3)", "II(4)",  "II(5)",
                                          "III(2)", "III(3)", "IV(3)",  "IV(4)", "IV(5)"};

bool c1() {
  const auto t0 = Clock::now();
  int ok = 0;
  std::string bad;
  for (const std::string& s : kModels) {
    if (sigma_collinear_h0(Plane::full(get_model(s))))
      ++ok;
    else
      bad += " " + s;
  }
  const double t = seconds_since(t0);
  return line(1, ok == 10 && t < 10,
              fmt("Sigma(p+) exactly collinear with H0 for %d/10 models%s; %.2fs (limit 10s)", ok, bad.c_str(), t));
}

bool c2() {
  int ok = 0, total = 0;
  std::string bad;
  for (const EinsteinRow& r : einstein_table_rows()) {
    ++total;
    if (r.agrees())
      ++ok;
    else
      bad += " " + r.model + " rho=" + r.report.rho.str() + " expected " + r.expected_rho.str();
  }
  return line(2, ok == total, fmt("normalized rho exact for %d/%d rows%s", ok, total, bad.c_str()));
}

bool c3() {
  std::mt19937_64 rng(3);
  int planes = 0, critical = 0, weak = 0, skipped = 0;
  std::string bad;
  for (const std::string& n : catalog_names()) {
    const Plane p = catalog(n).tangent_plane();
    if (p.dim() == p.model().p_count()) {
      ++skipped;  // the whole of p+: no nearby plane of the same dimension differs from it
      continue;
    }
    ++planes;
    if (is_critical(p))
      ++critical;
    else
      bad += " " + n + "(not critical)";
    int noncritical = 0;
    for (int k = 0; k < 10; ++k) noncritical += !is_critical(perturbed(p, rng));
    if (noncritical < 9) {
      ++weak;
      bad += " " + n + fmt("(%d/10 perturbations non-critical)", noncritical);
    }
  }
  return line(3, critical == planes && weak == 0,
              fmt("%d/%d catalog tangent planes critical; %d with < 9/10 non-critical perturbations; %d full-p+ "
                  "planes skipped%s",
                  critical, planes, weak, skipped, bad.c_str()));
}

bool c4() {
  std::mt19937_64 rng(4);
  int violations = 0, samples = 0;
  for (const std::string& s : kModels) {
    const ModelPtr m = get_model(s);
    const int d = m->p_count();
    std::vector<Scalar> bound(d + 1);
    for (int p = 1; p <= d; ++p) bound[p] = sigma_norm2_lower_bound(*m, p);
    for (int k = 0; k < 200; ++k) {
      const int p = d == 1 ? 1 : 1 + k % (d - 1);
      const Plane pl = random_plane(m, p, rng);
      ++samples;
      if (sigma_norm2(pl).re() < bound[pl.dim()].re()) ++violations;
    }
  }
  return line(4, violations == 0,
              fmt("%d violations of sigma_norm2 >= reference over %d seeded planes (exact)", violations, samples));
}

bool c5() {
  int ok = 0, total = 0;
  std::string bad;
  for (const TableRow& r : classical_table_rows()) {
    ++total;
    if (r.agrees()) {
      ++ok;
      continue;
    }
    bad += " " + r.embedding + " [" + r.claim + "]: h2=" + (r.report.h2 ? "true" : "false") +
           " h3=" + (r.report.h3 ? "true" : "false") + " expected h3=" + (r.expected_h3 ? "true" : "false");
  }
  return line(5, ok == total, fmt("%d/%d table verdicts agree exactly;%s", ok, total, bad.c_str()));
}

Vec unit_vec(const LieModel& m, const std::string& label) {
  const auto& l = m.pplus_labels();
  Vec v(l.size());
  v[std::find(l.begin(), l.end(), label) - l.begin()] = 1;
  return v;
}

bool c6() {
  const ModelPtr m = get_model("I(3,3)");
  const auto& names = m->pplus_labels();
  const std::vector<std::string> x = {"x23", "x12", "x13", "x22", "x33", "x11"};
  auto sum = [&](const char* a, const char* b) { return vec_add(unit_vec(*m, a), unit_vec(*m, b)); };
  const std::vector<Vec> basis = {sum("e23", "e32"), sum("e12", "e21"), sum("e13", "e31"),
                                  unit_vec(*m, "e22"), unit_vec(*m, "e33"), unit_vec(*m, "e11")};
  const SymTensor det = det_section(*m);
  int ok = 0, total = 0;
  std::string bad;
  auto expect = [&](const char* what, const SymTensor& got, const SymTensor& want) {
    ++total;
    if (got == want)
      ++ok;
    else
      bad += std::string(" ") + what;
  };
  expect("theta(e12)", theta_map(det, unit_vec(*m, "e12")), poly_from_string("e23*e31 - e21*e33", names));
  expect("theta(e11)", theta_map(det, unit_vec(*m, "e11")), poly_from_string("e22*e33 - e23*e32", names));
  auto bar = [&](const Vec& v) { return restrict_to(theta_map(det, v), basis); };
  expect("theta_bar(e12+e21)", bar(sum("e12", "e21")), poly_from_string("2*x23*x13 - 2*x12*x33", x));
  expect("theta_bar(e13+e31)", bar(sum("e13", "e31")), poly_from_string("2*x12*x23 - 2*x13*x22", x));
  expect("theta_bar(e23+e32)", bar(sum("e23", "e32")), poly_from_string("2*x12*x13 - 2*x23*x11", x));
  const QuotientComputation q = quotient_computation(*m, basis);
  const Plane skew = catalog("II3_in_I33").tangent_plane();
  const QuotientComputation tangent = quotient_computation(*m, skew.vectors());
  const QuotientComputation cot = quotient_computation(*m, annihilator(skew).vectors());
  ++total;
  if (tangent.theta_bar_all_zero && tangent.full_polarized.is_zero())
    ++ok;
  else
    bad += " tangent-construction-nonzero";
  ++total;
  if (!cot.full_polarized.is_zero())
    ++ok;
  else
    bad += " cotangent-construction-zero";
  ++total;
  const bool final_ok = q.full_words == Scalar(32);
  if (final_ok)
    ++ok;
  else
    bad += " final-evaluation";
  return line(6, ok == total,
              fmt("%d/%d exact equalities;%s final coefficient of (x23^x12^x13^x22^x33^x11)^2: expected 32, "
                  "all terms %s (square-free terms only %s, polarization weights %s)",
                  ok, total, bad.c_str(), q.full_words.str().c_str(), q.retained_words.str().c_str(),
                  q.full_polarized.str().c_str()));
}

bool c7() {
  int checked = 0, nonzero = 0, iv = 0;
  std::string bad;
  for (const std::string& n : catalog_names()) {
    const auto b = bridge_check(catalog(n));
    if (!b || !b->h3) continue;
    ++checked;
    if (b->nonzero())
      ++nonzero;
    else
      bad += " " + n;
    if (b->section.find("quadric") != std::string::npos) ++iv;
  }
  return line(7, checked > 0 && nonzero == checked,
              fmt("evaluate_t != 0 on %d/%d (H3) planes with an explicit section (%d type IV quadric rows)%s", nonzero,
                  checked, iv, bad.c_str()));
}

bool c8() {
  const auto t0 = Clock::now();
  const ModelPtr m = get_model("I(2,2)");
  const double minimum = sigma_norm2_lower_bound(*m, 2).re().get_d();
  std::mt19937_64 rng(8);
  int monotone = 0, above = 0;
  double lowest = 1e300, worst_rise = 0;
  for (int k = 0; k < 20; ++k) {
    const DescentResult r = descent_flow(random_plane(m, 2, rng), 400, 0.5);
    bool mono = true;
    for (size_t i = 1; i < r.values.size(); ++i) {
      worst_rise = std::max(worst_rise, r.values[i] - r.values[i - 1]);
      mono = mono && r.values[i] <= r.values[i - 1] + 1e-12;
    }
    monotone += mono;
    above += r.terminal_value >= minimum - 1e-6;
    lowest = std::min(lowest, r.terminal_value);
  }
  const double t = seconds_since(t0);
  return line(8, monotone == 20 && above == 20 && t < 60,
              fmt("20 descents: %d monotone (largest rise %.1e, slack 1e-12), %d end >= %.6f - 1e-6 "
                  "(lowest terminal %.10f); %.2fs (limit 60s)",
                  monotone, worst_rise, above, minimum, lowest, t));
}

bool c9() {
  const auto t0 = Clock::now();
  TorusSpec t;
  t.n = 512;
  const cd e(0.5, 0);
  const SingularMetric base = solve_liouville(t, {cd(0, 0), e});
  const bool a = base.residual < 1e-4;
  const PullbackReport pb = pullback_check(base, 3, e);
  const bool b = pb.rel_sup_diff < 0.02;
  const MuTable mt = mu_decay(base, {1, 3, 5, 7}, e);
  bool decreasing = true;
  for (size_t i = 1; i < mt.rows.size(); ++i) decreasing = decreasing && mt.rows[i].mu < mt.rows[i - 1].mu;
  const bool mu1 = std::abs(mt.rows[0].mu - 1) <= 1e-3;
  double lo = 1e300, hi = 0;
  for (size_t i = 1; i < mt.rows.size(); ++i) {
    lo = std::min(lo, mt.rows[i].m_mu);
    hi = std::max(hi, mt.rows[i].m_mu);
  }
  const double mid = 0.5 * (lo + hi);
  const bool stable = hi - mid <= 0.2 * mid;
  const double secs = seconds_since(t0);
  std::string mus;
  for (const MuRow& r : mt.rows) mus += fmt(" mu_%d=%.6f", r.m, r.mu);
  return line(9, a && b && decreasing && mu1 && stable && secs < 600,
              fmt("(a) residual %.2e (< 1e-4); (b) pullback m=3 rel sup diff %.3e (< 2e-2); (c)%s, decreasing=%s, "
                  "m*mu in [%.6f, %.6f], bound %.6f (+-20%%); %.1fs (limit 600s)",
                  base.residual, pb.rel_sup_diff, mus.c_str(), decreasing ? "yes" : "no", lo, hi, mt.sup_m_mu, secs));
}

bool c10() {
  int ok = 0;
  std::string rows;
  for (int m : {3, 5, 7}) {
    const RhResult r = rh_genus(2, 2, branch_count_for(m));
    const long g = 3 + 2L * (m * m - 1);
    const bool good = r.genus == g && r.average_df2 && *r.average_df2 == mpq_class(1, m * m);
    ok += good;
    rows += fmt(" m=%d: g=%ld avg=%s", m, r.genus, r.average_df2 ? r.average_df2->get_str().c_str() : "-");
  }
  return line(10, ok == 3, fmt("%d/3 exact;%s", ok, rows.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion k]\n");
      return 2;
    }
  }
  const std::vector<std::function<bool()>> all = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  bool pass = true;
  for (int k = 1; k <= static_cast<int>(all.size()); ++k) {
    if (only != 0 && k != only) continue;
    try {
      pass = all[k - 1]() && pass;
    } catch (const std::exception& ex) {
      pass = line(k, false, std::string("exception: ") + ex.what()) && pass;
    }
  }
  return pass ? 0 : 1;
}
