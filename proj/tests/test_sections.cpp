#include <doctest.h>

#include <random>

#include "gaprig/embed/catalog.hpp"
#include "gaprig/exact/linalg.hpp"
#include "gaprig/lie/k_group.hpp"
#include "gaprig/sections/bridge.hpp"
#include "gaprig/sections/quotient_path.hpp"

using namespace gaprig;

namespace {

Vec unit_vec(const LieModel& m, const std::string& label) {
  const auto& l = m.pplus_labels();
  Vec v(l.size());
  v[std::find(l.begin(), l.end(), label) - l.begin()] = 1;
  return v;
}

Vec sum_vec(const LieModel& m, const std::string& a, const std::string& b) { return vec_add(unit_vec(m, a), unit_vec(m, b)); }

// x23, x12, x13, x22, x33, x11 as coordinates on the symmetric 6-plane
std::vector<Vec> sym_basis(const LieModel& m) {
  return {sum_vec(m, "e23", "e32"), sum_vec(m, "e12", "e21"), sum_vec(m, "e13", "e31"),
          unit_vec(m, "e22"),       unit_vec(m, "e33"),       unit_vec(m, "e11")};
}

const std::vector<std::string> kX = {"x23", "x12", "x13", "x22", "x33", "x11"};

bool same_span(const Plane& a, const Plane& b) {
  std::vector<Vec> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return a.dim() == b.dim() && pplus_rank(all) == a.dim();
}

}  // namespace

TEST_CASE("determinant sections") {
  auto m1 = get_model("I(1,1)");
  CHECK(det_section(*m1) == poly_from_string("e11", m1->pplus_labels()));
  auto m2 = get_model("I(2,2)");
  CHECK(det_section(*m2) == poly_from_string("e11*e22 - e12*e21", m2->pplus_labels()));
  auto m3 = get_model("I(3,3)");
  const SymTensor det = det_section(*m3);
  CHECK(det == poly_from_string("e11*e22*e33 + e12*e23*e31 + e13*e21*e32 - e13*e22*e31 - e12*e21*e33 - e11*e23*e32",
                                m3->pplus_labels()));
  CHECK_THROWS(det_section(*get_model("I(2,3)")));
}

TEST_CASE("theta map") {
  auto m = get_model("I(3,3)");
  const auto& names = m->pplus_labels();
  const SymTensor det = det_section(*m);
  CHECK(theta_map(det, unit_vec(*m, "e12")) == poly_from_string("e23*e31 - e21*e33", names));
  CHECK(theta_map(det, unit_vec(*m, "e11")) == poly_from_string("e22*e33 - e23*e32", names));
  // Euler: Σ v_a θ(e_a)(v) = r·det(v)
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int k = 0; k < 10; ++k) {
    Vec v(9);
    for (auto& x : v) x = Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
    CHECK(theta_map(det, v).evaluate(v) == Scalar(3) * det.evaluate(v));
  }
}

TEST_CASE("quotient-variable computation on the symmetric 6-plane") {
  auto m = get_model("I(3,3)");
  const SymTensor det = det_section(*m);
  const std::vector<Vec> basis = sym_basis(*m);
  auto bar = [&](const Vec& v) { return restrict_to(theta_map(det, v), basis); };
  CHECK(bar(sum_vec(*m, "e12", "e21")) == poly_from_string("2*x23*x13 - 2*x12*x33", kX));
  CHECK(bar(sum_vec(*m, "e13", "e31")) == poly_from_string("2*x12*x23 - 2*x13*x22", kX));
  CHECK(bar(sum_vec(*m, "e23", "e32")) == poly_from_string("2*x12*x13 - 2*x23*x11", kX));
  CHECK(bar(unit_vec(*m, "e11")) == poly_from_string("x22*x33 - x23^2", kX));
  CHECK(bar(unit_vec(*m, "e22")) == poly_from_string("x11*x33 - x13^2", kX));
  CHECK(bar(unit_vec(*m, "e33")) == poly_from_string("x11*x22 - x12^2", kX));
  const QuotientComputation q = quotient_computation(*m, basis);
  CHECK_FALSE(q.theta_bar_all_zero);
  CHECK(q.retained_words == Scalar(32));
  CHECK(q.full_words == Scalar(-16));
  CHECK(q.full_polarized == Scalar(-1));
}

TEST_CASE("skew 3-plane: tangent construction vanishes, cotangent does not") {
  auto m = get_model("I(3,3)");
  const Plane skew = catalog("II3_in_I33").tangent_plane();
  const QuotientComputation tangent = quotient_computation(*m, skew.vectors());
  CHECK(tangent.theta_bar_all_zero);
  CHECK(tangent.full_polarized.is_zero());
  const Plane ann = annihilator(skew);
  CHECK(ann.dim() == 6);
  CHECK(same_span(ann, catalog("III3_in_I33").tangent_plane()));
  CHECK(same_span(annihilator(ann), skew));
  const QuotientComputation cot = quotient_computation(*m, ann.vectors());
  CHECK_FALSE(cot.full_polarized.is_zero());
  CHECK(cot.retained_words == Scalar(32));
}

TEST_CASE("tau sections at diagonal planes") {
  CHECK(evaluate_t(tau_section(get_model("I(2,2)")), catalog("diag_polydisk_I22").tangent_plane()) == Scalar(-1));
  CHECK(evaluate_t(tau_section(get_model("I(3,3)"), 3), catalog("polydisk_I33").tangent_plane()) ==
        Scalar::frac(-1, 4));
  auto m1 = get_model("I(1,1)");
  const PolySection t1 = tau_section(m1, 1);
  CHECK(!evaluate_t(t1, Plane::full(m1)).is_zero());
}

TEST_CASE("vanishing is independent of the spanning set") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> d(-2, 2);
  const PolySection t = tau_section(get_model("I(2,2)"));
  const Plane diag = catalog("diag_polydisk_I22").tangent_plane();
  const Plane degenerate = Plane::parse(diag.model_ptr(), "e11, e12");
  for (int k = 0; k < 10; ++k) {
    Matrix a(2, 2);
    do
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a(i, j) = Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
    while (rank(a) < 2);
    CHECK_FALSE(evaluate_t(t, diag.recombined(a)).is_zero());
    CHECK(evaluate_t(t, degenerate.recombined(a)).is_zero() == evaluate_t(t, degenerate).is_zero());
  }
}

TEST_CASE("K-invariance: rank-two sections are invariant, the r = 3 ones are not") {
  std::mt19937_64 rng(53);
  for (const char* s : {"I(2,2)", "III(2)", "II(4)", "IV(4)"}) {
    CAPTURE(s);
    const InvarianceReport r = k_invariance(tau_section(get_model(s)), 10, 3, rng);
    CHECK(r.invariant);
  }
  // even slot degree: the regrouping depends on the sorted representatives
  CHECK_FALSE(k_invariance(tau_section(get_model("I(3,3)"), 3), 3, 3, rng).invariant);
  CHECK_FALSE(k_invariance(tau_section(get_model("III(3)")), 3, 3, rng).invariant);
}

TEST_CASE("quadric discriminant") {
  CHECK(!quadric_discriminant(catalog("IV3_in_IV5").tangent_plane()).is_zero());
  CHECK(!quadric_discriminant(catalog("IV2_in_IV4").tangent_plane()).is_zero());
  auto m = get_model("IV(4)");
  Vec null(4);
  null[0] = 1;
  null[1] = Scalar::i();
  CHECK(quadric_discriminant(Plane(m, {null})).is_zero());
  CHECK_THROWS(quadric_discriminant(Plane::full(m)));
  // K acts by orthogonal maps up to a character
  std::mt19937_64 rng(59);
  const Plane p = catalog("IV3_in_IV4").tangent_plane();
  const Plane q = random_plane(m, 3, rng);
  const Scalar dp = quadric_discriminant(p), dq = quadric_discriminant(q);
  for (const Matrix& k : sample_k(*m, 10, rng)) {
    const Matrix kinv = inverse(k);
    CHECK(quadric_discriminant(p.transformed(k, kinv)) * dq == quadric_discriminant(q.transformed(k, kinv)) * dp);
  }
}

TEST_CASE("projection determinant detects factor degeneracy") {
  const Plane f = catalog("factor_disk_in_bidisk").tangent_plane();
  CHECK(!projection_determinant(f, 0).is_zero());
  CHECK(projection_determinant(f, 1).is_zero());
  const Plane d = catalog("diag_disk_in_bidisk").tangent_plane();
  CHECK(!projection_determinant(d, 0).is_zero());
  CHECK(!projection_determinant(d, 1).is_zero());
}

TEST_CASE("bridge: every (H3) plane with a section has t != 0") {
  int checked = 0;
  for (const std::string& n : catalog_names()) {
    const auto b = bridge_check(catalog(n));
    if (!b || !b->h3) continue;
    CAPTURE(n);
    CHECK(b->nonzero());
    ++checked;
  }
  CHECK(checked >= 15);
}
