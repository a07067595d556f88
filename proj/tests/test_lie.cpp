#include <doctest.h>

#include <random>

#include "gaprig/error.hpp"
#include "gaprig/lie/checks.hpp"
#include "gaprig/lie/curvature.hpp"
#include "gaprig/lie/lie_model.hpp"

using namespace gaprig;

namespace {

const char* kModels[] = {"I(1,1)", "I(2,2)", "I(2,3)", "II(4)", "II(5)", "III(2)", "III(3)", "IV(3)", "IV(4)", "IV(5)"};

Matrix random_element(const LieModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  SparseVec c;
  for (int i = 0; i < m.dim(); ++i) {
    Scalar s(mpq_class(d(rng)), mpq_class(d(rng)));
    if (!s.is_zero()) c.emplace_back(i, s);
  }
  return m.element(c);
}

Matrix random_real_p(const LieModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix x(m.n(), m.n());
  for (const Matrix& b : real_p_basis(m)) x += b * Scalar(d(rng));
  return x;
}

}  // namespace

TEST_CASE("domain spec parsing") {
  CHECK(DomainSpec::parse("I(2,3)").dim() == 6);
  CHECK(DomainSpec::parse("I(1,1)^3").factors.size() == 3);
  CHECK(DomainSpec::parse("II(4)xIII(2)").dim() == 6 + 3);
  CHECK(DomainSpec::parse("IV(5)").rank() == 2);
  CHECK_THROWS_AS(DomainSpec::parse("I(0,2)"), ParseError);
  CHECK_THROWS_AS(validate(Factor{DomainType::I, 0, 2}), DomainError);
  CHECK_THROWS_AS(DomainSpec::parse("VI"), UnsupportedError);
  CHECK_THROWS_AS(DomainSpec::parse("V"), UnsupportedError);
  CHECK_THROWS_AS(DomainSpec::parse("banana"), ParseError);
}

TEST_CASE("build_model examples") {
  auto disk = get_model("I(1,1)");
  CHECK(disk->p_count() == 1);
  const Matrix e = disk->basis(disk->pplus_index(0));
  CHECK(bracket(disk->H0(), e) == e * Scalar::i());
  auto iii = get_model("III(2)");
  CHECK(iii->p_count() == 3);
  CHECK(iii->spec().rank() == 2);
  auto iv = get_model("IV(3)");
  CHECK(iv->p_count() == 3);
  CHECK(iv->spec().rank() == 2);
}

TEST_CASE("structure invariants hold exactly") {
  for (const char* s : kModels) {
    CAPTURE(s);
    const StructureReport r = structure_checks(*get_model(s));
    CHECK(r.ok());
  }
  CHECK(structure_checks(*get_model("I(1,1)^2")).ok());
  CHECK(structure_checks(*get_model("II(4)xIII(2)")).ok());
}

TEST_CASE("ad(H0)^2 is -1 on p and 0 on k") {
  for (const char* s : kModels) {
    auto m = get_model(s);
    for (int i = 0; i < m->dim(); ++i) {
      const Matrix x = m->basis(i);
      const Matrix twice = bracket(m->H0(), bracket(m->H0(), x));
      CHECK(twice == (i < m->k_count() ? Matrix(m->n(), m->n()) : -x));
    }
  }
}

TEST_CASE("killing agrees with the independent ad-trace oracle") {
  std::mt19937_64 rng(21);
  for (const char* s : kModels) {
    auto m = get_model(s);
    for (int k = 0; k < 20; ++k) {
      const Matrix x = random_element(*m, rng), y = random_element(*m, rng);
      CHECK(m->killing(x, y) == killing_trace_oracle(*m, x, y));
      CHECK(m->killing(x, y) == m->killing(y, x));
      const Matrix z = random_element(*m, rng);
      CHECK((m->killing(bracket(z, x), y) + m->killing(x, bracket(z, y))).is_zero());
    }
  }
}

TEST_CASE("killing(H0,H0) on I(1,1) matches 4·tr on sl2") {
  auto m = get_model("I(1,1)");
  const Scalar b = m->killing(m->H0(), m->H0());
  CHECK(b == Scalar(4) * (m->H0() * m->H0()).trace());
  CHECK(b.is_real());
  CHECK(b.re() < 0);
}

TEST_CASE("hermitian pairing") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const char* s : kModels) {
    auto m = get_model(s);
    for (int k = 0; k < 5; ++k) {
      Vec a(m->p_count()), b(m->p_count());
      for (auto& x : a) x = Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
      for (auto& x : b) x = Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
      if (!vec_is_zero(a)) {
        const Scalar aa = m->herm_coords(a, a);
        CHECK(aa.is_real());
        CHECK(aa.re() > 0);
      }
      CHECK(m->herm_coords(a, b) == m->herm_coords(b, a).conj());
    }
  }
  auto m = get_model("I(2,2)");
  for (int a = 0; a < m->p_count(); ++a)
    for (int b = 0; b < m->p_count(); ++b)
      if (a != b) CHECK(m->herm(m->basis(m->pplus_index(a)), m->basis(m->pplus_index(b))).is_zero());
}

TEST_CASE("curvature symmetries") {
  std::mt19937_64 rng(8);
  for (const char* s : {"I(2,2)", "III(2)", "IV(3)"}) {
    auto m = get_model(s);
    for (int k = 0; k < 3; ++k) {
      const Matrix x = random_real_p(*m, rng), y = random_real_p(*m, rng), z = random_real_p(*m, rng),
                   w = random_real_p(*m, rng);
      CHECK(curvature(x, x, z, w, *m).is_zero());
      CHECK((curvature(x, y, z, w, *m) + curvature(y, z, x, w, *m) + curvature(z, x, y, w, *m)).is_zero());
    }
  }
}

TEST_CASE("disk holomorphic sectional curvature from explicit sl2 brackets") {
  auto m = get_model("I(1,1)");
  const Matrix a = m->basis(m->pplus_index(0));
  const Matrix x = a + m->tau(a), y = bracket(m->H0(), x);
  auto b = [](const Matrix& p, const Matrix& q) { return Scalar(4) * (p * q).trace(); };
  const Scalar num = -b(bracket(bracket(x, y), y), x);
  const Scalar den = b(x, x) * b(y, y) - b(x, y) * b(x, y);
  const Scalar k = holomorphic_sectional_curvature(a, *m);
  CHECK(k == num / den);
  CHECK(k.re() < 0);
}

TEST_CASE("einstein_report examples") {
  CHECK(einstein_report(*get_model("IV(3)")).rho == Scalar(-3));
  CHECK(einstein_report(*get_model("III(2)")).rho == Scalar(-3));
  CHECK(einstein_report(*get_model("I(2,2)")).rho == Scalar(-4));
  CHECK_THROWS(einstein_report(*get_model("I(1,1)^2")));
}
