#include "gaprig/lie/checks.hpp"

namespace gaprig {

namespace {

enum class Part { K, Plus, Minus };

Part part_of(const LieModel& m, int i) {
  if (i < m.k_count()) return Part::K;
  return i < m.k_count() + m.p_count() ? Part::Plus : Part::Minus;
}

bool supported_in(const LieModel& m, const SparseVec& v, Part p) {
  for (const auto& [i, c] : v)
    if (part_of(m, i) != p) return false;
  return true;
}

}  // namespace

StructureReport structure_checks(const LieModel& m) {
  StructureReport r;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag) r.failures.push_back(what);
    flag = false;
  };
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparseVec& b = m.ad(i, j);
      const Part pi = part_of(m, i), pj = part_of(m, j);
      if (pi == Part::K && pj == Part::K && !supported_in(m, b, Part::K)) fail(r.k_closed, "[k,k] not in k");
      if (pi == Part::K && pj != Part::K && !supported_in(m, b, pj)) fail(r.k_preserves_p, "[k,p] leaves p±");
      if (pi != Part::K && pi == pj && !b.empty()) fail(r.pplus_abelian, "[p±,p±] != 0");
      if (pi != Part::K && pj != Part::K && pi != pj && !supported_in(m, b, Part::K))
        fail(r.pplus_pminus_in_k, "[p+,p-] not in k");
    }
  const Scalar i_unit = Scalar::i();
  for (int a = 0; a < n; ++a) {
    const Matrix x = m.basis(a);
    const Matrix hx = bracket(m.H0(), x);
    const Part p = part_of(m, a);
    const Matrix expect = p == Part::K ? Matrix(x.rows(), x.cols()) : (p == Part::Plus ? x * i_unit : x * -i_unit);
    // H0 is central in k
    if (hx != expect) fail(r.h0_eigen, "ad(H0) eigenvalue");
    const Matrix tx = m.tau(x);
    if (m.tau(tx) != x) fail(r.tau_involution, "tau not involutive");
    if (p == Part::Plus && !supported_in(m, m.coords(tx), Part::Minus)) fail(r.tau_involution, "tau(p+) not in p-");
  }
  const Matrix& g = m.killing_gram();
  if (g != g.transpose()) fail(r.gram_symmetric, "Killing Gram not symmetric");
  // z over k, x and y over p
  for (int z = 0; z < m.k_count(); ++z)
    for (int a = m.k_count(); a < n; ++a)
      for (int b = m.k_count(); b < n; ++b) {
        const Scalar s = m.killing_coords(m.ad(z, a), m.coords(m.basis(b))) +
                         m.killing_coords(m.coords(m.basis(a)), m.ad(z, b));
        if (!s.is_zero()) fail(r.killing_invariant, "Killing form not ad-invariant");
      }
  return r;
}

}  // namespace gaprig
