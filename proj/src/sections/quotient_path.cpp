#include "gaprig/sections/quotient_path.hpp"

#include <regex>

#include "gaprig/error.hpp"

namespace gaprig {

SymTensor restrict_to(const SymTensor& f, const std::vector<Vec>& basis) {
  std::vector<SparseVec> sub(f.dim());
  for (size_t k = 0; k < basis.size(); ++k) {
    if (static_cast<int>(basis[k].size()) != f.dim()) throw DomainError("restrict_to: basis vector length");
    for (int a = 0; a < f.dim(); ++a)
      if (!basis[k][a].is_zero()) sub[a].push_back({static_cast<int>(k), basis[k][a]});
  }
  return f.substitute(sub, static_cast<int>(basis.size()));
}

SymTensor square_free_part(const SymTensor& f) {
  SymTensor out(f.degree(), f.dim());
  for (const auto& [k, c] : f.coeffs())
    if (std::adjacent_find(k.begin(), k.end()) == k.end()) out.add(k, c);
  return out;
}

QuotientComputation quotient_computation(const LieModel& m, const std::vector<Vec>& basis) {
  SymTensor det = det_section(m);
  const int k = static_cast<int>(basis.size());
  if (rank_of(basis) != k) throw DomainError("quotient_computation: dependent basis");
  QuotientComputation q;
  q.theta_bar_all_zero = true;
  for (const auto& b : basis) {
    q.theta_bar.push_back(restrict_to(theta_map(det, b), basis));
    q.theta_bar_all_zero = q.theta_bar_all_zero && q.theta_bar.back().is_zero();
  }
  const Index top(det.degree() - 1, 0);  // (y_1 ∧ ... ∧ y_k)^{r-1}; Λ^k of a k-space has one subset
  q.full_words = shuffle_mu_slots(q.theta_bar, k, WordWeight::DistinctWords).coeff(top);
  q.full_polarized = shuffle_mu_slots(q.theta_bar, k, WordWeight::Polarization).coeff(top);
  std::vector<SymTensor> kept;
  for (const auto& t : q.theta_bar) kept.push_back(square_free_part(t));
  q.retained_words = shuffle_mu_slots(kept, k, WordWeight::DistinctWords).coeff(top);
  return q;
}

SymTensor poly_from_string(const std::string& text, const std::vector<std::string>& names) {
  static const std::regex term(R"(\s*([+-])?\s*(\d+)?\s*\*?\s*([A-Za-z]\w*(?:\s*\*\s*[A-Za-z]\w*|\^\d+)*))");
  static const std::regex var(R"(([A-Za-z]\w*)(?:\^(\d+))?)");
  std::optional<SymTensor> out;
  auto it = std::sregex_iterator(text.begin(), text.end(), term);
  size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& mt = *it;
    if (static_cast<size_t>(mt.position()) != consumed) throw ParseError("bad polynomial: " + text);
    consumed = mt.position() + mt.length();
    Scalar c = mt[2].matched ? Scalar(std::stol(mt[2])) : Scalar(1);
    if (mt[1].matched && mt[1] == "-") c = -c;
    Index idx;
    std::string body = mt[3];
    for (auto v = std::sregex_iterator(body.begin(), body.end(), var); v != std::sregex_iterator(); ++v) {
      auto pos = std::find(names.begin(), names.end(), (*v)[1].str());
      if (pos == names.end()) throw ParseError("unknown variable " + (*v)[1].str());
      int times = (*v)[2].matched ? std::stoi((*v)[2]) : 1;
      for (int t = 0; t < times; ++t) idx.push_back(static_cast<int>(pos - names.begin()));
    }
    if (!out) out = SymTensor(static_cast<int>(idx.size()), static_cast<int>(names.size()));
    out->add(idx, c);
  }
  if (!out || consumed != text.size()) throw ParseError("bad polynomial: " + text);
  return *out;
}

}  // namespace gaprig
