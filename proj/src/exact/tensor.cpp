#include "gaprig/exact/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

// Sorts in place; returns the permutation sign, 0 on a repeated entry.
int sort_with_sign(Index& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

void check_range(const Index& idx, int dim) {
  for (int i : idx)
    if (i < 0 || i >= dim) throw DomainError("tensor index out of range");
}

void accumulate(std::map<Index, Scalar>& c, Index key, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(std::move(key), v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

}  // namespace

AltTensor AltTensor::basis(int dim, const Index& idx) {
  AltTensor t(static_cast<int>(idx.size()), dim);
  t.add(idx, 1);
  return t;
}

AltTensor AltTensor::vector(const Vec& v) {
  AltTensor t(1, static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) t.add({static_cast<int>(i)}, v[i]);
  return t;
}

Scalar AltTensor::coeff(const Index& sorted) const {
  auto it = c_.find(sorted);
  return it == c_.end() ? Scalar(0) : it->second;
}

void AltTensor::add(Index idx, const Scalar& c) {
  if (static_cast<int>(idx.size()) != degree_) throw DomainError("AltTensor degree mismatch");
  check_range(idx, dim_);
  int s = sort_with_sign(idx);
  if (s == 0) return;
  accumulate(c_, std::move(idx), s > 0 ? c : -c);
}

AltTensor& AltTensor::operator+=(const AltTensor& o) {
  if (o.degree_ != degree_ || o.dim_ != dim_) throw DomainError("AltTensor shape mismatch");
  for (const auto& [k, v] : o.c_) accumulate(c_, k, v);
  return *this;
}

AltTensor AltTensor::scaled(const Scalar& s) const {
  AltTensor t(degree_, dim_);
  if (s.is_zero()) return t;
  for (const auto& [k, v] : c_) t.c_.emplace(k, v * s);
  return t;
}

SymTensor SymTensor::variable(int dim, int i) {
  SymTensor t(1, dim);
  t.add({i}, 1);
  return t;
}

SymTensor SymTensor::constant(int dim, const Scalar& c) {
  SymTensor t(0, dim);
  t.add({}, c);
  return t;
}

Scalar SymTensor::coeff(const Index& sorted) const {
  auto it = c_.find(sorted);
  return it == c_.end() ? Scalar(0) : it->second;
}

void SymTensor::add(Index idx, const Scalar& c) {
  if (static_cast<int>(idx.size()) != degree_) throw DomainError("SymTensor degree mismatch");
  check_range(idx, dim_);
  std::sort(idx.begin(), idx.end());
  accumulate(c_, std::move(idx), c);
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (o.degree_ != degree_ || o.dim_ != dim_) throw DomainError("SymTensor shape mismatch");
  for (const auto& [k, v] : o.c_) accumulate(c_, k, v);
  return *this;
}

SymTensor SymTensor::scaled(const Scalar& s) const {
  SymTensor t(degree_, dim_);
  if (s.is_zero()) return t;
  for (const auto& [k, v] : c_) t.c_.emplace(k, v * s);
  return t;
}

Scalar SymTensor::evaluate(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DomainError("evaluate: point dimension");
  Scalar total;
  for (const auto& [k, v] : c_) {
    Scalar term = v;
    for (int i : k) {
      if (x[i].is_zero()) {
        term = 0;
        break;
      }
      term *= x[i];
    }
    total += term;
  }
  return total;
}

Scalar SymTensor::tensor_value(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DomainError("tensor_value: point dimension");
  Scalar total;
  for (const auto& [k, v] : c_) {
    Scalar term = v * Scalar(orbit_size(k));
    for (int i : k) term *= x[i];
    total += term;
  }
  return total;
}

SymTensor SymTensor::derivative(int i) const {
  if (degree_ == 0) throw DomainError("derivative of a constant tensor");
  SymTensor d(degree_ - 1, dim_);
  for (const auto& [k, v] : c_) {
    long mult = std::count(k.begin(), k.end(), i);
    if (mult == 0) continue;
    Index rest = k;
    rest.erase(std::find(rest.begin(), rest.end(), i));
    d.add(rest, v * Scalar(mult));
  }
  return d;
}

SymTensor SymTensor::substitute(const std::vector<SparseVec>& sub, int new_dim) const {
  if (static_cast<int>(sub.size()) != dim_) throw DomainError("substitute: table size");
  SymTensor out(degree_, new_dim);
  for (const auto& [k, v] : c_) {
    SymTensor term = SymTensor::constant(new_dim, v);
    for (int i : k) {
      SymTensor lin(1, new_dim);
      for (const auto& [j, w] : sub[i]) lin.add({j}, w);
      term = sym_mul(term, lin);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) out += term;
  }
  return out;
}

AltTensor wedge(const AltTensor& a, const AltTensor& b) {
  if (a.dim() != b.dim()) throw DomainError("wedge: dimension mismatch");
  AltTensor t(a.degree() + b.degree(), a.dim());
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      Index k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      t.add(std::move(k), va * vb);
    }
  return t;
}

SymTensor sym_mul(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw DomainError("sym_mul: dimension mismatch");
  SymTensor t(a.degree() + b.degree(), a.dim());
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      Index k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      t.add(std::move(k), va * vb);
    }
  return t;
}

long orbit_size(const Index& sorted) {
  long n = 1;
  for (size_t i = 1; i <= sorted.size(); ++i) n *= static_cast<long>(i);
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    long f = 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) {
      ++j;
      f *= static_cast<long>(j - i);
    }
    n /= f;
    i = j;
  }
  return n;
}

MonomialIndex::MonomialIndex(int dim, int degree) {
  Index cur(degree, 0);
  if (degree == 0) {
    list_.push_back({});
  } else if (dim > 0) {
    while (true) {
      list_.push_back(cur);
      int k = degree - 1;
      while (k >= 0 && cur[k] == dim - 1) --k;
      if (k < 0) break;
      ++cur[k];
      for (int j = k + 1; j < degree; ++j) cur[j] = cur[k];
    }
  }
  for (size_t i = 0; i < list_.size(); ++i) ids_[list_[i]] = static_cast<int>(i);
}

int MonomialIndex::id(const Index& sorted) const {
  auto it = ids_.find(sorted);
  if (it == ids_.end()) throw DomainError("unknown monomial");
  return it->second;
}

SubsetIndex::SubsetIndex(int dim, int n) {
  if (n > dim || n < 0) return;
  Index cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    list_.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[k] == dim - n + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  for (size_t i = 0; i < list_.size(); ++i) ids_[list_[i]] = static_cast<int>(i);
}

int SubsetIndex::id(const Index& sorted) const {
  auto it = ids_.find(sorted);
  if (it == ids_.end()) throw DomainError("unknown subset");
  return it->second;
}

namespace {

struct Word {
  Scalar coef;
  Index letters;
};

std::vector<Word> distinct_words(const SymTensor& slot, WordWeight weight) {
  std::vector<Word> out;
  for (const auto& [mono, c] : slot.coeffs()) {
    Index w = mono;
    const Scalar wc = weight == WordWeight::Polarization ? c / Scalar(orbit_size(mono)) : c;
    do {
      out.push_back({wc, w});
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

struct MuWalk {
  const std::vector<std::vector<Word>>& words;
  int n, m;
  const SubsetIndex& subsets;
  std::vector<Index> columns;  // columns[j] = letters chosen so far in column j
  std::map<Index, Scalar> acc;

  void run(size_t slot, const Scalar& coef) {
    if (static_cast<int>(slot) == n) {
      int sign = 1;
      Index key(m);
      for (int j = 0; j < m; ++j) {
        Index col = columns[j];
        sign *= sort_with_sign(col);
        key[j] = subsets.id(col);
      }
      std::sort(key.begin(), key.end());
      accumulate(acc, std::move(key), sign > 0 ? coef : -coef);
      return;
    }
    for (const Word& w : words[slot]) {
      bool clash = false;
      for (int j = 0; j < m && !clash; ++j)
        clash = std::find(columns[j].begin(), columns[j].end(), w.letters[j]) != columns[j].end();
      if (clash) continue;
      for (int j = 0; j < m; ++j) columns[j].push_back(w.letters[j]);
      run(slot + 1, coef * w.coef);
      for (int j = 0; j < m; ++j) columns[j].pop_back();
    }
  }
};

}  // namespace

SymTensor shuffle_mu_slots(const std::vector<SymTensor>& slots, int dimV, WordWeight weight) {
  const int n = static_cast<int>(slots.size());
  if (n == 0) throw DomainError("shuffle_mu: no slots");
  const int m = slots[0].degree();
  for (const auto& s : slots)
    if (s.degree() != m || s.dim() != dimV) throw DomainError("shuffle_mu: slot degree mismatch");
  SubsetIndex subsets(dimV, n);
  SymTensor out(m, subsets.size());
  if (m == 0) {
    Scalar prod = 1;
    for (const auto& s : slots) prod *= s.coeff({});
    // Λ^n of scalars vanishes unless n = 0 slots; keep the degenerate case explicit.
    if (n == 1) out.add({}, prod);
    return out;
  }
  std::vector<std::vector<Word>> words;
  for (const auto& s : slots) words.push_back(distinct_words(s, weight));
  MuWalk walk{words, n, m, subsets, std::vector<Index>(m), {}};
  walk.run(0, Scalar(1));
  // The regrouped tensor S is symmetric; its polynomial S(z,...,z) has the word sum as coefficient.
  for (auto& [key, v] : walk.acc) out.add(key, v);
  return out;
}

SymTensor shuffle_mu(const AltTensor& t, int n, int m, int dimV, WordWeight weight) {
  MonomialIndex monos(dimV, m);
  if (t.degree() != n || t.dim() != monos.size())
    throw DomainError("shuffle_mu: declared (n, m) do not match the tensor");
  SubsetIndex subsets(dimV, n);
  SymTensor out(m, subsets.size());
  for (const auto& [key, c] : t.coeffs()) {
    std::vector<SymTensor> slots;
    for (int id : key) {
      SymTensor s(m, dimV);
      s.add(monos.monomial(id), 1);
      slots.push_back(std::move(s));
    }
    out += shuffle_mu_slots(slots, dimV, weight).scaled(c);
  }
  return out;
}

}  // namespace gaprig
