#pragma once

#include <map>
#include <vector>

#include "gaprig/exact/matrix.hpp"

namespace gaprig {

using Index = std::vector<int>;

// Alternating tensor; keys are strictly increasing index tuples.
class AltTensor {
 public:
  AltTensor(int degree, int dim) : degree_(degree), dim_(dim) {}
  static AltTensor basis(int dim, const Index& idx);
  static AltTensor vector(const Vec& v);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<Index, Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(const Index& sorted) const;

  // Adds c * e_{idx[0]} ^ ... ; unsorted tuples fold in the permutation sign.
  void add(Index idx, const Scalar& c);
  AltTensor& operator+=(const AltTensor& o);
  AltTensor scaled(const Scalar& s) const;
  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  int degree_;
  int dim_;
  std::map<Index, Scalar> c_;
};

// Symmetric tensor in the monomial convention: the key is a sorted tuple and
// the coefficient is that of the monomial x^M, with no multinomial factor.
class SymTensor {
 public:
  SymTensor(int degree, int dim) : degree_(degree), dim_(dim) {}
  static SymTensor variable(int dim, int i);
  static SymTensor constant(int dim, const Scalar& c);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<Index, Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(const Index& sorted) const;

  void add(Index idx, const Scalar& c);
  SymTensor& operator+=(const SymTensor& o);
  SymTensor scaled(const Scalar& s) const;
  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.c_ == b.c_;
  }

  // Polynomial value sum_M c_M x^M.
  Scalar evaluate(const Vec& x) const;
  // Value of the tensor on x^{(x)degree} when each monomial stands for the sum
  // of its distinct orderings: sum_M c_M N(M) x^M.
  Scalar tensor_value(const Vec& x) const;
  // d/dx_i of the polynomial
  SymTensor derivative(int i) const;
  // Linear substitution x_j -> sum_k sub[j][k] y_k into a space of dimension new_dim.
  SymTensor substitute(const std::vector<SparseVec>& sub, int new_dim) const;

 private:
  int degree_;
  int dim_;
  std::map<Index, Scalar> c_;
};

AltTensor wedge(const AltTensor& a, const AltTensor& b);
SymTensor sym_mul(const SymTensor& a, const SymTensor& b);

// Number of distinct orderings of a sorted tuple.
long orbit_size(const Index& sorted);

// Enumeration of sorted degree-m monomials over dim variables (lexicographic).
class MonomialIndex {
 public:
  MonomialIndex(int dim, int degree);
  int size() const { return static_cast<int>(list_.size()); }
  int id(const Index& sorted) const;
  const Index& monomial(int id) const { return list_.at(id); }

 private:
  std::vector<Index> list_;
  std::map<Index, int> ids_;
};

// Enumeration of n-subsets of {0..dim-1} (lexicographic); indexes a basis of Λ^n.
class SubsetIndex {
 public:
  SubsetIndex(int dim, int n);
  int size() const { return static_cast<int>(list_.size()); }
  int id(const Index& sorted) const;
  const Index& subset(int id) const { return list_.at(id); }

 private:
  std::vector<Index> list_;
  std::map<Index, int> ids_;
};

// How a slot monomial c·x^M becomes ⊗-words.
//  Polarization: the symmetric tensor whose polynomial is c·x^M, i.e. weight
//    c/N(M) on each of the N(M) distinct orderings.  GL-equivariant.
//  DistinctWords: weight c on each distinct ordering (x∘y = x⊗y + y⊗x but
//    x∘x = x⊗x).  Not equivariant; kept for hand computations that count words.
enum class WordWeight { Polarization, DistinctWords };

// Column-regrouping map on ordered slots: each slot is a degree-m symmetric
// tensor over V expanded into words; the j-th letters of the n words are wedged
// into Λ^n V.  Returned as the polynomial S(z,...,z) of the regrouped symmetric
// tensor, over Λ^n V indexed by SubsetIndex.
SymTensor shuffle_mu_slots(const std::vector<SymTensor>& slots, int dimV,
                           WordWeight weight = WordWeight::Polarization);

// μ : Λ^n(S^m V) → S^m(Λ^n V).  The alternating tensor t has degree n over the
// monomial basis MonomialIndex(dimV, m); each stored (sorted) key is fed to the
// column-regrouping map slot by slot.  For even m the regrouping is symmetric in
// the slots, so the result depends on these sorted representatives.
SymTensor shuffle_mu(const AltTensor& t, int n, int m, int dimV,
                     WordWeight weight = WordWeight::Polarization);

}  // namespace gaprig
