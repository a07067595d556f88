#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaprig/exact/linalg.hpp"
#include "gaprig/exact/matrix.hpp"
#include "gaprig/lie/domain_spec.hpp"

namespace gaprig {

// One irreducible block of a (possibly product) realization.
struct BlockInfo {
  Factor factor;
  int offset = 0;       // first row/column in the ambient matrix
  int pplus_begin = 0;  // first p+ coordinate of this factor
  int pplus_count = 0;
};

// Complexified Lie algebra of Hermitian type in a matrix realization.
// Basis order: [k | p+ | p-], with p- = tau(p+).
class LieModel {
 public:
  static std::shared_ptr<const LieModel> build(const DomainSpec& spec);

  const DomainSpec& spec() const { return spec_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int k_count() const { return k_count_; }
  int p_count() const { return p_count_; }
  int pplus_index(int a) const { return k_count_ + a; }
  int pminus_index(int a) const { return k_count_ + p_count_ + a; }

  const Matrix& basis(int i) const { return basis_.at(i); }
  const std::vector<std::string>& pplus_labels() const { return labels_; }
  const std::vector<BlockInfo>& blocks() const { return blocks_; }
  const Matrix& H0() const { return H0_; }
  // H0 of each irreducible factor, embedded in the ambient block.
  const std::vector<Matrix>& factor_H0() const { return factor_H0_; }

  // Real-form conjugation (conjugate-linear involution).
  Matrix tau(const Matrix& x) const;

  std::optional<SparseVec> try_coords(const Matrix& x) const;
  SparseVec coords(const Matrix& x) const;  // throws DomainError outside the span
  Matrix element(const SparseVec& c) const;
  Matrix pplus_vector(const Vec& c) const;
  Vec pplus_coords(const Matrix& x) const;  // throws DomainError outside p+
  bool in_pplus(const Matrix& x) const;
  bool in_k(const Matrix& x) const;

  // Coordinates of [b_i, b_j].
  const SparseVec& ad(int i, int j) const { return ad_[i][j]; }
  const Matrix& killing_gram() const { return gram_; }
  Scalar killing(const Matrix& x, const Matrix& y) const;
  Scalar killing_coords(const SparseVec& x, const SparseVec& y) const;

  // Hermitian pairing on p+ with the positivity normalization.
  Scalar herm(const Matrix& a, const Matrix& b) const;
  Scalar herm_coords(const Vec& a, const Vec& b) const;
  const Matrix& pplus_gram() const { return pplus_gram_; }
  const Scalar& pairing_sign() const { return pairing_sign_; }
  // Coordinates of [p_a, tau(p_b)] (an element of k).
  const SparseVec& bracket_tau(int a, int b) const { return bracket_tau_[a][b]; }

 private:
  LieModel() = default;

  DomainSpec spec_;
  int n_ = 0;
  int k_count_ = 0;
  int p_count_ = 0;
  std::vector<Matrix> basis_;
  std::vector<SparseVec> flat_;
  std::vector<std::string> labels_;
  std::vector<BlockInfo> blocks_;
  SpanCoords span_;
  std::vector<std::vector<SparseVec>> ad_;
  Matrix gram_;
  Matrix H0_;
  std::vector<Matrix> factor_H0_;
  Scalar pairing_sign_ = 1;
  Matrix pplus_gram_;
  std::vector<std::vector<SparseVec>> bracket_tau_;
};

using ModelPtr = std::shared_ptr<const LieModel>;

// Memoized build; models are immutable so sharing is safe.
ModelPtr get_model(const DomainSpec& spec);
ModelPtr get_model(const std::string& spec);

// Independent oracle: trace(ad X ad Y) from a dense ad matrix built directly.
Scalar killing_trace_oracle(const LieModel& m, const Matrix& x, const Matrix& y);

}  // namespace gaprig
