#include "gaprig/lie/lie_model.hpp"

#include <map>
#include <mutex>

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

struct FactorBasis {
  std::vector<Matrix> k;
  std::vector<Matrix> pplus;
  std::vector<std::string> labels;
};

std::string label(int i, int j) { return "e" + std::to_string(i + 1) + std::to_string(j + 1); }

FactorBasis factor_basis(const Factor& f) {
  FactorBasis fb;
  const int n = f.ambient();
  auto E = [n](int i, int j) { return Matrix::unit(n, i, j); };
  switch (f.type) {
    case DomainType::I: {
      const int p = f.p, q = f.q;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && (i < p) == (j < p)) fb.k.push_back(E(i, j));
      for (int i = 0; i + 1 < n; ++i) fb.k.push_back(E(i, i) - E(i + 1, i + 1));
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          fb.pplus.push_back(E(i, p + j));
          fb.labels.push_back(label(i, j));
        }
      break;
    }
    case DomainType::II:
    case DomainType::III: {
      const int m = f.p;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) fb.k.push_back(E(i, j) - E(m + j, m + i));
      const bool skew = f.type == DomainType::II;
      for (int i = 0; i < m; ++i)
        for (int j = skew ? i + 1 : i; j < m; ++j) {
          Matrix b = E(i, m + j);
          if (i != j) b = skew ? b - E(j, m + i) : b + E(j, m + i);
          fb.pplus.push_back(b);
          fb.labels.push_back(label(i, j));
        }
      break;
    }
    case DomainType::IV: {
      const int m = f.p;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) fb.k.push_back(E(i, j) - E(j, i));
      fb.k.push_back(E(m, m + 1) - E(m + 1, m));
      for (int k = 0; k < m; ++k) {
        Matrix b = E(k, m) + E(m, k) + (E(k, m + 1) + E(m + 1, k)) * Scalar::i();
        fb.pplus.push_back(b);
        fb.labels.push_back("e" + std::to_string(k + 1));
      }
      break;
    }
  }
  return fb;
}

Matrix embed(const Matrix& x, int n, int offset) {
  Matrix out(n, n);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(offset + i, offset + j) = x(i, j);
  return out;
}

SparseVec sparse_bracket(const SparseVec& a, const SparseVec& b, int n) {
  std::map<int, Scalar> acc;
  for (const auto& [pa, va] : a)
    for (const auto& [pb, vb] : b) {
      if (pa % n == pb / n) acc[(pa / n) * n + pb % n].add_mul(va, vb);
      if (pb % n == pa / n) acc[(pb / n) * n + pa % n].add_mul(-va, vb);
    }
  SparseVec out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.emplace_back(k, std::move(v));
  return out;
}

SparseVec to_sparse(const Matrix& m) { return m.sparse_flat(); }

}  // namespace

Matrix LieModel::tau(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw DomainError("tau: wrong matrix size");
  Matrix out(n_, n_);
  for (const auto& blk : blocks_) {
    const int o = blk.offset, s = blk.factor.ambient();
    if (blk.factor.type == DomainType::IV) {
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) out(o + i, o + j) = x(o + i, o + j).conj();
      continue;
    }
    const int split = blk.factor.p;  // J = diag(I_split, -I)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        Scalar v = x(o + j, o + i).conj();
        bool flip = (i < split) == (j < split);  // -J X* J sign
        out(o + i, o + j) = flip ? -v : v;
      }
  }
  return out;
}

std::optional<SparseVec> LieModel::try_coords(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
  return span_.coords(to_sparse(x));
}

SparseVec LieModel::coords(const Matrix& x) const {
  auto c = try_coords(x);
  if (!c) throw DomainError("matrix outside the model algebra");
  return *c;
}

Matrix LieModel::element(const SparseVec& c) const {
  Matrix out(n_, n_);
  for (const auto& [a, v] : c)
    for (const auto& [pos, w] : flat_[a]) out(pos / n_, pos % n_).add_mul(v, w);
  return out;
}

Matrix LieModel::pplus_vector(const Vec& c) const {
  if (static_cast<int>(c.size()) != p_count_) throw DomainError("p+ coordinate length");
  SparseVec s;
  for (int a = 0; a < p_count_; ++a)
    if (!c[a].is_zero()) s.emplace_back(pplus_index(a), c[a]);
  return element(s);
}

Vec LieModel::pplus_coords(const Matrix& x) const {
  SparseVec c = coords(x);
  Vec out(p_count_);
  for (const auto& [a, v] : c) {
    if (a < k_count_ || a >= k_count_ + p_count_) throw DomainError("vector not in p+");
    out[a - k_count_] = v;
  }
  return out;
}

bool LieModel::in_pplus(const Matrix& x) const {
  auto c = try_coords(x);
  if (!c) return false;
  for (const auto& [a, v] : *c)
    if (a < k_count_ || a >= k_count_ + p_count_) return false;
  return true;
}

bool LieModel::in_k(const Matrix& x) const {
  auto c = try_coords(x);
  if (!c) return false;
  for (const auto& [a, v] : *c)
    if (a >= k_count_) return false;
  return true;
}

Scalar LieModel::killing_coords(const SparseVec& x, const SparseVec& y) const {
  Scalar s;
  for (const auto& [a, va] : x)
    for (const auto& [b, vb] : y) {
      const Scalar& g = gram_(a, b);
      if (g.is_zero()) continue;
      s.add_mul(va * vb, g);
    }
  return s;
}

Scalar LieModel::killing(const Matrix& x, const Matrix& y) const {
  return killing_coords(coords(x), coords(y));
}

Scalar LieModel::herm(const Matrix& a, const Matrix& b) const {
  return herm_coords(pplus_coords(a), pplus_coords(b));
}

Scalar LieModel::herm_coords(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != p_count_ || static_cast<int>(b.size()) != p_count_)
    throw DomainError("herm: p+ coordinate length");
  Scalar s;
  for (int i = 0; i < p_count_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < p_count_; ++j) {
      if (b[j].is_zero() || pplus_gram_(i, j).is_zero()) continue;
      s.add_mul(a[i] * b[j].conj(), pplus_gram_(i, j));
    }
  }
  return s;
}

std::shared_ptr<const LieModel> LieModel::build(const DomainSpec& spec) {
  for (const auto& f : spec.factors) validate(f);
  std::shared_ptr<LieModel> m(new LieModel());
  m->spec_ = spec;
  m->n_ = spec.ambient();
  const int n = m->n_;

  std::vector<Matrix> k, pplus;
  int offset = 0;
  for (const auto& f : spec.factors) {
    FactorBasis fb = factor_basis(f);
    BlockInfo blk{f, offset, static_cast<int>(pplus.size()), static_cast<int>(fb.pplus.size())};
    m->blocks_.push_back(blk);
    for (auto& x : fb.k) k.push_back(embed(x, n, offset));
    for (auto& x : fb.pplus) pplus.push_back(embed(x, n, offset));
    for (auto& l : fb.labels) m->labels_.push_back(spec.irreducible() ? l : "f" + std::to_string(m->blocks_.size()) + ":" + l);
    offset += f.ambient();
  }
  m->k_count_ = static_cast<int>(k.size());
  m->p_count_ = static_cast<int>(pplus.size());
  m->basis_ = k;
  for (auto& x : pplus) m->basis_.push_back(x);
  for (auto& x : pplus) m->basis_.push_back(m->tau(x));
  for (const auto& b : m->basis_) m->flat_.push_back(to_sparse(b));
  m->span_ = SpanCoords(m->flat_, n * n);

  const int d = m->dim();
  m->ad_.assign(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto c = m->span_.coords(sparse_bracket(m->flat_[i], m->flat_[j], n));
      if (!c) throw InvariantError("basis is not closed under brackets: " + spec.str());
      m->ad_[i][j] = *c;
      SparseVec neg;
      sparse_axpy(neg, Scalar(-1), *c);
      m->ad_[j][i] = std::move(neg);
    }

  // Killing Gram: B(b_a, b_b) = sum_j sum_l ad_a[j][l] ad_b[l][j].
  m->gram_ = Matrix(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      Scalar s;
      for (int j = 0; j < d; ++j)
        for (const auto& [l, v] : m->ad_[b][j]) {
          Scalar w = sparse_get(m->ad_[a][l], j);
          if (!w.is_zero()) s.add_mul(w, v);
        }
      m->gram_(a, b) = s;
      m->gram_(b, a) = s;
    }

  // H0 per factor: unknown x in k with [x, k] = 0 and [x, p+_j] = i p+_j.
  const int kc = m->k_count_, pc = m->p_count_;
  Matrix H0(n, n);
  for (const auto& blk : m->blocks_) {
    std::vector<int> kidx;
    for (int a = 0; a < kc; ++a) {
      bool inside = true;
      for (const auto& [pos, v] : m->flat_[a]) {
        int r = pos / n, c = pos % n;
        if (r < blk.offset || r >= blk.offset + blk.factor.ambient() || c < blk.offset ||
            c >= blk.offset + blk.factor.ambient())
          inside = false;
      }
      if (inside) kidx.push_back(a);
    }
    std::map<std::pair<int, int>, int> row_of;
    std::vector<std::vector<std::pair<int, Scalar>>> rows;
    Vec rhs;
    auto row = [&](int j, int l) {
      auto key = std::make_pair(j, l);
      auto it = row_of.find(key);
      if (it != row_of.end()) return it->second;
      row_of[key] = static_cast<int>(rows.size());
      rows.emplace_back();
      rhs.emplace_back(0);
      return static_cast<int>(rows.size()) - 1;
    };
    std::vector<int> targets = kidx;
    for (int a = 0; a < blk.pplus_count; ++a) targets.push_back(kc + blk.pplus_begin + a);
    for (size_t u = 0; u < kidx.size(); ++u)
      for (int j : targets)
        for (const auto& [l, v] : m->ad_[kidx[u]][j]) rows[row(j, l)].emplace_back(static_cast<int>(u), v);
    for (int a = 0; a < blk.pplus_count; ++a) {
      int j = kc + blk.pplus_begin + a;
      rhs[row(j, j)] += Scalar::i();
    }
    Matrix A(static_cast<int>(rows.size()), static_cast<int>(kidx.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (const auto& [u, v] : rows[r]) A(r, u) += v;
    auto sol = solve(A, rhs);
    if (!sol) throw InvariantError("no central element with eigenvalue i on p+: " + blk.factor.str());
    if (rank(A) != static_cast<int>(kidx.size())) throw InvariantError("H0 not unique: " + blk.factor.str());
    SparseVec hc;
    for (size_t u = 0; u < kidx.size(); ++u)
      if (!(*sol)[u].is_zero()) hc.emplace_back(kidx[u], (*sol)[u]);
    Matrix h = m->element(hc);
    m->factor_H0_.push_back(h);
    H0 += h;
  }
  m->H0_ = H0;

  // Hermitian pairing on p+ and its sign normalization.
  m->pplus_gram_ = Matrix(pc, pc);
  for (int a = 0; a < pc; ++a)
    for (int b = 0; b < pc; ++b)
      m->pplus_gram_(a, b) = m->gram_(m->pplus_index(a), m->pminus_index(b));
  // tau(p+_b) is the p- basis element by construction, so the raw pairing is a Gram block.
  const Scalar& first = m->pplus_gram_(0, 0);
  if (!first.is_real() || first.is_zero()) throw InvariantError("degenerate Hermitian pairing");
  m->pairing_sign_ = sgn(first.re()) > 0 ? Scalar(1) : Scalar(-1);
  if (m->pairing_sign_ != Scalar(1)) m->pplus_gram_ *= m->pairing_sign_;

  m->bracket_tau_.assign(pc, std::vector<SparseVec>(pc));
  for (int a = 0; a < pc; ++a)
    for (int b = 0; b < pc; ++b) m->bracket_tau_[a][b] = m->ad_[m->pplus_index(a)][m->pminus_index(b)];
  return m;
}

ModelPtr get_model(const DomainSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, ModelPtr> cache;
  const std::string key = spec.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ModelPtr m = LieModel::build(spec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, m).first->second;
}

ModelPtr get_model(const std::string& spec) { return get_model(DomainSpec::parse(spec)); }

Scalar killing_trace_oracle(const LieModel& m, const Matrix& x, const Matrix& y) {
  // Dense ad matrices from direct matrix brackets and coordinate solves.
  const int d = m.dim();
  auto ad_dense = [&](const Matrix& z) {
    Matrix A(d, d);
    for (int j = 0; j < d; ++j) {
      SparseVec c = m.coords(bracket(z, m.basis(j)));
      for (const auto& [l, v] : c) A(l, j) = v;
    }
    return A;
  };
  return (ad_dense(x) * ad_dense(y)).trace();
}

}  // namespace gaprig
