#include "gaprig/embed/embedding.hpp"

#include <map>
#include <mutex>

#include "gaprig/error.hpp"
#include "gaprig/lie/curvature.hpp"
#include "gaprig/moment/sigma.hpp"

namespace gaprig {

EmbeddingSpec::EmbeddingSpec(std::string name, ModelPtr source, ModelPtr target, std::vector<Matrix> images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const LieModel& s = *source_;
  const LieModel& t = *target_;
  if (static_cast<int>(images_.size()) != s.dim()) throw DomainError(name_ + ": one image per source basis element");
  for (const auto& im : images_) {
    if (im.rows() != t.n() || im.cols() != t.n()) throw DomainError(name_ + ": image has the wrong size");
    if (!t.try_coords(im)) throw DomainError(name_ + ": image outside the target algebra");
  }
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (apply_coords(s.ad(i, j)) != bracket(images_[i], images_[j]))
        throw DomainError(name_ + ": not a homomorphism on (" + std::to_string(i) + "," + std::to_string(j) + ")");
  std::vector<Vec> cols;
  for (const auto& im : images_) cols.push_back(im.flatten());
  if (rank_of(cols) != s.dim()) throw DomainError(name_ + ": not injective");
}

EmbeddingSpec EmbeddingSpec::from_map(std::string name, ModelPtr source, ModelPtr target,
                                      const std::function<Matrix(const Matrix&)>& f) {
  std::vector<Matrix> images;
  for (int i = 0; i < source->dim(); ++i) images.push_back(f(source->basis(i)));
  return EmbeddingSpec(std::move(name), std::move(source), std::move(target), std::move(images));
}

EmbeddingSpec EmbeddingSpec::from_index_map(std::string name, ModelPtr source, ModelPtr target,
                                            const std::vector<int>& sigma) {
  const int n = target->n();
  if (static_cast<int>(sigma.size()) != source->n()) throw DomainError(name + ": index map length");
  return from_map(std::move(name), std::move(source), std::move(target), [&](const Matrix& x) {
    Matrix y(n, n);
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_zero()) y(sigma[i], sigma[j]) = x(i, j);
    return y;
  });
}

Matrix EmbeddingSpec::apply_coords(const SparseVec& c) const {
  Matrix y(target_->n(), target_->n());
  for (const auto& [i, v] : c) y += images_[i] * v;
  return y;
}

Matrix EmbeddingSpec::apply(const Matrix& x) const { return apply_coords(source_->coords(x)); }

Plane EmbeddingSpec::tangent_plane() const {
  std::vector<Vec> vs;
  for (int a = 0; a < source_->p_count(); ++a) {
    const Matrix& im = images_[source_->pplus_index(a)];
    if (!target_->in_pplus(im)) throw DomainError(name_ + ": image of p'+ leaves p+");
    vs.push_back(target_->pplus_coords(im));
  }
  return Plane(target_, std::move(vs));
}

EmbeddingSpec EmbeddingSpec::flipped() const {
  // -Xᵀ reverses I/II/III; type IV blocks use conjugation by a reflection of the last coordinate.
  const LieModel& s = *source_;
  Vec refl(s.n(), Scalar(1));
  bool any_iv = false;
  for (const auto& blk : s.blocks())
    if (blk.factor.type == DomainType::IV) {
      refl[blk.offset + blk.factor.ambient() - 1] = -1;
      any_iv = true;
    }
  Matrix r = Matrix::diag(refl);
  std::vector<Matrix> images;
  for (int i = 0; i < s.dim(); ++i) {
    if (any_iv && !s.spec().irreducible()) throw UnsupportedError("flip of a product with a type IV factor");
    images.push_back(apply(any_iv ? r * s.basis(i) * r : -s.basis(i).transpose()));
  }
  return EmbeddingSpec(name_ + "_flipped", source_, target_, std::move(images));
}

bool check_h1(const EmbeddingSpec& e) {
  const LieModel& s = e.source();
  const Matrix& h = e.target().H0();
  for (int i = 0; i < s.dim(); ++i)
    if (bracket(h, e.images()[i]) != e.apply(bracket(s.H0(), s.basis(i)))) return false;
  return true;
}

bool check_h2(const EmbeddingSpec& e) { return check_h1(e) && e.apply(e.source().H0()) == e.target().H0(); }

Scalar compute_d(const EmbeddingSpec& e, int factor) {
  const LieModel& s = e.source();
  const LieModel& t = e.target();
  const BlockInfo& blk = s.blocks().at(factor);
  std::optional<Scalar> d;
  for (int a = 0; a < blk.pplus_count; ++a)
    for (int b = 0; b < blk.pplus_count; ++b) {
      int ia = s.pplus_index(blk.pplus_begin + a);
      int ib = s.pminus_index(blk.pplus_begin + b);
      Scalar src = s.killing(s.basis(ia), s.basis(ib));
      Scalar tgt = t.killing(e.images()[ia], e.images()[ib]);
      if (src.is_zero()) {
        if (!tgt.is_zero()) throw DomainError(e.name() + ": metric ratio not constant");
        continue;
      }
      Scalar r = tgt / src;
      if (d && *d != r) throw DomainError(e.name() + ": metric ratio not constant");
      d = r;
    }
  if (!d) throw DomainError(e.name() + ": factor has no tangent directions");
  return *d;
}

namespace {

bool real_multiple_of(const LieModel& m, const Matrix& w, const Matrix& h) {
  Scalar lam = m.killing(w, h) / m.killing(h, h);
  return lam.is_real() && w == h * lam;
}

Scalar factor_einstein(const Factor& f) {
  static std::mutex mu;
  static std::map<std::string, Scalar> cache;
  std::string key = f.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Scalar v = einstein_report(*get_model(DomainSpec::single(f))).einstein_killing;
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = v;
  return v;
}

}  // namespace

ClassificationReport check_h3(const EmbeddingSpec& e) {
  ClassificationReport r;
  r.h1 = check_h1(e);
  if (!r.h1) return r;
  r.h2 = check_h2(e);
  const LieModel& s = e.source();
  const LieModel& t = e.target();
  r.c = c_omega_factors(s);
  Matrix weighted(t.n(), t.n()), alt(t.n(), t.n());
  for (size_t i = 0; i < s.blocks().size(); ++i) {
    Scalar d = compute_d(e, static_cast<int>(i));
    r.d.push_back(d);
    Matrix img = e.apply(s.factor_H0()[i]);
    weighted += img * (r.c[i] * d);
    alt += img * (r.c[i] / d);
    r.einstein_restricted.push_back(factor_einstein(s.blocks()[i].factor) / d);
  }
  r.h3 = r.h2 && real_multiple_of(t, weighted, t.H0());
  r.h3_alternative = r.h2 && real_multiple_of(t, alt, t.H0());
  r.normalization_disagreement = r.h3 != r.h3_alternative;
  bool equal = true;
  for (const auto& x : r.einstein_restricted) equal = equal && x == r.einstein_restricted.front();
  r.h3_einstein = r.h2 && equal;
  if (r.h2 && r.h3 != r.h3_einstein) throw InvariantError(e.name() + ": (H3) disagrees with the Einstein-constant test");
  if ((r.h3 && !r.h2) || (r.h2 && !r.h1)) throw InvariantError(e.name() + ": h3 => h2 => h1 violated");
  return r;
}

Scalar curvature_constant(const LieModel& m) {
  static std::mutex mu;
  static std::map<std::string, Scalar> cache;
  const std::string key = m.spec().str();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Scalar curvature of p+ is Σ_i ρ_i·dim_i; match -C·‖Σ(p+)‖².
  Scalar scal;
  for (const auto& blk : m.blocks()) scal += factor_einstein(blk.factor) * Scalar(blk.factor.dim());
  Scalar c = -scal / sigma_norm2(Plane::full(get_model(m.spec())));
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = c;
  return c;
}

Scalar geodesic_scalar_curvature(const Plane& plane) {
  if (!is_critical(plane)) throw DomainError("geodesic_scalar_curvature: plane is not critical");
  return -curvature_constant(plane.model()) * sigma_norm2(plane);
}

EmbeddingSpec disk_embedding(std::string name, ModelPtr target, const Matrix& alpha) {
  const LieModel& t = *target;
  if (!t.in_pplus(alpha) || alpha.is_zero()) throw DomainError(name + ": α must be a nonzero p+ element");
  Matrix beta = t.tau(alpha);
  Matrix h = bracket(alpha, beta);
  Matrix hx = bracket(h, alpha);
  Scalar lam = t.killing(hx, beta) / t.killing(alpha, beta);
  if (hx != alpha * lam || !lam.is_real() || sgn(lam.re()) <= 0)
    throw DomainError(name + ": α does not span an sl2 with its τ-partner");
  Scalar s = Scalar(2) / lam;
  // I(1,1): E = e12, F = τE = e21, [E,F] = diag(1,-1)
  ModelPtr disk = get_model("I(1,1)");
  const Matrix e = disk->pplus_vector(Vec{Scalar(1)});
  const Matrix f = disk->tau(e);
  return EmbeddingSpec::from_map(std::move(name), disk, target, [&](const Matrix& x) {
    // x = a E + b F + c [E,F]
    Scalar a = x(0, 1) / e(0, 1), b = x(1, 0) / f(1, 0), c = x(0, 0);
    return alpha * a + beta * (b * s) + h * (c * s);
  });
}

}  // namespace gaprig
