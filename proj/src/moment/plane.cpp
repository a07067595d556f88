#include "gaprig/moment/plane.hpp"

#include <regex>
#include <sstream>

#include "gaprig/error.hpp"

namespace gaprig {

int pplus_rank(const std::vector<Vec>& vectors) { return rank_of(vectors); }

Plane::Plane(ModelPtr model, std::vector<Vec> vectors) : model_(std::move(model)), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_)
    if (static_cast<int>(v.size()) != model_->p_count()) throw DomainError("plane vector length");
  if (pplus_rank(vectors_) != dim()) throw DomainError("plane spanning vectors are dependent");
}

Plane Plane::from_matrices(ModelPtr model, const std::vector<Matrix>& vectors) {
  std::vector<Vec> c;
  for (const auto& v : vectors) c.push_back(model->pplus_coords(v));
  return Plane(std::move(model), std::move(c));
}

Plane Plane::full(ModelPtr model) {
  std::vector<Vec> c;
  for (int a = 0; a < model->p_count(); ++a) {
    Vec v(model->p_count());
    v[a] = 1;
    c.push_back(std::move(v));
  }
  return Plane(std::move(model), std::move(c));
}

Plane Plane::parse(ModelPtr model, const std::string& literal) {
  const auto& labels = model->pplus_labels();
  std::vector<Vec> out;
  std::stringstream ss(literal);
  std::string item;
  static const std::regex term(R"(\s*([+-]?)\s*(?:([^*+\-]+|\([^)]*\)i)\s*\*)?\s*([A-Za-z0-9:]+)\s*)");
  while (std::getline(ss, item, ',')) {
    Vec v(model->p_count());
    auto begin = std::sregex_iterator(item.begin(), item.end(), term);
    size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      if (static_cast<size_t>(m.position()) != consumed) throw ParseError("bad plane literal: " + item);
      consumed += m.length();
      Scalar coef = 1;
      if (m[2].matched) {
        std::string c = m[2];
        coef = (c == "i") ? Scalar::i() : Scalar::parse(c);
      }
      if (m[1] == "-") coef = -coef;
      std::string lab = m[3];
      size_t idx = 0;
      while (idx < labels.size() && labels[idx] != lab) ++idx;
      if (idx == labels.size()) throw ParseError("unknown p+ label: " + lab);
      v[idx] += coef;
    }
    if (consumed != item.size() || consumed == 0) throw ParseError("bad plane literal: " + item);
    out.push_back(std::move(v));
  }
  try {
    return Plane(std::move(model), std::move(out));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Matrix Plane::gram() const {
  Matrix g(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (int k = 0; k < dim(); ++k) g(j, k) = model_->herm_coords(vectors_[j], vectors_[k]);
  return g;
}

Plane Plane::recombined(const Matrix& a) const {
  if (a.rows() != dim() || a.cols() != dim()) throw DomainError("recombination matrix shape");
  std::vector<Vec> out(dim(), Vec(model_->p_count()));
  for (int k = 0; k < dim(); ++k)
    for (int j = 0; j < dim(); ++j) {
      if (a(j, k).is_zero()) continue;
      for (int b = 0; b < model_->p_count(); ++b)
        if (!vectors_[j][b].is_zero()) out[k][b].add_mul(vectors_[j][b], a(j, k));
    }
  return Plane(model_, std::move(out));
}

Plane Plane::transformed(const Matrix& k, const Matrix& k_inv) const {
  std::vector<Vec> out;
  for (int j = 0; j < dim(); ++j) out.push_back(model_->pplus_coords(k * vector_matrix(j) * k_inv));
  return Plane(model_, std::move(out));
}

std::string Plane::str() const {
  const auto& labels = model_->pplus_labels();
  std::string s;
  for (int j = 0; j < dim(); ++j) {
    if (j) s += ", ";
    bool first = true;
    for (int b = 0; b < model_->p_count(); ++b) {
      const Scalar& c = vectors_[j][b];
      if (c.is_zero()) continue;
      if (!first) s += " + ";
      first = false;
      if (c != Scalar(1)) s += "(" + c.str() + ")*";
      s += labels[b];
    }
    if (first) s += "0";
  }
  return s;
}

Plane random_plane(const ModelPtr& model, int p, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  while (true) {
    std::vector<Vec> vs(p, Vec(model->p_count()));
    for (auto& v : vs)
      for (auto& x : v) x = Scalar(mpq_class(dist(rng)), mpq_class(dist(rng)));
    if (pplus_rank(vs) == p) return Plane(model, std::move(vs));
  }
}

Plane perturbed(const Plane& plane, std::mt19937_64& rng, const Scalar& scale) {
  std::uniform_int_distribution<int> dist(-2, 2);
  while (true) {
    std::vector<Vec> vs = plane.vectors();
    for (auto& v : vs)
      for (auto& x : v) x += scale * Scalar(mpq_class(dist(rng)), mpq_class(dist(rng)));
    if (pplus_rank(vs) == plane.dim()) return Plane(plane.model_ptr(), std::move(vs));
  }
}

}  // namespace gaprig
