#include "gaprig/embed/catalog.hpp"

#include <regex>

#include "gaprig/error.hpp"

namespace gaprig {

namespace {

ModelPtr model_of(const std::vector<Factor>& fs) { return get_model(DomainSpec{fs}); }

// Ambient index map placing each source factor into consecutive slots of the
// two halves of a type I/II/III target.  first[k] / second[k] give the
// target start of factor k's two halves.
std::vector<int> split_index_map(const std::vector<Factor>& src, int target_first, const std::vector<int>& first,
                                 const std::vector<int>& second) {
  std::vector<int> sigma;
  for (size_t k = 0; k < src.size(); ++k) {
    const Factor& f = src[k];
    int a = f.type == DomainType::I ? f.p : f.p;
    int b = f.type == DomainType::I ? f.q : f.p;
    for (int i = 0; i < a; ++i) sigma.push_back(first[k] + i);
    for (int j = 0; j < b; ++j) sigma.push_back(target_first + second[k] + j);
  }
  return sigma;
}

EmbeddingSpec same_type_product(const std::string& name, const Factor& f1, const Factor& f2, const Factor& t) {
  const int half1 = t.p;  // size of the first half of the target ambient
  const int b1 = f1.type == DomainType::I ? f1.q : f1.p;
  const int a1 = f1.p;
  return EmbeddingSpec::from_index_map(name, model_of({f1, f2}), model_of({t}),
                                       split_index_map({f1, f2}, half1, {0, a1}, {0, b1}));
}

EmbeddingSpec polydisk(const std::string& name, const Factor& t) {
  ModelPtr target = model_of({t});
  switch (t.type) {
    case DomainType::I: {
      int r = std::min(t.p, t.q);
      std::vector<Factor> src(r, Factor{DomainType::I, 1, 1});
      std::vector<int> first, second;
      for (int k = 0; k < r; ++k) first.push_back(k), second.push_back(k);
      return EmbeddingSpec::from_index_map(name, model_of(src), target, split_index_map(src, t.p, first, second));
    }
    case DomainType::II: {
      int r = t.p / 2;
      std::vector<Factor> src(r, Factor{DomainType::II, 2, 0});
      std::vector<int> first, second;
      for (int k = 0; k < r; ++k) first.push_back(2 * k), second.push_back(2 * k);
      return EmbeddingSpec::from_index_map(name, model_of(src), target, split_index_map(src, t.p, first, second));
    }
    case DomainType::III: {
      std::vector<Factor> src(t.p, Factor{DomainType::III, 1, 0});
      std::vector<int> first, second;
      for (int k = 0; k < t.p; ++k) first.push_back(k), second.push_back(k);
      return EmbeddingSpec::from_index_map(name, model_of(src), target, split_index_map(src, t.p, first, second));
    }
    case DomainType::IV: {
      // IV(2) is the bidisk
      std::vector<int> sigma{0, 1, t.p, t.p + 1};
      return EmbeddingSpec::from_index_map(name, model_of({Factor{DomainType::IV, 2, 0}}), target, sigma);
    }
  }
  throw UnsupportedError(name);
}

// Sum of strongly orthogonal p+ vectors of the maximal polydisk.
Matrix polydisk_diagonal(const LieModel& m) {
  const Factor& t = m.spec().factors.front();
  EmbeddingSpec pd = polydisk("tmp", t);
  Matrix a(m.n(), m.n());
  if (t.type == DomainType::IV) {
    // the two null directions e1 ± i e2 sum to 2 e1
    Vec v(m.p_count());
    v[0] = 1;
    return m.pplus_vector(v);
  }
  const LieModel& s = pd.source();
  for (int k = 0; k < s.p_count(); ++k) a += pd.images()[s.pplus_index(k)];
  return a;
}

EmbeddingSpec identity(const std::string& name, const DomainSpec& spec) {
  ModelPtr m = get_model(spec);
  return EmbeddingSpec::from_map(name, m, m, [](const Matrix& x) { return x; });
}

}  // namespace

Factor parse_compact(const std::string& s) {
  static const std::regex re(R"((IV|III|II|I)(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw DomainError("bad compact domain name: " + s);
  std::string t = m[1], digits = m[2];
  Factor f;
  if (t == "I") {
    if (digits.size() != 2) throw DomainError("type I needs two digits: " + s);
    f = Factor{DomainType::I, digits[0] - '0', digits[1] - '0'};
  } else {
    f = Factor{t == "II" ? DomainType::II : t == "III" ? DomainType::III : DomainType::IV, std::stoi(digits), 0};
  }
  validate(f);
  return f;
}

DomainSpec parse_compact_spec(const std::string& s) {
  auto caret = s.find('^');
  Factor f = parse_compact(s.substr(0, caret));
  int k = caret == std::string::npos ? 1 : std::stoi(s.substr(caret + 1));
  if (k < 1) throw DomainError("bad power: " + s);
  return DomainSpec{std::vector<Factor>(k, f)};
}

EmbeddingSpec catalog(const std::string& name) {
  std::smatch m;
  if (name.rfind("spin_", 0) == 0) throw UnsupportedError(name + ": spin-representation embeddings are not built");
  if (name == "factor_disk_in_bidisk") {
    Factor d{DomainType::I, 1, 1};
    return EmbeddingSpec::from_index_map(name, model_of({d}), model_of({d, d}), {0, 1});
  }
  if (name == "diag_disk_in_bidisk") {
    ModelPtr t = model_of({Factor{DomainType::I, 1, 1}, Factor{DomainType::I, 1, 1}});
    return disk_embedding(name, t, t->pplus_vector(Vec{Scalar(1), Scalar(1)}));
  }
  static const std::regex ident(R"(identity_(\w+))");
  if (std::regex_match(name, m, ident)) return identity(name, DomainSpec{{parse_compact(m[1])}});
  static const std::regex sub_I(R"((II|III)(\d)_in_I(\d)(\d))");
  if (std::regex_match(name, m, sub_I)) {
    int r = std::stoi(m[2]);
    if (std::stoi(m[3]) != r || std::stoi(m[4]) != r) throw DomainError(name + ": needs I(r,r)");
    Factor s{m[1] == "II" ? DomainType::II : DomainType::III, r, 0};
    validate(s);
    // the realizations of II(r), III(r) are subalgebras of the one of I(r,r)
    return EmbeddingSpec::from_map(name, model_of({s}), model_of({Factor{DomainType::I, r, r}}),
                                   [](const Matrix& x) { return x; });
  }
  static const std::regex poly(R"((?:diag_)?polydisk_(\w+))");
  if (std::regex_match(name, m, poly)) return polydisk(name, parse_compact(m[1]));
  static const std::regex ddisk(R"(diag_disk_in_(\w+))");
  if (std::regex_match(name, m, ddisk)) {
    ModelPtr t = model_of({parse_compact(m[1])});
    return disk_embedding(name, t, polydisk_diagonal(*t));
  }
  static const std::regex prod(R"((I+|IV)(\d+)_x_(I+|IV)(\d+)_in_(I+|IV)(\d+))");
  if (std::regex_match(name, m, prod)) {
    if (m[1] != m[3] || m[1] != m[5] || m[1] == "IV") throw DomainError(name + ": product rows are types I, II, III");
    Factor f1 = parse_compact(m[1].str() + m[2].str());
    Factor f2 = parse_compact(m[3].str() + m[4].str());
    Factor t = parse_compact(m[5].str() + m[6].str());
    bool fits = f1.type == DomainType::I ? (f1.p + f2.p == t.p && f1.q + f2.q == t.q) : (f1.p + f2.p == t.p);
    if (!fits) throw DomainError(name + ": factor sizes do not add up");
    return same_type_product(name, f1, f2, t);
  }
  static const std::regex iv(R"(IV(\d+)_in_IV(\d+))");
  if (std::regex_match(name, m, iv)) {
    int p = std::stoi(m[1]), n = std::stoi(m[2]);
    if (p < 2 || p >= n) throw DomainError(name + ": need 2 <= p < n");
    std::vector<int> sigma;
    for (int i = 0; i < p; ++i) sigma.push_back(i);
    sigma.push_back(n);
    sigma.push_back(n + 1);
    return EmbeddingSpec::from_index_map(name, model_of({Factor{DomainType::IV, p, 0}}),
                                         model_of({Factor{DomainType::IV, n, 0}}), sigma);
  }
  // δ(Ω^k)×{0} ⊂ Ω^n
  static const std::regex delta(R"(delta(\d+)_(\w+)_x0_in_(\w+)\^(\d+))");
  if (std::regex_match(name, m, delta)) {
    int k = std::stoi(m[1]), n = std::stoi(m[4]);
    Factor f = parse_compact(m[2]);
    if (parse_compact(m[3]) != f || k < 1 || k > n) throw DomainError(name + ": need 1 <= k <= n over one factor type");
    ModelPtr src = model_of({f});
    ModelPtr tgt = model_of(std::vector<Factor>(n, f));
    const int a = f.ambient();
    return EmbeddingSpec::from_map(name, src, tgt, [&](const Matrix& x) {
      Matrix y(tgt->n(), tgt->n());
      for (int c = 0; c < k; ++c)
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < a; ++j) y(c * a + i, c * a + j) = x(i, j);
      return y;
    });
  }
  throw DomainError("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
  return {"identity_I22",      "identity_IV4",      "III2_in_I22",         "III3_in_I33",
          "II3_in_I33",        "II4_in_I44",        "diag_polydisk_I22",   "polydisk_I33",
          "polydisk_I23",      "polydisk_II4",      "polydisk_II5",        "polydisk_III2",
          "polydisk_III3",     "polydisk_IV3",      "polydisk_IV5",        "diag_disk_in_I22",
          "diag_disk_in_I23",  "diag_disk_in_III2", "diag_disk_in_III3",   "diag_disk_in_IV3",
          "diag_disk_in_II4",  "II2_x_II2_in_II4",  "II2_x_II3_in_II5",    "II3_x_II3_in_II6",
          "III1_x_III1_in_III2", "III1_x_III2_in_III3", "III2_x_III2_in_III4", "I11_x_I11_in_I22",
          "I11_x_I22_in_I33",  "IV2_in_IV4",        "IV3_in_IV4",          "IV3_in_IV5",
          "factor_disk_in_bidisk", "diag_disk_in_bidisk", "delta2_I11_x0_in_I11^3", "delta2_I11_x0_in_I11^2"};
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j[0].size()) throw ParseError("ragged matrix");
    Vec row;
    for (const auto& x : r) row.push_back(x.is_number_integer() ? Scalar(x.get<long>()) : Scalar::parse(x.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

nlohmann::json to_json(const EmbeddingSpec& e) {
  nlohmann::json j;
  j["name"] = e.name();
  j["source"] = e.source().spec().str();
  j["target"] = e.target().spec().str();
  j["images"] = nlohmann::json::array();
  for (const auto& im : e.images()) j["images"].push_back(matrix_json(im));
  return j;
}

EmbeddingSpec embedding_from_json(const nlohmann::json& j) {
  try {
    ModelPtr s = get_model(DomainSpec::parse(j.at("source").get<std::string>()));
    ModelPtr t = get_model(DomainSpec::parse(j.at("target").get<std::string>()));
    std::vector<Matrix> images;
    for (const auto& im : j.at("images")) images.push_back(matrix_from_json(im));
    return EmbeddingSpec(j.value("name", std::string("custom")), s, t, std::move(images));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("embedding JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const ClassificationReport& r) {
  auto strs = [](const std::vector<Scalar>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  return {{"h1", r.h1},
          {"h2", r.h2},
          {"h3", r.h3},
          {"c", strs(r.c)},
          {"d", strs(r.d)},
          {"einstein_restricted", strs(r.einstein_restricted)},
          {"h3_einstein", r.h3_einstein},
          {"h3_alternative", r.h3_alternative},
          {"normalization_disagreement", r.normalization_disagreement}};
}

}  // namespace gaprig
