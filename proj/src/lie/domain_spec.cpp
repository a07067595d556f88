#include "gaprig/lie/domain_spec.hpp"

#include <algorithm>
#include <regex>

#include "gaprig/error.hpp"

namespace gaprig {

int Factor::rank() const {
  switch (type) {
    case DomainType::I: return std::min(p, q);
    case DomainType::II: return p / 2;
    case DomainType::III: return p;
    case DomainType::IV: return 2;
  }
  return 0;
}

int Factor::dim() const {
  switch (type) {
    case DomainType::I: return p * q;
    case DomainType::II: return p * (p - 1) / 2;
    case DomainType::III: return p * (p + 1) / 2;
    case DomainType::IV: return p;
  }
  return 0;
}

int Factor::ambient() const {
  switch (type) {
    case DomainType::I: return p + q;
    case DomainType::II:
    case DomainType::III: return 2 * p;
    case DomainType::IV: return p + 2;
  }
  return 0;
}

std::string Factor::str() const {
  switch (type) {
    case DomainType::I: return "I(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case DomainType::II: return "II(" + std::to_string(p) + ")";
    case DomainType::III: return "III(" + std::to_string(p) + ")";
    case DomainType::IV: return "IV(" + std::to_string(p) + ")";
  }
  return "?";
}

std::string Factor::compact() const {
  switch (type) {
    case DomainType::I: return "I" + std::to_string(p) + std::to_string(q);
    case DomainType::II: return "II" + std::to_string(p);
    case DomainType::III: return "III" + std::to_string(p);
    case DomainType::IV: return "IV" + std::to_string(p);
  }
  return "?";
}

void validate(const Factor& f) {
  bool ok = true;
  switch (f.type) {
    case DomainType::I: ok = f.p >= 1 && f.q >= 1; break;
    case DomainType::II: ok = f.p >= 2; break;
    case DomainType::III: ok = f.p >= 1; break;
    case DomainType::IV: ok = f.p >= 2; break;  // IV(2) is the bidisk; kept as a source for IV(2) ⊂ IV(n)
  }
  if (!ok) throw DomainError("invalid parameters for " + f.str());
}

DomainSpec DomainSpec::parse(const std::string& text) {
  static const std::regex one(R"(\s*(IV|III|II|I)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*(?:\^\s*(\d+))?\s*)");
  DomainSpec spec;
  size_t start = 0;
  while (start <= text.size()) {
    size_t x = text.find('x', start);
    std::string part = text.substr(start, x == std::string::npos ? std::string::npos : x - start);
    static const std::regex exceptional(R"(\s*(VI|V)\s*(\(.*\))?\s*)");
    std::smatch m;
    if (std::regex_match(part, m, exceptional)) throw UnsupportedError("exceptional domain " + m[1].str() + " is not modeled");
    if (!std::regex_match(part, m, one)) throw ParseError("cannot parse domain spec: " + text);
    Factor f;
    std::string t = m[1];
    f.type = t == "I" ? DomainType::I : t == "II" ? DomainType::II : t == "III" ? DomainType::III : DomainType::IV;
    f.p = std::stoi(m[2]);
    bool has_q = m[3].matched;
    if ((f.type == DomainType::I) != has_q) throw ParseError("wrong parameter count: " + part);
    if (has_q) f.q = std::stoi(m[3]);
    int power = m[4].matched ? std::stoi(m[4]) : 1;
    if (power < 1) throw ParseError("bad power: " + part);
    try {
      validate(f);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    for (int k = 0; k < power; ++k) spec.factors.push_back(f);
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (spec.factors.empty()) throw ParseError("empty domain spec");
  return spec;
}

int DomainSpec::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank();
  return r;
}

int DomainSpec::dim() const {
  int d = 0;
  for (const auto& f : factors) d += f.dim();
  return d;
}

int DomainSpec::ambient() const {
  int n = 0;
  for (const auto& f : factors) n += f.ambient();
  return n;
}

std::string DomainSpec::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].str();
  }
  return s;
}

}  // namespace gaprig
