#pragma once

#include <string>
#include <vector>

namespace gaprig {

enum class DomainType { I, II, III, IV };

struct Factor {
  DomainType type;
  int p = 0;
  int q = 0;  // second parameter of type I only

  int rank() const;
  int dim() const;         // complex dimension of the domain (dim p+)
  int ambient() const;     // matrix size of the realization
  std::string str() const;    // "I(2,3)"
  std::string compact() const;  // "I23", "II4", "IV3"
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct DomainSpec {
  std::vector<Factor> factors;

  static DomainSpec parse(const std::string& text);
  static DomainSpec single(const Factor& f) { return DomainSpec{{f}}; }
  bool irreducible() const { return factors.size() == 1; }
  int rank() const;
  int dim() const;
  int ambient() const;
  std::string str() const;
  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

// Validates parameter ranges; throws DomainError.
void validate(const Factor& f);

}  // namespace gaprig
