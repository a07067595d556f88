#pragma once

#include <string>
#include <vector>

#include "gaprig/lie/lie_model.hpp"

namespace gaprig {

struct StructureReport {
  bool k_closed = true;        // [k,k] ⊆ k
  bool k_preserves_p = true;   // [k,p±] ⊆ p±
  bool pplus_abelian = true;   // [p+,p+] = 0 and [p−,p−] = 0
  bool pplus_pminus_in_k = true;
  bool h0_eigen = true;        // ad(H0) = ±i on p±, 0 on k
  bool tau_involution = true;  // τ² = id, τ(p+) = p−
  bool gram_symmetric = true;
  bool killing_invariant = true;  // B([z,x],y) + B(x,[z,y]) = 0 on basis triples (z in k, x, y in p)
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

StructureReport structure_checks(const LieModel& m);

}  // namespace gaprig
