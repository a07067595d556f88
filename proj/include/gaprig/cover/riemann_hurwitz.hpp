#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "gaprig/cover/torus.hpp"

namespace gaprig {

struct RhResult {
  long genus = 0;
  // 2s(gT−1) / (2s(gT−1) + r); only defined for gT ≥ 2.
  std::optional<mpq_class> average_df2;
};

// 2(gS − 1) = 2s(gT − 1) + r
RhResult rh_genus(long sheets, long base_genus, long ramification);

// Double cover branched over an even number of points.
struct CoverSpec {
  std::vector<cd> branch;
  long base_genus = 1;
  long sheets = 2;

  void validate() const;
  RhResult genus() const;
};

// Ramification degree 4(m² − 1) of the m-th double cover over the genus-two base.
long branch_count_for(int m);

}  // namespace gaprig
