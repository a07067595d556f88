#include "gaprig/cover/riemann_hurwitz.hpp"

#include "gaprig/error.hpp"

namespace gaprig {

RhResult rh_genus(long sheets, long base_genus, long ramification) {
  if (sheets < 1 || base_genus < 0 || ramification < 0) throw DomainError("rh_genus: invalid arguments");
  const long twice = sheets * (2 * base_genus - 2) + ramification + 2;
  if (twice % 2 != 0) throw DomainError("rh_genus: non-integer genus");
  RhResult r;
  r.genus = twice / 2;
  if (r.genus < 0) throw DomainError("rh_genus: negative genus");
  if (base_genus >= 2) {
    const long a = 2 * sheets * (base_genus - 1);
    r.average_df2 = mpq_class(a, a + ramification);
    r.average_df2->canonicalize();
  }
  return r;
}

void CoverSpec::validate() const {
  if (sheets != 2) throw UnsupportedError("only double covers are modelled");
  if (branch.size() % 2 != 0) throw DomainError("branch divisor of a double cover needs even cardinality");
}

RhResult CoverSpec::genus() const {
  validate();
  return rh_genus(sheets, base_genus, static_cast<long>(branch.size()));
}

long branch_count_for(int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("m must be odd and >= 1");
  return 4L * (static_cast<long>(m) * m - 1);
}

}  // namespace gaprig
