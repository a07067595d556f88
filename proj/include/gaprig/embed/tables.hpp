#pragma once

#include <string>
#include <vector>

#include "gaprig/embed/embedding.hpp"
#include "gaprig/lie/curvature.hpp"

namespace gaprig {

// One row of the classical (H₂)/(H₃) table with the verdict the table states.
struct TableRow {
  std::string family;     // "II", "III", "I", "diag_disk"
  std::string embedding;  // catalog name
  std::string claim;      // the rule being checked, e.g. "h3 iff n=2r"
  bool expected_h2 = false;
  bool expected_h3 = false;
  bool check_h3 = true;   // diagonal-disk rows only state h2
  ClassificationReport report;
  bool agrees() const {
    return report.h2 == expected_h2 && (!check_h3 || report.h3 == expected_h3);
  }
};

// Product rows II(r)×II(n−r) ⊂ II(n) for n = 4..6, III rows for n ≤ 4, the three
// I(r,s)×I(p−r,q−s) ⊂ I(p,q) rows read literally ("h3 iff p=r"), and the diagonal disks.
std::vector<TableRow> classical_table_rows();

struct EinsteinRow {
  std::string model;
  Scalar expected_rho;
  CurvatureReport report;
  bool agrees() const { return report.rho == expected_rho; }
};

// I(n,n) n ≤ 3, II(n) n ∈ {4,6}, III(n) n ≤ 4, IV(n) 3 ≤ n ≤ 6.
std::vector<EinsteinRow> einstein_table_rows();

}  // namespace gaprig
