#include "gaprig/embed/tables.hpp"

#include "gaprig/embed/catalog.hpp"

namespace gaprig {

namespace {

TableRow row(std::string family, std::string name, std::string claim, bool h2, bool h3, bool check3 = true) {
  TableRow r;
  r.family = std::move(family);
  r.embedding = std::move(name);
  r.claim = std::move(claim);
  r.expected_h2 = h2;
  r.expected_h3 = h3;
  r.check_h3 = check3;
  r.report = check_h3(catalog(r.embedding));
  return r;
}

std::string product(const std::string& t, int a, int b, int n) {
  return t + std::to_string(a) + "_x_" + t + std::to_string(b) + "_in_" + t + std::to_string(n);
}

}  // namespace

std::vector<TableRow> classical_table_rows() {
  std::vector<TableRow> out;
  for (int n = 4; n <= 6; ++n)
    for (int r = 2; r <= n - 2; ++r) out.push_back(row("II", product("II", r, n - r, n), "h3 iff n=2r", true, n == 2 * r));
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r <= n - 1; ++r)
      out.push_back(row("III", product("III", r, n - r, n), "h3 iff n=2r", true, n == 2 * r));
  // (p,q,r,s) = (2,2,1,1), (3,3,1,1), (3,3,2,2)
  const int rows_i[3][4] = {{2, 2, 1, 1}, {3, 3, 1, 1}, {3, 3, 2, 2}};
  for (const auto& pqrs : rows_i) {
    const int p = pqrs[0], q = pqrs[1], r = pqrs[2], s = pqrs[3];
    const std::string name = "I" + std::to_string(r) + std::to_string(s) + "_x_I" + std::to_string(p - r) +
                             std::to_string(q - s) + "_in_I" + std::to_string(p) + std::to_string(q);
    out.push_back(row("I", name, "h2; h3 iff p=r", true, p == r));
  }
  for (const char* t : {"III2", "III3", "IV3", "I22"})
    out.push_back(row("diag_disk", std::string("diag_disk_in_") + t, "h2 (tube type)", true, true, false));
  out.push_back(row("diag_disk", "diag_disk_in_I23", "not h2 (non-tube)", false, false, false));
  return out;
}

std::vector<EinsteinRow> einstein_table_rows() {
  std::vector<EinsteinRow> out;
  auto add = [&](const std::string& spec, long rho) {
    EinsteinRow r;
    r.model = spec;
    r.expected_rho = Scalar(rho);
    r.report = einstein_report(*get_model(spec));
    out.push_back(std::move(r));
  };
  for (int n = 1; n <= 3; ++n) add("I(" + std::to_string(n) + "," + std::to_string(n) + ")", -2 * n);
  for (int n : {4, 6}) add("II(" + std::to_string(n) + ")", -2 * (n - 1));
  for (int n = 1; n <= 4; ++n) add("III(" + std::to_string(n) + ")", -(n + 1));
  for (int n = 3; n <= 6; ++n) add("IV(" + std::to_string(n) + ")", -n);
  return out;
}

}  // namespace gaprig
