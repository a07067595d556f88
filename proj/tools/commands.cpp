#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gaprig/cover/pullback.hpp"
#include "gaprig/embed/catalog.hpp"
#include "gaprig/embed/tables.hpp"
#include "gaprig/error.hpp"
#include "gaprig/lie/checks.hpp"
#include "gaprig/lie/curvature.hpp"
#include "gaprig/moment/descent.hpp"
#include "gaprig/moment/sigma.hpp"
#include "gaprig/sections/bridge.hpp"
#include "gaprig/sections/quotient_path.hpp"

namespace gaprig::cli {

using nlohmann::json;

namespace {

const std::string& arg(const RunConfig& c, size_t i, const char* what) {
  if (i >= c.args.size()) throw ParseError(std::string("missing argument: ") + what);
  return c.args[i];
}

void json_only(const RunConfig& c) {
  if (c.format != "json") throw ParseError(c.command + " only writes json");
}

// Plane from --embedding, --plane (needs a model), or the full p+.
Plane resolve_plane(const RunConfig& c, const std::string& spec) {
  if (!c.embedding.empty()) return catalog(c.embedding).tangent_plane();
  if (spec.empty()) throw ParseError("need a domain spec or --embedding");
  ModelPtr m = get_model(DomainSpec::parse(spec));
  if (!c.plane.empty()) return Plane::parse(m, c.plane);
  return Plane::full(m);
}

json sparse_json(const SparseVec& v) {
  json a = json::array();
  for (const auto& [i, s] : v) a.push_back({{"index", i}, {"value", s.str()}});
  return a;
}

std::pair<double, double> parse_pair(const std::string& s, const char* what) {
  double a = 0, b = 0;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> a >> comma >> b) || comma != ',') throw ParseError(std::string("expected 're,im' for ") + what);
  return {a, b};
}

std::vector<int> parse_ms(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("bad m list: " + s);
    } catch (const std::logic_error&) {
      throw ParseError("bad m list: " + s);
    }
  }
  if (out.empty()) throw ParseError("empty m list");
  for (int m : out)
    if (m < 1 || m % 2 == 0) throw ParseError("m values must be odd and >= 1");
  return out;
}

Plane named_plane(const std::string& name) {
  if (name == "sym3_plane") return catalog("III3_in_I33").tangent_plane();
  if (name == "skew3_plane") return catalog("II3_in_I33").tangent_plane();
  if (name == "diag3_plane") return catalog("polydisk_I33").tangent_plane();
  if (name == "diag2_plane") return catalog("diag_polydisk_I22").tangent_plane();
  return catalog(name).tangent_plane();
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

double fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Result cmd_domain_info(const RunConfig& c) {
  json_only(c);
  const DomainSpec spec = DomainSpec::parse(arg(c, 0, "domain spec"));
  ModelPtr m = get_model(spec);
  json j;
  j["spec"] = spec.str();
  j["dim"] = spec.dim();
  j["rank"] = spec.rank();
  j["ambient"] = spec.ambient();
  j["k_dim"] = m->k_count();
  j["pairing_sign"] = m->pairing_sign().str();
  json factors = json::array();
  const std::vector<Scalar> cs = c_omega_factors(*m);
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    const Factor& f = spec.factors[i];
    const CurvatureReport rep = einstein_report(*get_model(DomainSpec::single(f)));
    factors.push_back({{"factor", f.str()},
                       {"dim", f.dim()},
                       {"rank", f.rank()},
                       {"c_omega", cs[i].str()},
                       {"einstein_killing", rep.einstein_killing.str()},
                       {"min_disk_curvature", rep.min_disk_curvature.str()},
                       {"min_disk_direction", rep.min_disk_direction},
                       {"rho", rep.rho.str()}});
  }
  j["factors"] = factors;
  if (spec.irreducible()) {
    j["c_omega"] = factors[0]["c_omega"];
    j["rho"] = factors[0]["rho"];
  }
  const StructureReport s = structure_checks(*m);
  const Plane full = Plane::full(m);
  j["checks"] = {{"structure", s.ok()},
                 {"failures", s.failures},
                 {"sigma_pplus_collinear_h0", spec.irreducible() ? sigma_collinear_h0(full) : true},
                 {"pplus_critical", is_critical(full)}};
  return {dump(j), s.ok() ? 0 : 5};
}

Result cmd_classify(const RunConfig& c) {
  json_only(c);
  const std::string& what = arg(c, 0, "embedding name or JSON");
  std::optional<EmbeddingSpec> e;
  if (!what.empty() && what[0] == '{') {
    e = embedding_from_json(json::parse(what));
  } else if (std::filesystem::exists(what)) {
    std::ifstream in(what);
    json j;
    try {
      in >> j;
    } catch (const json::exception& ex) {
      throw ParseError(ex.what());
    }
    e = embedding_from_json(j);
  } else {
    e = catalog(what);
  }
  const ClassificationReport r = check_h3(*e);
  json j = to_json(r);
  j["embedding"] = e->name();
  j["source"] = e->source().spec().str();
  j["target"] = e->target().spec().str();
  return {dump(j), 0};
}

Result cmd_moment(const RunConfig& c) {
  json_only(c);
  const Plane p = resolve_plane(c, c.args.empty() ? "" : c.args[0]);
  const MomentValue mv = sigma(p);
  json j;
  j["model"] = p.model().spec().str();
  j["plane"] = p.str();
  j["p"] = p.dim();
  j["k_coords"] = sparse_json(mv.k_coords);
  j["c"] = mv.c.str();
  j["sigma_prime_norm2"] = k_norm2(p.model(), mv.sigma_prime).str();
  j["sigma_norm2"] = sigma_norm2(p).str();
  j["collinear_h0"] = mv.sigma_prime.is_zero();
  return {dump(j), 0};
}

Result cmd_critical(const RunConfig& c) {
  json_only(c);
  const Plane p = resolve_plane(c, c.args.empty() ? "" : c.args[0]);
  std::mt19937_64 rng(c.seed);
  int failing = 0;
  for (int i = 0; i < c.perturbations; ++i) failing += !is_critical(perturbed(p, rng));
  json j;
  j["model"] = p.model().spec().str();
  j["plane"] = p.str();
  j["critical"] = is_critical(p);
  j["collinear_h0"] = sigma_collinear_h0(p);
  j["sigma_norm2"] = sigma_norm2(p).str();
  j["lower_bound"] = sigma_norm2_lower_bound(p.model(), p.dim()).str();
  j["perturbations"] = c.perturbations;
  j["perturbations_noncritical"] = failing;
  j["seed"] = c.seed;
  return {dump(j), 0};
}

Result cmd_semistable_sweep(const RunConfig& c) {
  json_only(c);
  json j;
  json rows = json::array();
  std::vector<std::string> names = c.args.empty() ? catalog_names() : c.args;
  for (const std::string& n : names) {
    const EmbeddingSpec e = catalog(n);
    const Plane p = e.tangent_plane();
    const ClassificationReport r = check_h3(e);
    json row = {{"embedding", n},       {"h1", r.h1}, {"h2", r.h2}, {"h3", r.h3}, {"critical", is_critical(p)},
                {"collinear_h0", false}, {"section", nullptr}, {"value", nullptr}, {"verdict", nullptr}};
    row["collinear_h0"] = sigma_collinear_h0(p);
    if (auto b = bridge_check(e)) {
      row["section"] = b->section;
      row["value"] = b->value.str();
      row["verdict"] = b->nonzero() ? "nonzero" : "zero";
      if (b->tangent_value) row["tangent_value"] = b->tangent_value->str();
    }
    rows.push_back(row);
  }
  j["catalog"] = rows;
  if (!c.model.empty()) {
    ModelPtr m = get_model(DomainSpec::parse(c.model));
    std::mt19937_64 rng(c.seed);
    const Scalar bound = sigma_norm2_lower_bound(*m, c.plane_dim);
    json runs = json::array();
    int below = 0;
    for (int s = 0; s < c.samples; ++s) {
      const Plane start = random_plane(m, c.plane_dim, rng);
      const DescentResult d = descent_flow(start, c.descent_steps, 0.5);
      bool monotone = true;
      for (size_t i = 1; i < d.values.size(); ++i) monotone = monotone && d.values[i] <= d.values[i - 1] + 1e-12;
      if (d.terminal_value < bound.re().get_d() - 1e-6) ++below;
      runs.push_back({{"start_norm2", sigma_norm2(start).str()},
                      {"terminal", fixed(d.terminal_value)},
                      {"grad_norm", fixed(d.grad_norm)},
                      {"critical", d.critical},
                      {"monotone", monotone},
                      {"steps", d.steps}});
    }
    j["descent"] = {{"model", m->spec().str()}, {"p", c.plane_dim}, {"seed", c.seed}, {"lower_bound", bound.str()},
                    {"below_bound", below}, {"runs", runs}};
  }
  return {dump(j), 0};
}

Result cmd_invariant_eval(const RunConfig& c) {
  json_only(c);
  const std::string& section = arg(c, 0, "section name");
  const std::string& plane_name = arg(c, 1, "plane name");
  const Plane plane = named_plane(plane_name);
  json j;
  j["section"] = section;
  j["plane"] = plane_name;
  j["model"] = plane.model().spec().str();
  Scalar value;
  if (section == "tau_I33" || section == "tau_I33_tangent" || section == "tau_I33_cotangent") {
    if (plane.model().spec().str() != "I(3,3)") throw DomainError(section + " needs a plane in I(3,3)");
    const Plane used = section == "tau_I33_cotangent" ? annihilator(plane) : plane;
    const QuotientComputation q = quotient_computation(plane.model(), used.vectors());
    value = q.full_polarized;
    j["construction"] = section == "tau_I33_cotangent" ? "cotangent (annihilator)" : "tangent";
    j["basis"] = used.str();
    j["theta_bar_zero"] = q.theta_bar_all_zero;
    j["words_full"] = q.full_words.str();
    j["words_retained"] = q.retained_words.str();
    const int k = used.dim();
    std::string wedge;
    for (int i = 1; i <= k; ++i) wedge += (i > 1 ? "^y" : "y") + std::to_string(i);
    j["witness"] = q.retained_words.str() + "*(" + wedge + ")^2";
    if (used.dim() == 6) j["general_pipeline"] = evaluate_t(cached_tau(plane.model_ptr(), 6), used).str();
  } else if (section.rfind("tau_", 0) == 0) {
    const DomainSpec spec = parse_compact_spec(section.substr(4));
    if (!(spec == plane.model().spec())) throw DomainError(section + ": plane lives in " + plane.model().spec().str());
    value = evaluate_t(cached_tau(plane.model_ptr(), plane.dim()), plane);
    j["construction"] = "tau, p = " + std::to_string(plane.dim());
  } else if (section.rfind("quadric_", 0) == 0) {
    value = quadric_discriminant(plane);
    j["construction"] = "quadric discriminant";
  } else if (section.rfind("projection_", 0) == 0) {
    value = projection_determinant(plane, std::stoi(section.substr(11)));
    j["construction"] = "projection determinant";
  } else {
    throw DomainError("unknown section: " + section);
  }
  j["value"] = value.str();
  j["verdict"] = value.is_zero() ? "zero" : "nonzero";
  return {dump(j), 0};
}

Result cmd_mu_decay(const RunConfig& c) {
  TorusSpec t;
  const auto [tr, ti] = parse_pair(c.tau, "--tau");
  const auto [er, ei] = parse_pair(c.e, "--e");
  t.tau = cd(tr, ti);
  t.n = c.grid;
  try {
    t.validate();
  } catch (const DomainError& ex) {
    throw ParseError(ex.what());
  }
  const std::vector<int> ms = parse_ms(c.ms);
  SolverOptions opt;
  opt.tol = c.tol;
  opt.newton_max = c.newton_max;
  const cd e(er, ei);
  const SingularMetric base = solve_liouville(t, {cd(0, 0), t.reduce(e)}, opt);
  const MuTable table = mu_decay(base, ms, e);
  const bool gate = base.converged && base.residual < c.residual_gate;
  Result r;
  r.status = gate ? 0 : 4;
  if (c.format == "csv") {
    std::ostringstream out;
    out << "m,card,mu,m_mu,residual\n";
    char buf[256];
    for (const MuRow& row : table.rows) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.10f,%.10f,%.3e\n", row.m, row.card, row.mu, row.m_mu, row.residual);
      out << buf;
    }
    r.text = out.str();
  } else {
    json rows = json::array();
    for (const MuRow& row : table.rows)
      rows.push_back({{"m", row.m},
                      {"card", row.card},
                      {"mu", fixed(row.mu)},
                      {"m_mu", fixed(row.m_mu)},
                      {"mu_grid", fixed(row.mu_grid)},
                      {"mu_near_pole", fixed(row.mu_near_pole)},
                      {"residual", fixed(row.residual)}});
    json j = {{"grid", t.n},
              {"tau", {fixed(t.tau.real()), fixed(t.tau.imag())}},
              {"e", {fixed(er), fixed(ei)}},
              {"newton_steps", base.newton_steps},
              {"residual", fixed(base.residual)},
              {"residual_gate", c.residual_gate},
              {"sup_m_mu", fixed(table.sup_m_mu)},
              {"rows", rows}};
    r.text = dump(j);
  }
  if (!gate) std::fprintf(stderr, "solver residual %.3e above gate %.1e\n", base.residual, c.residual_gate);
  return r;
}

Result cmd_tables(const RunConfig& c) {
  const std::vector<TableRow> rows = classical_table_rows();
  if (c.format == "csv") {
    std::ostringstream out;
    out << "family,embedding,claim,expected_h2,expected_h3,h1,h2,h3,agrees\n";
    for (const TableRow& r : rows)
      out << r.family << "," << r.embedding << ",\"" << r.claim << "\"," << csv_bool(r.expected_h2) << ","
          << (r.check_h3 ? csv_bool(r.expected_h3) : "") << "," << csv_bool(r.report.h1) << ","
          << csv_bool(r.report.h2) << "," << csv_bool(r.report.h3) << "," << csv_bool(r.agrees()) << "\n";
    return {out.str(), 0};
  }
  json classical = json::array();
  for (const TableRow& r : rows) {
    json row = {{"family", r.family}, {"embedding", r.embedding}, {"claim", r.claim},
                {"expected_h2", r.expected_h2}, {"h1", r.report.h1}, {"h2", r.report.h2},
                {"h3", r.report.h3}, {"agrees", r.agrees()}};
    if (r.check_h3) row["expected_h3"] = r.expected_h3;
    json d = json::array();
    for (const Scalar& s : r.report.d) d.push_back(s.str());
    row["d"] = d;
    classical.push_back(row);
  }
  json einstein = json::array();
  for (const EinsteinRow& r : einstein_table_rows())
    einstein.push_back({{"model", r.model}, {"expected_rho", r.expected_rho.str()}, {"rho", r.report.rho.str()},
                        {"agrees", r.agrees()}});
  return {dump(json{{"classical", classical}, {"einstein", einstein}}), 0};
}

}  // namespace gaprig::cli
