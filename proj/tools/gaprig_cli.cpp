#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "commands.hpp"
#include "gaprig/error.hpp"

using namespace gaprig;

namespace {

int report(int code, const std::string& kind, const std::string& what) {
  std::cerr << "gaprig: " << kind << ": " << what << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaprig: Hermitian symmetric domain checks and singular hyperbolic metrics"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--out", cfg.out, "write output to this file");
  std::string format;
  app.add_option("--format", format, "json or csv (mu-decay defaults to csv, everything else to json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.fallthrough();

  using Fn = std::function<cli::Result(const cli::RunConfig&)>;
  std::map<CLI::App*, Fn> handlers;
  auto sub = [&](const char* name, const char* help, Fn fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("args", cfg.args, "positional arguments");
    handlers[s] = std::move(fn);
    return s;
  };
  sub("domain-info", "dims, rank, c, rho and structure checks of a domain spec", cli::cmd_domain_info);
  sub("classify", "h1/h2/h3 report for a catalog name or embedding JSON", cli::cmd_classify);
  auto plane_opts = [&](CLI::App* s) {
    s->add_option("--plane", cfg.plane, "plane literal, e.g. \"e11, e22\"");
    s->add_option("--embedding", cfg.embedding, "use the tangent plane of a catalog embedding");
  };
  plane_opts(sub("moment", "Sigma of a plane", cli::cmd_moment));
  CLI::App* crit = sub("critical", "criticality of a plane and of random perturbations", cli::cmd_critical);
  plane_opts(crit);
  crit->add_option("--perturbations", cfg.perturbations)->capture_default_str();
  CLI::App* sweep = sub("semistable-sweep", "sections on catalog planes; optional descent runs", cli::cmd_semistable_sweep);
  sweep->add_option("--model", cfg.model, "run descent from random planes in this model");
  sweep->add_option("--p", cfg.plane_dim)->capture_default_str();
  sweep->add_option("--samples", cfg.samples)->capture_default_str();
  sweep->add_option("--steps", cfg.descent_steps)->capture_default_str();
  sub("invariant-eval", "evaluate a named section at a named plane", cli::cmd_invariant_eval);
  CLI::App* mu = sub("mu-decay", "solve the singular Liouville problem and tabulate mu_m", cli::cmd_mu_decay);
  mu->add_option("--grid", cfg.grid, "N (power of two >= 128)")->capture_default_str();
  mu->add_option("--tau", cfg.tau, "lattice generator re,im")->capture_default_str();
  mu->add_option("--e", cfg.e, "2-torsion point re,im")->capture_default_str();
  mu->add_option("--m", cfg.ms, "odd m values, comma separated")->capture_default_str();
  mu->add_option("--tol", cfg.tol, "Newton tolerance on |K+2|")->capture_default_str();
  mu->add_option("--newton-max", cfg.newton_max)->capture_default_str();
  sub("tables", "classical table rows and Einstein constants with verdicts", cli::cmd_tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  cfg.format = !format.empty() ? format : cfg.command == "mu-decay" ? "csv" : "json";
  try {
    const cli::Result r = handlers.at(chosen)(cfg);
    if (cfg.out.empty()) {
      std::cout << r.text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) return report(2, "config", "cannot open " + cfg.out);
      f << r.text;
    }
    return r.status;
  } catch (const ParseError& e) {
    return report(2, "parse", e.what());
  } catch (const DomainError& e) {
    return report(2, "config", e.what());
  } catch (const UnsupportedError& e) {
    return report(3, "unsupported", e.what());
  } catch (const NumericError& e) {
    return report(4, "numeric", e.what());
  } catch (const InvariantError& e) {
    return report(5, "invariant", e.what());
  } catch (const nlohmann::json::exception& e) {
    return report(2, "parse", e.what());
  }
}
