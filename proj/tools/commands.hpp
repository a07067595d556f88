#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gaprig::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> args;
  std::string plane;      // plane literal
  std::string embedding;  // catalog name for the plane
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  int perturbations = 10;
  // semistable-sweep random-plane part
  std::string model;
  int plane_dim = 2;
  int samples = 20;
  int descent_steps = 400;
  // hyperbolic-cover solver
  int grid = 512;
  std::string tau = "0,1";
  std::string e = "0.5,0";
  std::string ms = "1,3,5";
  double tol = 1e-10;
  int newton_max = 40;
  double residual_gate = 1e-4;
};

// Output and exit status of one command.  Verdicts never change the status.
struct Result {
  std::string text;
  int status = 0;
};

Result cmd_domain_info(const RunConfig& c);
Result cmd_classify(const RunConfig& c);
Result cmd_moment(const RunConfig& c);
Result cmd_critical(const RunConfig& c);
Result cmd_semistable_sweep(const RunConfig& c);
Result cmd_invariant_eval(const RunConfig& c);
Result cmd_mu_decay(const RunConfig& c);
Result cmd_tables(const RunConfig& c);

// Fixed-precision rendering of floating fields (10 significant digits).
double fixed(double x);
std::string dump(const nlohmann::json& j);

}  // namespace gaprig::cli
