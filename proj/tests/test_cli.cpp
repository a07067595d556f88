#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GAPRIG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json run_json(const std::string& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("cli domain-info") {
  const json iv3 = run_json("domain-info 'IV(3)'");
  CHECK(iv3["dim"] == 3);
  CHECK(iv3["rank"] == 2);
  CHECK(iv3["rho"] == "-3 + (0)i");
  CHECK(iv3["checks"]["structure"] == true);
  const json i22 = run_json("domain-info 'I(2,2)'");
  CHECK(i22["dim"] == 4);
  CHECK(i22["rank"] == 2);
  CHECK(i22["rho"] == "-4 + (0)i");
  CHECK(run("domain-info 'I(0,2)'").code == 2);
  CHECK(run("domain-info 'V(2)'").code != 0);
  CHECK(run("domain-info").code == 2);
}

TEST_CASE("cli classify") {
  CHECK(run_json("classify II2_x_II2_in_II4")["h3"] == true);
  CHECK(run_json("classify factor_disk_in_bidisk")["h2"] == false);
  CHECK(run_json("classify diag_disk_in_III2")["h2"] == true);
  CHECK(run("classify no_such_embedding").code == 2);
}

TEST_CASE("cli invariant-eval") {
  const json sym = run_json("invariant-eval tau_I33 sym3_plane");
  CHECK(sym["verdict"] == "nonzero");
  CHECK(sym["witness"].get<std::string>().rfind("32", 0) == 0);
  CHECK(run_json("invariant-eval tau_I33_tangent skew3_plane")["verdict"] == "zero");
  CHECK(run_json("invariant-eval tau_I33_cotangent skew3_plane")["verdict"] == "nonzero");
  CHECK(run("invariant-eval tau_I33 nowhere_plane").code == 2);
}

TEST_CASE("cli mu-decay") {
  const Run r = run("mu-decay --grid 128");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "m,card,mu,m_mu,residual");
  std::vector<double> mu;
  while (std::getline(in, line)) {
    std::istringstream f(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(f, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    mu.push_back(std::stod(cells[2]));
  }
  REQUIRE(mu.size() == 3);
  CHECK(mu[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(mu[1] < mu[0]);
  CHECK(mu[2] < mu[1]);
  CHECK(run("mu-decay --grid 64").code == 2);
  CHECK(run("mu-decay --grid 128 --m 2").code == 2);
  CHECK(run("mu-decay --grid 128 --tol 1e-15 --newton-max 1").code == 4);
}

TEST_CASE("cli output is deterministic") {
  for (const char* args : {"critical --embedding diag_disk_in_III2 --seed 7", "moment --embedding II2_x_II2_in_II4",
                           "tables --format csv", "mu-decay --grid 128 --format json"}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli argument errors") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("domain-info 'IV(3)' --format csv").code == 2);
}
