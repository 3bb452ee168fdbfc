// End-to-end checks of the dcsynth binary: exit codes, output shapes,
// determinism. Each case works inside its own temp directory.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::string path;
  TempDir() {
    char tmpl[] = "/tmp/dcscliXXXXXX";
    path = mkdtemp(tmpl);
  }
  std::string operator/(const std::string& name) const {
    return path + "/" + name;
  }
};

RunResult run(const TempDir& dir, const std::string& args) {
  const std::string out = dir / "_stdout", err = dir / "_stderr";
  const std::string cmd =
      std::string(DCSYNTH_BIN) + " " + args + " > " + out + " 2> " + err;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out),
          slurp(err)};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("discretize prints both precision forms") {
  TempDir dir;
  auto r = run(dir, "discretize --out " + (dir / "plant.json"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "full precision"));
  CHECK(contains(r.out, "0.0007469 0.0007277"));
  CHECK(contains(r.out, "1 -1.925 0.9249"));
  const auto record = slurp(dir / "plant.json");
  CHECK(contains(record, "\"domain\": \"z\""));
  CHECK(contains(record, "\"sample_period\": 0.1"));
}

TEST_CASE("bode sweeps are CSV with the exact header and are deterministic") {
  TempDir dir;
  auto r1 = run(dir, "bode --out " + (dir / "a.csv"));
  auto r2 = run(dir, "bode --out " + (dir / "b.csv"));
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  const auto a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a.rfind("omega_rad_s,omega_warped_rad_s,mag_db,phase_deg\n", 0) == 0);
  int lines = 0;
  for (char c : a) lines += c == '\n';
  CHECK(lines == 401);  // header + default 400 points
  CHECK(!contains(a, "\r"));

  // stdout and file output carry identical bytes
  auto piped = run(dir, "bode");
  CHECK(piped.out == a);

  // continuous sweep: both frequency columns identical
  auto rs = run(dir, "bode --system plant-s --points 5 --out " +
                         (dir / "s.csv"));
  CHECK(rs.exit_code == 0);
  std::istringstream ss(slurp(dir / "s.csv"));
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    auto c1 = line.substr(0, line.find(','));
    auto rest = line.substr(line.find(',') + 1);
    auto c2 = rest.substr(0, rest.find(','));
    CHECK(c1 == c2);
  }
}

TEST_CASE("design emits a record consumable by step and bode") {
  TempDir dir;
  auto d = run(dir, "design --method lag --out " + (dir / "lag.json"));
  CHECK(d.exit_code == 0);
  const auto record = slurp(dir / "lag.json");
  CHECK(contains(record, "\"method\": \"lag\""));
  CHECK(contains(record, "\"omega_wc\": 3.29"));

  auto b = run(dir, "bode --system open-loop --design " + (dir / "lag.json") +
                        " --out " + (dir / "ol.csv"));
  CHECK(b.exit_code == 0);
  CHECK(contains(slurp(dir / "ol.csv"), "omega_rad_s,"));

  auto s = run(dir, "step --design " + (dir / "lag.json") + " --out " +
                        (dir / "step_lag.csv"));
  CHECK(s.exit_code == 0);
  const auto csv = slurp(dir / "step_lag.csv");
  CHECK(csv.rfind("t_s,y_volts,y_deg\n0,0,0\n", 0) == 0);
  int lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 1502);  // header + 1501 samples of the 150 s reference run
  const auto metrics = slurp(dir / "step_lag_metrics.json");
  CHECK(contains(metrics, "\"percent_overshoot\""));
  CHECK(contains(metrics, "\"steady_state_error\": 0"));
}

TEST_CASE("design to stdout when --out is omitted") {
  TempDir dir;
  auto d = run(dir, "design --method pid");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "\"method\": \"pid\""));
  CHECK(contains(d.out, "\"omega_wc\": 1.95"));
}

TEST_CASE("errors go to stderr with a nonzero exit") {
  TempDir dir;
  // lead gate: |G| at this crossover is too large for the default a0
  auto gate = run(dir, "design --method lead --wc 0.3");
  CHECK(gate.exit_code == 1);
  CHECK(gate.out.empty());
  CHECK(contains(gate.err, "error:"));

  auto misuse = run(dir, "design --method lag --ki 2");
  CHECK(misuse.exit_code == 1);
  CHECK(contains(misuse.err, "--ki"));

  auto nocmd = run(dir, "");
  CHECK(nocmd.exit_code != 0);

  auto badflag = run(dir, "bode --nope");
  CHECK(badflag.exit_code != 0);

  std::ofstream(dir / "bad.json") << "{\"sample_period\": 0}\n";
  auto badcfg = run(dir, "discretize --config " + (dir / "bad.json"));
  CHECK(badcfg.exit_code == 1);
  CHECK(contains(badcfg.err, "sample_period"));
}

TEST_CASE("report writes the full bundle and flags the known miss") {
  TempDir dir;
  auto r = run(dir, "report --out " + (dir / "rep"));
  // One expected-value row misses its printed target; the report must fail.
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "pass"));
  CHECK(contains(r.out, "FAIL"));
  for (const char* name :
       {"plant_discrete.json", "bode_uncompensated.csv", "summary.txt",
        "design_lag.json", "design_lead.json", "design_pi.json",
        "design_pid.json", "bode_lag.csv", "bode_lead.csv", "bode_pi.csv",
        "bode_pid.csv", "step_lag.csv", "step_lead.csv", "step_pi.csv",
        "step_pid.csv", "step_lag_metrics.json", "step_lead_metrics.json",
        "step_pi_metrics.json", "step_pid_metrics.json"}) {
    CAPTURE(name);
    CHECK(!slurp(dir / ("rep/" + std::string(name))).empty());
  }
  CHECK(slurp(dir / "rep/summary.txt") == r.out);
}
