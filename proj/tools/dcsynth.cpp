// dcsynth: command-line front end for the synthesis/analysis library.
//
// Subcommands: discretize | bode | design | step | report. Data goes to
// stdout or the --out target; diagnostics go to stderr; any error exits
// nonzero. All file output is deterministic (fixed 12-significant-digit
// formatting, '\n' line endings).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dcs/bilinear.hpp"
#include "dcs/design.hpp"
#include "dcs/discretize.hpp"
#include "dcs/errors.hpp"
#include "dcs/frequency_response.hpp"
#include "dcs/io.hpp"
#include "dcs/report.hpp"
#include "dcs/step_response.hpp"

namespace fs = std::filesystem;
using namespace dcs;

namespace {

ProjectConfig config_from(const std::string& path) {
  return path.empty() ? ProjectConfig{} : load_config(path);
}

TransferFunction sampled_plant(const ProjectConfig& cfg) {
  return zoh_discretize(cfg.plant_s(), cfg.sample_period);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  out << text;
}

std::string coeff_line(const Polynomial& p, bool descending, bool rounded) {
  std::string line;
  for (int k = 0; k <= p.degree(); ++k) {
    const int idx = descending ? p.degree() - k : k;
    if (!line.empty()) line += ' ';
    if (rounded) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4g", p[idx]);
      line += buf;
    } else {
      line += format_number(p[idx]);
    }
  }
  return line;
}

int cmd_discretize(const std::string& config_path, const std::string& out) {
  const auto cfg = config_from(config_path);
  const auto gd = sampled_plant(cfg);
  std::cout << "G(z), T = " << format_number(cfg.sample_period) << " s\n"
            << "full precision (ascending powers of z):\n"
            << "  num: " << coeff_line(gd.num(), false, false) << "\n"
            << "  den: " << coeff_line(gd.den(), false, false) << "\n"
            << "4 significant figures (descending powers of z):\n"
            << "  num: " << coeff_line(gd.num(), true, true) << "\n"
            << "  den: " << coeff_line(gd.den(), true, true) << "\n";
  if (!out.empty()) write_file(out, transfer_function_to_json(gd));
  return 0;
}

int cmd_bode(const std::string& config_path, const std::string& system,
             const std::string& design_path, double wmin, double wmax,
             int points, const std::string& out) {
  const auto cfg = config_from(config_path);
  TransferFunction tf = TransferFunction::unity(Domain::s());
  if (system == "plant-s") {
    tf = cfg.plant_s();
  } else if (system == "plant-z") {
    tf = sampled_plant(cfg);
  } else {  // open-loop
    if (design_path.empty())
      throw ConfigError("--system open-loop requires --design <record.json>");
    tf = series(load_design(design_path).d_z, sampled_plant(cfg));
  }
  const auto pts = bode_sweep(tf, wmin, wmax, points);
  if (out.empty()) {
    write_bode_csv(std::cout, pts, tf.domain());
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + out + " for writing");
    write_bode_csv(os, pts, tf.domain());
  }
  return 0;
}

int cmd_design(const std::string& config_path, const std::string& method,
               double pm, double wc, bool wc_set, double a0, bool a0_set,
               double ki, bool ki_set, const std::string& out) {
  const auto cfg = config_from(config_path);
  const Method m = method_from_string(method);
  if (a0_set && (m == Method::pi || m == Method::pid))
    throw ConfigError("--a0 applies to lag and lead designs only");
  if (ki_set && m != Method::pid)
    throw ConfigError("--ki applies to the pid design only");
  const DesignGoal goal{pm, wc_set ? wc : reference_crossover(m),
                        cfg.sample_period};
  const auto gw = bilinear_z_to_w(sampled_plant(cfg));
  ControllerDesign d = [&] {
    switch (m) {
      case Method::lag: return design_lag(gw, goal, a0);
      case Method::lead: return design_lead(gw, goal, a0);
      case Method::pi: return design_pi(gw, goal);
      default: return design_pid(gw, goal, ki);
    }
  }();
  const std::string record = design_to_json(d);
  if (out.empty())
    std::cout << record;
  else
    write_file(out, record);
  return 0;
}

int cmd_step(const std::string& config_path, const std::string& design_path,
             double duration, bool duration_set, const std::string& out) {
  const auto cfg = config_from(config_path);
  const auto d = load_design(design_path);
  const auto gz = sampled_plant(cfg);
  // The bundled step expectations describe the loop with the sensor gain in
  // it: the simulated plant is kpot*G and y is the sensor voltage.
  TransferFunction sensed(gz.num() * cfg.kpot, gz.den(), gz.domain());
  const LoopConfig loop{d.d_z, sensed, cfg.step_amplitude,
                        duration_set ? duration : reference_duration(d.method)};
  const auto y = simulate_step(loop);
  const auto metrics = step_metrics(y, cfg.sample_period, cfg.step_amplitude,
                                    closed_loop_final_value(loop));
  {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + out + " for writing");
    write_step_csv(os, y, cfg.sample_period, cfg.kpot);
  }
  fs::path metrics_path(out);
  metrics_path.replace_extension();
  metrics_path += "_metrics.json";
  write_file(metrics_path, metrics_to_json(metrics));
  return 0;
}

int cmd_report(const std::string& config_path, const std::string& out_dir) {
  const auto cfg = config_from(config_path);
  const auto study = run_reference_study(cfg);
  const fs::path dir(out_dir);
  fs::create_directories(dir);

  write_file(dir / "plant_discrete.json",
             transfer_function_to_json(study.plant_z));

  const auto sweep_to = [&](const TransferFunction& tf, const fs::path& p) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + p.string() + " for writing");
    write_bode_csv(os, bode_sweep(tf, 0.01, 30.0, 400), tf.domain());
  };
  sweep_to(study.plant_z, dir / "bode_uncompensated.csv");

  for (const auto& ms : study.methods) {
    const std::string tag = to_string(ms.design.method);
    write_file(dir / ("design_" + tag + ".json"), design_to_json(ms.design));
    sweep_to(series(ms.design.d_z, study.plant_z),
             dir / ("bode_" + tag + ".csv"));
    std::ofstream os(dir / ("step_" + tag + ".csv"), std::ios::binary);
    if (!os)
      throw ConfigError("cannot open step_" + tag + ".csv for writing");
    write_step_csv(os, ms.step, cfg.sample_period, cfg.kpot);
    os.close();
    write_file(dir / ("step_" + tag + "_metrics.json"),
               metrics_to_json(ms.metrics));
  }

  const auto rows = reference_rows(study);
  const std::string table = format_report(rows);
  write_file(dir / "summary.txt", table);
  std::cout << table;
  return all_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"sampled-data controller synthesis and frequency-domain "
               "analysis"};
  app.require_subcommand(1);

  std::string config_path, design_path, method;
  std::string out_disc, out_bode, out_design, out_step;
  std::string out_report = "report";
  std::string system = "plant-z";
  double pm = 40.0, wc = 0.0, a0 = 10.0, ki = 0.85, duration = 0.0;
  double wmin = 0.01, wmax = 30.0;
  int points = 400;

  auto* disc = app.add_subcommand(
      "discretize", "sample the continuous plant with a zero-order hold");
  disc->add_option("--config", config_path, "JSON config path");
  disc->add_option("--out", out_disc, "write the full-precision record here");

  auto* bode = app.add_subcommand(
      "bode", "frequency sweep as CSV (omega, warped omega, dB, degrees)");
  bode->add_option("--config", config_path, "JSON config path");
  bode->add_option("--system", system, "what to sweep")
      ->check(CLI::IsMember({"plant-s", "plant-z", "open-loop"}))
      ->capture_default_str();
  bode->add_option("--design", design_path,
                   "design record for --system open-loop");
  bode->add_option("--wmin", wmin, "sweep start, rad/s")
      ->capture_default_str();
  bode->add_option("--wmax", wmax, "sweep end, rad/s")->capture_default_str();
  bode->add_option("--points", points, "sample count")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  bode->add_option("--out", out_bode, "CSV path (stdout when omitted)");

  auto* design = app.add_subcommand(
      "design", "synthesize a controller and emit its JSON record");
  design->add_option("--config", config_path, "JSON config path");
  design->add_option("--method", method, "lag | lead | pi | pid")
      ->required()
      ->check(CLI::IsMember({"lag", "lead", "pi", "pid"}));
  design->add_option("--pm", pm, "target phase margin, degrees")
      ->capture_default_str();
  design->add_option("--wc", wc,
                     "w-plane crossover, rad/s (default: the method's "
                     "reference point)");
  design->add_option("--a0", a0, "lag/lead DC gain")->capture_default_str();
  design->add_option("--ki", ki, "pid integral gain")->capture_default_str();
  design->add_option("--out", out_design, "record path (stdout when omitted)");

  auto* step = app.add_subcommand(
      "step", "closed-loop step response CSV plus a metrics JSON sidecar");
  step->add_option("--config", config_path, "JSON config path");
  step->add_option("--design", design_path, "controller record to close")
      ->required();
  step->add_option("--duration", duration,
                   "simulation length, s (default: the method's reference "
                   "duration)");
  step->add_option("--out", out_step,
                   "CSV path; metrics go to <stem>_metrics.json")
      ->required();

  auto* report = app.add_subcommand(
      "report", "run the full reference reproduction into a directory");
  report->add_option("--config", config_path, "JSON config path");
  report->add_option("--out", out_report, "output directory")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (disc->parsed()) return cmd_discretize(config_path, out_disc);
  if (bode->parsed())
    return cmd_bode(config_path, system, design_path, wmin, wmax, points,
                    out_bode);
  if (design->parsed())
    return cmd_design(config_path, method, pm, wc, design->count("--wc") > 0,
                      a0, design->count("--a0") > 0, ki,
                      design->count("--ki") > 0, out_design);
  if (step->parsed())
    return cmd_step(config_path, design_path, duration,
                    step->count("--duration") > 0, out_step);
  return cmd_report(config_path, out_report);
} catch (const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return 1;
}
