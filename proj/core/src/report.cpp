#include "dcs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dcs/bilinear.hpp"
#include "dcs/discretize.hpp"
#include "dcs/errors.hpp"

namespace dcs {

namespace {

// Expected values for the default robot-arm configuration. The report
// command verifies a build against these; tolerances are the project's
// acceptance tolerances verbatim.

ReportRow rel_row(std::string group, std::string name, double computed,
                  double expected, double frac, std::string note = {}) {
  char crit[32];
  std::snprintf(crit, sizeof crit, "within %g%%", frac * 100.0);
  const bool pass = std::abs(computed - expected) <= frac * std::abs(expected);
  return {std::move(group), std::move(name), computed, expected,
          crit,            pass,            std::move(note)};
}

ReportRow abs_row(std::string group, std::string name, double computed,
                  double expected, double tol, const char* unit,
                  std::string note = {}) {
  char crit[48];
  std::snprintf(crit, sizeof crit, "+/- %g %s", tol, unit);
  const bool pass = std::abs(computed - expected) <= tol;
  return {std::move(group), std::move(name), computed, expected,
          crit,            pass,            std::move(note)};
}

ReportRow exact_row(std::string group, std::string name, double computed,
                    double expected) {
  return {std::move(group), std::move(name), computed, expected,
          "exact",         computed == expected, {}};
}

double warped_or_nan(const std::optional<double>& omega, double T) {
  return omega ? warp_frequency(*omega, T)
               : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double reference_crossover(Method m) {
  switch (m) {
    case Method::lag: return 3.29;
    case Method::lead: return 2.5;
    case Method::pi: return 0.8;
    case Method::pid: return 1.95;
  }
  return 0.0;
}

double reference_duration(Method m) {
  return m == Method::pi ? 250.0 : 150.0;
}

ReferenceStudy run_reference_study(const ProjectConfig& cfg) {
  auto plant_z = zoh_discretize(cfg.plant_s(), cfg.sample_period);
  auto plant_w = bilinear_z_to_w(plant_z);
  // The loop the step-metric expectations describe has the sensor gain in
  // it; y is then the sensor voltage. See header notes.
  TransferFunction sim_plant(plant_z.num() * cfg.kpot, plant_z.den(),
                             plant_z.domain());

  ReferenceStudy study{cfg,
                       plant_z,
                       plant_w,
                       margins(plant_z),
                       {}};

  for (Method m : {Method::lag, Method::lead, Method::pi, Method::pid}) {
    DesignGoal goal{kReferencePhaseMargin, reference_crossover(m),
                    cfg.sample_period};
    ControllerDesign design =
        m == Method::lag  ? design_lag(plant_w, goal, kReferenceA0)
        : m == Method::lead ? design_lead(plant_w, goal, kReferenceA0)
        : m == Method::pi   ? design_pi(plant_w, goal)
                            : design_pid(plant_w, goal, kReferencePidKi);

    MethodStudy ms{design, margins(series(design.d_z, plant_z)), {}, {},
                   reference_duration(m)};
    LoopConfig loop{design.d_z, sim_plant, cfg.step_amplitude, ms.duration};
    ms.step = simulate_step(loop);
    ms.metrics = step_metrics(ms.step, cfg.sample_period, cfg.step_amplitude,
                              closed_loop_final_value(loop));
    study.methods.push_back(std::move(ms));
  }
  return study;
}

std::vector<ReportRow> reference_rows(const ReferenceStudy& s) {
  std::vector<ReportRow> rows;
  const double T = s.config.sample_period;

  // Sampled plant coefficients (monic denominator).
  {
    const auto& n = s.plant_z.num();
    const auto& d = s.plant_z.den();
    rows.push_back(rel_row("plant", "num z^1", n[1], 0.0007471, 0.0005));
    rows.push_back(rel_row("plant", "num z^0", n[0], 0.0007279, 0.0005));
    rows.push_back(rel_row("plant", "den z^2", d[2], 1.0, 0.0005));
    rows.push_back(rel_row("plant", "den z^1", d[1], -1.925, 0.0005));
    rows.push_back(rel_row("plant", "den z^0", d[0], 0.9249, 0.0005));
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& r : s.plant_z.den().roots())
      dist = std::min(dist, std::abs(r - std::complex<double>(1.0)));
    rows.push_back(abs_row("plant", "|den root - 1|", dist, 0.0, 1e-9, ""));
  }

  const auto& lag = s.methods[0];
  const auto& lead = s.methods[1];
  const auto& pi = s.methods[2];
  const auto& pid = s.methods[3];

  rows.push_back(abs_row("lag design", "omega_w0",
                         lag.design.params.at("omega_w0"), 0.329, 1e-12,
                         "rad/s (rule: wc/10)"));
  rows.push_back(rel_row("lag design", "omega_wp",
                         lag.design.params.at("omega_wp"), 2.3979, 0.005));
  rows.push_back(rel_row("lag design", "gain kd",
                         lag.design.params.at("kd"), 66.15, 0.005));
  rows.push_back(rel_row("lag design", "kd*z0",
                         lag.design.params.at("kd") * lag.design.params.at("z0"),
                         64.01, 0.005));
  rows.push_back(rel_row("lag design", "pole zp",
                         lag.design.params.at("zp"), 0.7859, 0.005));

  rows.push_back(rel_row("lead design", "a1", lead.design.params.at("a1"),
                         27.4649, 0.01));
  rows.push_back(rel_row("lead design", "b1", lead.design.params.at("b1"),
                         0.5101, 0.01));
  rows.push_back(rel_row("lead design", "gain kd", lead.design.params.at("kd"),
                         49.927, 0.01));
  rows.push_back(rel_row("lead design", "zero z0", lead.design.params.at("z0"),
                         0.9642, 0.002));
  rows.push_back(rel_row("lead design", "pole zp", lead.design.params.at("zp"),
                         0.8215, 0.005,
                         "tables print 0.8251, inconsistent with their own "
                         "gain and zero; the self-consistent value is checked"));

  rows.push_back(rel_row("pi design", "kp", pi.design.params.at("kp"), 5.8307,
                         0.01));
  rows.push_back(rel_row("pi design", "ki", pi.design.params.at("ki"), 0.1642,
                         0.02));
  rows.push_back(rel_row("pi design", "num z^1", pi.design.d_z.num()[1], 5.839,
                         0.01));
  rows.push_back(rel_row("pi design", "num z^0", pi.design.d_z.num()[0], -5.823,
                         0.01));
  rows.push_back(rel_row("pi design", "den z^1", pi.design.d_z.den()[1], 1.0,
                         0.01));
  rows.push_back(rel_row("pi design", "den z^0", pi.design.d_z.den()[0], -1.0,
                         0.01));

  rows.push_back(rel_row("pid design", "kd", pid.design.params.at("kd"), 5.8069,
                         0.05));
  rows.push_back(rel_row("pid design", "kp", pid.design.params.at("kp"),
                         23.3942, 0.05));
  rows.push_back(rel_row("pid design", "num z^2", pid.design.d_z.num()[2],
                         81.51, 0.05));
  rows.push_back(rel_row("pid design", "num z^1", pid.design.d_z.num()[1],
                         -139.5, 0.05));
  rows.push_back(rel_row("pid design", "num z^0", pid.design.d_z.num()[0],
                         58.07, 0.05));
  rows.push_back(exact_row("pid design", "den z^2", pid.design.d_z.den()[2], 1.0));
  rows.push_back(exact_row("pid design", "den z^1", pid.design.d_z.den()[1], -1.0));
  rows.push_back(exact_row("pid design", "den z^0", pid.design.d_z.den()[0], 0.0));
  {
    // Rebuild the numerator from the recorded gains; must agree tightly.
    const double kp = pid.design.params.at("kp");
    const double ki = pid.design.params.at("ki");
    const double kd = pid.design.params.at("kd");
    const double h = T / 2.0;
    const Polynomial rebuilt{kd / T, -kp + ki * h - 2.0 * kd / T,
                             kp + ki * h + kd / T};
    double diff = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      diff = std::max(diff, std::abs(rebuilt[i] - pid.design.d_z.num()[i]));
    rows.push_back(abs_row("pid design", "numerator rebuild", diff, 0.0, 1e-9,
                           "max coefficient difference"));
  }

  const double pm_expect = kReferencePhaseMargin;
  const double gm_expect[] = {14.3, 15.3, 24.6, 24.1};
  const char* names[] = {"lag", "lead", "pi", "pid"};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& ms = s.methods[i];
    const std::string group = std::string(names[i]) + " loop";
    const double pm = ms.loop_margins.phase_margin_deg.value_or(
        std::numeric_limits<double>::quiet_NaN());
    rows.push_back(abs_row(group, "phase margin", pm, pm_expect, 0.5, "deg"));
    const double wx = warped_or_nan(ms.loop_margins.gain_crossover, T);
    rows.push_back(rel_row(
        group, "gain crossover (warped)", wx,
        reference_crossover(ms.design.method), 0.01,
        i == 0 ? "known irreproducible: the lag placement is asymptotic and "
                 "the loop crosses unity below the design frequency "
                 "(|L| at the 3.29 target is ~0.81)"
               : ""));
    const double gm = ms.loop_margins.gain_margin_db.value_or(
        std::numeric_limits<double>::quiet_NaN());
    rows.push_back(abs_row(group, "gain margin", gm, gm_expect[i], 0.3, "dB"));
  }

  rows.push_back(abs_row("uncompensated loop", "phase margin",
                         s.uncompensated.phase_margin_deg.value_or(
                             std::numeric_limits<double>::quiet_NaN()),
                         75.7, 0.5, "deg"));

  const double po_expect[] = {0.0, 0.0, 19.1, 11.6};
  const double rise_expect[] = {18.4, 17.9, 15.5, 4.6};
  const double settle_expect[] = {34.1, 33.0, 106.0, 51.9};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& mm = s.methods[i].metrics;
    const std::string group = std::string(names[i]) + " step";
    rows.push_back(exact_row(group, "steady-state error",
                             mm.steady_state_error, 0.0));
    rows.push_back(abs_row(group, "percent overshoot", mm.percent_overshoot,
                           po_expect[i], 1.0, "points"));
    rows.push_back(abs_row(group, "rise time", mm.rise_time_s, rise_expect[i],
                           std::max(0.05 * rise_expect[i], 0.2), "s"));
    rows.push_back(rel_row(group, "settling time", mm.settling_time_s,
                           settle_expect[i], 0.05));
  }

  return rows;
}

bool all_pass(std::span<const ReportRow> rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return r.pass; });
}

std::string format_report(std::span<const ReportRow> rows) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %-26s %14s %14s  %-14s %s\n", "group",
                "quantity", "computed", "expected", "criterion", "result");
  os << line << std::string(100, '-') << '\n';
  std::size_t passed = 0;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-20s %-26s %14.8g %14.8g  %-14s %s\n",
                  r.group.c_str(), r.name.c_str(), r.computed, r.expected,
                  r.criterion.c_str(), r.pass ? "pass" : "FAIL");
    os << line;
    if (!r.note.empty()) os << "    note: " << r.note << '\n';
    if (r.pass) ++passed;
  }
  os << std::string(100, '-') << '\n'
     << passed << '/' << rows.size() << " checks passed\n";
  return os.str();
}

}  // namespace dcs
