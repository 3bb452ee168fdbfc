#pragma once

#include <span>
#include <string>
#include <vector>

#include "dcs/design.hpp"
#include "dcs/frequency_response.hpp"
#include "dcs/io.hpp"
#include "dcs/step_response.hpp"

namespace dcs {

/// One comparison of a computed quantity against its bundled expected value.
struct ReportRow {
  std::string group;
  std::string name;
  double computed;
  double expected;
  std::string criterion;  // human-readable tolerance
  bool pass;
  std::string note;
};

/// Everything produced for one controller method at its reference operating
/// point: the design, margins of the unity loop D*G, and the step response
/// of the loop with the sensor gain in it (see ReferenceStudy).
struct MethodStudy {
  ControllerDesign design;
  StabilityMargins loop_margins;
  std::vector<double> step;
  StepMetrics metrics;
  double duration;
};

/// The full reproduction for a config: the sampled plant, the four designs
/// at their reference crossovers (3.29, 2.5, 0.8, 1.95 rad/s with 40 degree
/// phase margin, a0 = 10, PID KI = 0.85), margins, and step responses.
///
/// Margins are measured on the voltage loop D*G. Step responses are run with
/// the sensor gain kpot multiplying the loop (plant handed to the simulator
/// as kpot*G): that loop, with y the sensor voltage, is the one the bundled
/// step-metric expectations describe. The two conventions are deliberately
/// different — see README notes on reproduction.
struct ReferenceStudy {
  ProjectConfig config;
  TransferFunction plant_z;
  TransferFunction plant_w;
  StabilityMargins uncompensated;
  std::vector<MethodStudy> methods;  // lag, lead, pi, pid
};

/// Reference operating point per method.
double reference_crossover(Method m);
double reference_duration(Method m);
inline constexpr double kReferenceA0 = 10.0;
inline constexpr double kReferencePidKi = 0.85;
inline constexpr double kReferencePhaseMargin = 40.0;

ReferenceStudy run_reference_study(const ProjectConfig& cfg);

/// The expected-value table, evaluated against a finished study. Tolerances
/// match the acceptance suite exactly.
std::vector<ReportRow> reference_rows(const ReferenceStudy& study);

bool all_pass(std::span<const ReportRow> rows);

/// Fixed-width text rendering of the rows plus a pass/fail tally.
std::string format_report(std::span<const ReportRow> rows);

}  // namespace dcs
