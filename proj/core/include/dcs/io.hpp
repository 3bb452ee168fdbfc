#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dcs/design.hpp"
#include "dcs/frequency_response.hpp"
#include "dcs/step_response.hpp"
#include "dcs/transfer_function.hpp"

namespace dcs {

/// Tool-level configuration. Polynomials are ascending-order coefficient
/// lists of the continuous plant. Defaults describe the stock single-joint
/// robot-arm servo: 0.1533/(s^2 + 0.7809 s) sampled at 0.1 s, a 0.0667 V/deg
/// position sensor, and a 0.07 V step command.
struct ProjectConfig {
  std::vector<double> plant_num{0.1533};
  std::vector<double> plant_den{0.0, 0.7809, 1.0};
  double sample_period = 0.1;
  double kpot = 0.0667;
  double step_amplitude = 0.07;

  TransferFunction plant_s() const;
};

/// Parse a JSON config document; missing keys keep their defaults. Throws
/// ConfigError naming the offending field.
ProjectConfig parse_config(const std::string& json_text);
ProjectConfig load_config(const std::string& path);

/// Bare transfer-function record, the same shape design records embed
/// (num/den ascending, domain tag, sample_period when discrete).
std::string transfer_function_to_json(const TransferFunction& tf);
TransferFunction transfer_function_from_json(const std::string& json_text);

/// Full-fidelity JSON record of a design (round-trips bit-exact doubles).
std::string design_to_json(const ControllerDesign& d);
ControllerDesign design_from_json(const std::string& json_text);
ControllerDesign load_design(const std::string& path);

std::string metrics_to_json(const StepMetrics& m);

/// Fixed CSV formatting: 12 significant digits, '.' decimal point,
/// '\n' line endings — deterministic, byte-identical across runs.
std::string format_number(double v);

/// Header: omega_rad_s,omega_warped_rad_s,mag_db,phase_deg. For Z sweeps the
/// second column is the warped image of the first; for S and W sweeps both
/// columns carry the sweep's native frequency.
void write_bode_csv(std::ostream& os, std::span<const FrequencyPoint> points,
                    Domain domain);

/// Header: t_s,y_volts,y_deg with y_deg = y_volts/kpot.
void write_step_csv(std::ostream& os, std::span<const double> y,
                    double sample_period, double kpot);

}  // namespace dcs
