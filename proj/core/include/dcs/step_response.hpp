#pragma once

#include <span>
#include <vector>

#include "dcs/transfer_function.hpp"

namespace dcs {

/// A unity-feedback sampled loop to step and measure. Controller and plant
/// must share one Z(T) domain; duration is in seconds (at least 10 T).
struct LoopConfig {
  TransferFunction controller;
  TransferFunction plant;
  double step_amplitude = 0.07;
  double duration = 150.0;
};

struct StepMetrics {
  double steady_state_error;   // |1 - y_final/reference|, fraction of the step
  double percent_overshoot;    // max(0, (peak - y_final)/y_final * 100)
  double rise_time_s;          // first 10% to first 90% crossing, interpolated
  double settling_time_s;      // last exit from the 2% band, interpolated
};

/// D*G (after domain checks).
TransferFunction open_loop(const LoopConfig& cfg);

/// D*G/(1 + D*G), uncancelled. Throws UnstableLoop (with the offending
/// poles) when any closed-loop pole lies outside the unit disk; poles on the
/// circle — an undriven integrator, say — are not flagged.
TransferFunction closed_loop(const LoopConfig& cfg);

/// Step response samples y[k] at t = k*T, k = 0..ceil(duration/T), via the
/// direct-form difference equation of the closed loop. y[0] inherits the
/// loop's relative degree naturally (leading numerator coefficients are
/// zero-padded).
std::vector<double> simulate_step(const LoopConfig& cfg);

/// Analytic final value of the stepped closed loop, from the open loop's
/// polynomials: exactly amplitude * 1 for a type-1 loop (open-loop pole at
/// z=1), amplitude * L(1)/(1 + L(1)) otherwise, and exactly 0 for a zero
/// open loop. Metrics use this, never the last sample.
double closed_loop_final_value(const LoopConfig& cfg);

/// Metrics per the definitions above. `reference` is the commanded value
/// (step amplitude), `y_final` the analytic final value of y. Percent
/// metrics are relative to y_final; steady-state error is relative to the
/// reference. Throws NotSettled when y_final is zero against a nonzero
/// reference, or when the series never permanently enters the 2% band.
/// A constant series equal to y_final reports 0 rise and 0 settling.
StepMetrics step_metrics(std::span<const double> y, double sample_period,
                         double reference, double y_final);

}  // namespace dcs
