#pragma once

#include <map>
#include <optional>
#include <string>

#include "dcs/frequency_response.hpp"
#include "dcs/transfer_function.hpp"

namespace dcs {

enum class Method { lag, lead, pi, pid };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

/// What a synthesis is asked to achieve: target phase margin phi_pm at the
/// w-plane crossover frequency omega_wc, for a loop sampled at T seconds.
struct DesignGoal {
  double phase_margin_deg;
  double omega_wc;
  double sample_period;
};

/// Loop response D(j omega_wc) * G at the design frequency, where G is the
/// plant response the synthesis actually used (see design notes below).
struct LoopPoint {
  double mag;
  double phase_deg;
};

/// Margins measured on the synthesized open loop D*G.
struct AchievedMargins {
  std::optional<double> phase_margin_deg;
  std::optional<double> gain_crossover_w;   // warped rad/s
  std::optional<double> gain_margin_db;
  std::optional<double> phase_crossover_w;  // warped rad/s
};

struct ControllerDesign {
  Method method;
  DesignGoal goal;
  /// Required compensator phase rotation, normalized into (-180, 180].
  double theta_r_deg;
  /// Method-specific scalars (lag/lead: a0, omega_w0, omega_wp, kd, z0, zp,
  /// lead adds a1, b1; pi: kp, ki; pid: kp, ki, kd, kr, kc). All carry
  /// plant_mag and plant_phase_deg — the plant response used for synthesis.
  std::map<std::string, double> params;
  TransferFunction d_w;
  TransferFunction d_z;
  LoopPoint loop_at_wc;
  AchievedMargins achieved;
};

// All four methods take the plant as a W-domain transfer function (the exact
// bilinear image of the sampled plant). The plant response fed into the
// design formulas is evaluated at the true frequency point — w = j*warp(wc),
// i.e. z = e^(j wc T) — because the loop that matters crosses over on the
// unit circle; the compensator algebra itself runs at w = j*wc. For
// lead/PI/PID this makes D(j wc) * G equal 1 at exactly -180 + phi_pm
// degrees by construction.

/// Frequency where the plant's w-plane phase equals
/// -(180 - allowance - phi_pm) degrees, scanned on (1e-3, 0.999*2/T) and
/// refined by bisection to 1e-9 relative. Throws NoSolution if the phase
/// never attains the target there.
double find_lag_crossover(const TransferFunction& plant_w,
                          double phase_margin_deg, double allowance_deg);

/// Lag: zero a decade below crossover (omega_w0 = 0.1 wc), pole placed so
/// the high-frequency asymptote a0 * (omega_wp/omega_w0) * |G| equals 1.
/// The -5 dB / 5 degree allowance built into the procedure is approximate,
/// so the realized loop is verified by measurement: achieved phase margin
/// must land within 1 degree of the goal (ConstraintViolated otherwise).
ControllerDesign design_lag(const TransferFunction& plant_w,
                            const DesignGoal& goal, double a0);

/// Lead: solves a1, b1 from the exact angle condition
///   theta_r = 180 + phi_pm - angle(G),
///   a1 = (1 - a0 |G| cos theta)/(wc |G| sin theta),
///   b1 = (cos theta - a0 |G|)/(wc sin theta).
ControllerDesign design_lead(const TransferFunction& plant_w,
                             const DesignGoal& goal, double a0);

/// PI: KP = cos(theta)/|G|, KI = -wc sin(theta)/|G| with
/// theta = -180 + phi_pm - angle(G); D(z) built directly over (z - 1).
ControllerDesign design_pi(const TransferFunction& plant_w,
                           const DesignGoal& goal);

/// PID with fixed KI and a derivative pole at 2/T: KR + jKC is the required
/// controller response at wc; KD and KP follow from the modified (proper)
/// derivative term, and D(z) is built directly over z^2 - z.
ControllerDesign design_pid(const TransferFunction& plant_w,
                            const DesignGoal& goal, double ki);

}  // namespace dcs
