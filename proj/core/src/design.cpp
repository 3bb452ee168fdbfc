#include "dcs/design.hpp"

#include <cmath>
#include <numbers>

#include "dcs/bilinear.hpp"
#include "dcs/errors.hpp"

namespace dcs {

namespace {

constexpr double kPi = std::numbers::pi;

double deg(double rad) { return rad * 180.0 / kPi; }
double rad(double d) { return d * kPi / 180.0; }

// Fold into (-180, 180].
double wrap_degrees(double a) {
  double r = std::fmod(a + 180.0, 360.0);
  if (r <= 0.0) r += 360.0;
  return r - 180.0;
}

void check_goal(const DesignGoal& goal, const TransferFunction& plant_w) {
  if (plant_w.domain().kind() != Domain::Kind::W)
    throw DomainMismatch("design: plant must be a W-domain transfer function");
  if (plant_w.domain().sample_period() != goal.sample_period)
    throw DomainMismatch("design: goal and plant sample periods differ");
  if (!(goal.omega_wc > 0.0) || goal.omega_wc >= 2.0 / goal.sample_period)
    throw BandViolation("design: omega_wc must lie in (0, 2/T)");
}

// Plant response used by every synthesis: the sampled system's response at
// true frequency omega_wc, i.e. the w-plane function at j*warp(omega_wc).
struct PlantPoint {
  double mag;
  double phase_deg;  // principal
};

PlantPoint plant_response(const TransferFunction& plant_w,
                          const DesignGoal& goal) {
  const double ww = warp_frequency(goal.omega_wc, goal.sample_period);
  const auto g = plant_w.evaluate({0.0, ww});
  return {std::abs(g), deg(std::arg(g))};
}

// Shared tail: record the synthesis-consistent loop response at wc and the
// measured margins of the realized loop (computed in the w domain; identical
// to the z-domain values by the bilinear map).
void finish(ControllerDesign& d, const TransferFunction& plant_w,
            const PlantPoint& g) {
  const auto dw = d.d_w.evaluate({0.0, d.goal.omega_wc});
  const auto loop = dw * std::polar(g.mag, rad(g.phase_deg));
  d.loop_at_wc = {std::abs(loop), deg(std::arg(loop))};
  d.params["plant_mag"] = g.mag;
  d.params["plant_phase_deg"] = g.phase_deg;

  const auto m = margins(series(d.d_w, plant_w));
  d.achieved = {m.phase_margin_deg, m.gain_crossover, m.gain_margin_db,
                m.phase_crossover};
}

// Lead/PI/PID place the loop response at wc exactly; assert that here.
void verify_exact_placement(const ControllerDesign& d) {
  const double target_phase = -180.0 + d.goal.phase_margin_deg;
  const double dphase = wrap_degrees(d.loop_at_wc.phase_deg - target_phase);
  if (std::abs(d.loop_at_wc.mag - 1.0) > 1e-6 || std::abs(dphase) > 1e-4)
    throw ConstraintViolated("loop placement",
                             "synthesized loop response missed the target at "
                             "the design frequency");
}

TransferFunction first_order_w(double a0, double omega_w0, double omega_wp,
                               double T) {
  return TransferFunction({a0, a0 / omega_w0}, {1.0, 1.0 / omega_wp},
                          Domain::w(T));
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::lag: return "lag";
    case Method::lead: return "lead";
    case Method::pi: return "pi";
    case Method::pid: return "pid";
  }
  return "?";
}

Method method_from_string(const std::string& name) {
  if (name == "lag") return Method::lag;
  if (name == "lead") return Method::lead;
  if (name == "pi") return Method::pi;
  if (name == "pid") return Method::pid;
  throw ConfigError("unknown method: " + name);
}

double find_lag_crossover(const TransferFunction& plant_w,
                          double phase_margin_deg, double allowance_deg) {
  if (plant_w.domain().kind() != Domain::Kind::W)
    throw DomainMismatch("find_lag_crossover: plant must be W-domain");
  const double T = plant_w.domain().sample_period();
  const double target = -(180.0 - allowance_deg - phase_margin_deg);

  const double lo = 1e-3, hi = 0.999 * 2.0 / T;
  const int n = 2000;
  auto phase_at = [&](double w, double ref) {
    double ph = deg(std::arg(plant_w.evaluate({0.0, w})));
    while (ph - ref > 180.0) ph -= 360.0;
    while (ph - ref < -180.0) ph += 360.0;
    return ph;
  };

  double prev_w = lo;
  double prev_ph = deg(std::arg(plant_w.evaluate({0.0, lo})));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 1; i < n; ++i) {
    const double w = std::exp(llo + (lhi - llo) * i / (n - 1));
    const double ph = phase_at(w, prev_ph);
    if ((prev_ph - target) * (ph - target) <= 0.0 && ph != prev_ph) {
      double a = prev_w, b = w, fa = prev_ph - target;
      const double ref = prev_ph;
      for (int it = 0; it < 200 && (b - a) > 1e-9 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = phase_at(mid, ref) - target;
        if ((fm > 0.0) == (fa > 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    prev_w = w;
    prev_ph = ph;
  }
  throw NoSolution("find_lag_crossover: phase never reaches the target on "
                   "(1e-3, 0.999*2/T)");
}

ControllerDesign design_lag(const TransferFunction& plant_w,
                            const DesignGoal& goal, double a0) {
  check_goal(goal, plant_w);
  if (!(a0 > 0.0)) throw NegativeGain("design_lag: a0 must be positive");
  const auto g = plant_response(plant_w, goal);
  const double T = goal.sample_period;

  const double omega_w0 = 0.1 * goal.omega_wc;
  // omega_wp = omega_w0 / (a0 |G|) must stay inside the band.
  if (!(a0 * g.mag > omega_w0 * T / 2.0))
    throw BandViolation("design_lag: required pole lands at or beyond 2/T");
  const double omega_wp = omega_w0 / (a0 * g.mag);

  FirstOrderWController ctrl{a0, omega_w0, omega_wp, T};
  ControllerDesign d{Method::lag,
                     goal,
                     0.0,  // lag uses no phase rotation
                     {},
                     first_order_w(a0, omega_w0, omega_wp, T),
                     realize_first_order(ctrl),
                     {},
                     {}};
  d.params["a0"] = a0;
  d.params["omega_w0"] = omega_w0;
  d.params["omega_wp"] = omega_wp;
  d.params["kd"] = d.d_z.num().coeffs()[1];
  d.params["z0"] = -d.d_z.num().coeffs()[0] / d.d_z.num().coeffs()[1];
  d.params["zp"] = -d.d_z.den().coeffs()[0];
  finish(d, plant_w, g);

  // The placement is asymptotic (the -5 dB / 5 degree allowance), so verify
  // by measurement instead of by construction.
  if (!d.achieved.phase_margin_deg ||
      std::abs(*d.achieved.phase_margin_deg - goal.phase_margin_deg) > 1.0)
    throw ConstraintViolated("achieved phase margin",
                             "lag loop phase margin off by more than 1 degree");
  return d;
}

ControllerDesign design_lead(const TransferFunction& plant_w,
                             const DesignGoal& goal, double a0) {
  check_goal(goal, plant_w);
  if (!(a0 > 0.0)) throw NegativeGain("design_lead: a0 must be positive");
  const auto g = plant_response(plant_w, goal);
  const double T = goal.sample_period;

  if (!(g.phase_deg < 180.0 + goal.phase_margin_deg))
    throw ConstraintViolated("plant phase",
                             "angle(G) must lie below 180 + phi_pm");
  if (!(a0 * g.mag < 1.0))
    throw ConstraintViolated("high-frequency gain",
                             "|G(j wc)| must be below 1/a0");

  const double theta =
      wrap_degrees(180.0 + goal.phase_margin_deg - g.phase_deg);
  const double st = std::sin(rad(theta)), ct = std::cos(rad(theta));
  if (st == 0.0)
    throw ConstraintViolated("phase rotation",
                             "theta_r of 0/180 leaves the corner equations "
                             "singular");
  if (!(ct > a0 * g.mag))
    throw ConstraintViolated("cos(theta_r)",
                             "cos(theta_r) must exceed a0 |G(j wc)|");

  const double a1 = (1.0 - a0 * g.mag * ct) / (goal.omega_wc * g.mag * st);
  const double b1 = (ct - a0 * g.mag) / (goal.omega_wc * st);
  if (!(b1 > 0.0))
    throw ConstraintViolated("b1", "pole coefficient must be positive");

  const double omega_w0 = a0 / a1;
  const double omega_wp = 1.0 / b1;
  FirstOrderWController ctrl{a0, omega_w0, omega_wp, T};
  ControllerDesign d{Method::lead,
                     goal,
                     theta,
                     {},
                     TransferFunction({a0, a1}, {1.0, b1}, Domain::w(T)),
                     realize_first_order(ctrl),
                     {},
                     {}};
  d.params["a0"] = a0;
  d.params["a1"] = a1;
  d.params["b1"] = b1;
  d.params["omega_w0"] = omega_w0;
  d.params["omega_wp"] = omega_wp;
  d.params["kd"] = d.d_z.num().coeffs()[1];
  d.params["z0"] = -d.d_z.num().coeffs()[0] / d.d_z.num().coeffs()[1];
  d.params["zp"] = -d.d_z.den().coeffs()[0];
  finish(d, plant_w, g);
  verify_exact_placement(d);
  return d;
}

ControllerDesign design_pi(const TransferFunction& plant_w,
                           const DesignGoal& goal) {
  check_goal(goal, plant_w);
  const auto g = plant_response(plant_w, goal);
  const double T = goal.sample_period;

  const double theta =
      wrap_degrees(-180.0 + goal.phase_margin_deg - g.phase_deg);
  const double kp = std::cos(rad(theta)) / g.mag;
  double ki = -goal.omega_wc * std::sin(rad(theta)) / g.mag;
  if (!(kp > 0.0))
    throw NegativeGain("design_pi: KP <= 0 (crossover badly placed)");
  // KI = 0 (theta exactly 0, pure gain) is legal; sin() rounding noise at
  // that boundary must not read as a sign error.
  if (ki < 0.0 && ki > -1e-12 * goal.omega_wc / g.mag) ki = 0.0;
  if (ki < 0.0)
    throw NegativeGain("design_pi: KI < 0 (crossover badly placed)");

  // D(z) = ((KP + KI T/2) z - (KP - KI T/2)) / (z - 1), built literally so
  // the integrator pole stays exact.
  const double h = T / 2.0;
  ControllerDesign d{Method::pi,
                     goal,
                     theta,
                     {},
                     TransferFunction({ki, kp}, {0.0, 1.0}, Domain::w(T)),
                     TransferFunction({-kp + ki * h, kp + ki * h}, {-1.0, 1.0},
                                      Domain::z(T)),
                     {},
                     {}};
  d.params["kp"] = kp;
  d.params["ki"] = ki;
  finish(d, plant_w, g);
  verify_exact_placement(d);
  return d;
}

ControllerDesign design_pid(const TransferFunction& plant_w,
                            const DesignGoal& goal, double ki) {
  check_goal(goal, plant_w);
  if (ki < 0.0) throw NegativeGain("design_pid: KI must be non-negative");
  const auto g = plant_response(plant_w, goal);
  const double T = goal.sample_period;
  const double wc = goal.omega_wc;
  const double c = 2.0 / T;  // derivative pole location

  const double theta =
      wrap_degrees(-180.0 + goal.phase_margin_deg - g.phase_deg);
  // Required controller response at the crossover: KR + j KC.
  const double kr = std::cos(rad(theta)) / g.mag;
  const double kc = std::sin(rad(theta)) / g.mag;
  // Split into gains through the proper derivative term KD w/(1 + w/c):
  double kd = (kc + ki / wc) * (c * c + wc * wc) / (wc * c * c);
  const double kp = kr - kd * wc * wc * c / (c * c + wc * wc);
  if (!(kp > 0.0))
    throw NegativeGain("design_pid: KP <= 0 (crossover badly placed)");
  // Same boundary note as the PI integral gain: KD = 0 is legal, noise is not
  // a sign error.
  if (kd < 0.0 && kd > -1e-12 * (c * c + wc * wc) / (wc * c * c * g.mag))
    kd = 0.0;
  if (kd < 0.0)
    throw NegativeGain("design_pid: KD < 0 (crossover badly placed)");

  const double h = T / 2.0;
  // D(w) = (KP w (1 + h w) + KI (1 + h w) + KD w^2) / (w (1 + h w))
  Polynomial num_w{ki, kp + ki * h, kp * h + kd};
  Polynomial den_w{0.0, 1.0, h};
  // D(z) over z^2 - z, coefficients in closed form.
  Polynomial num_z{kd / T, -kp + ki * h - 2.0 * kd / T, kp + ki * h + kd / T};
  Polynomial den_z{0.0, -1.0, 1.0};

  ControllerDesign d{Method::pid,
                     goal,
                     theta,
                     {},
                     TransferFunction(num_w, den_w, Domain::w(T)),
                     TransferFunction(num_z, den_z, Domain::z(T)),
                     {},
                     {}};
  d.params["kp"] = kp;
  d.params["ki"] = ki;
  d.params["kd"] = kd;
  d.params["kr"] = kr;
  d.params["kc"] = kc;
  finish(d, plant_w, g);
  verify_exact_placement(d);
  return d;
}

}  // namespace dcs
