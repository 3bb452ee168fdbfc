#include "dcs/step_response.hpp"

#include <algorithm>
#include <cmath>

#include "dcs/errors.hpp"

namespace dcs {

namespace {

void check_cfg(const LoopConfig& cfg) {
  if (cfg.controller.domain().kind() != Domain::Kind::Z ||
      !(cfg.controller.domain() == cfg.plant.domain()))
    throw DomainMismatch("loop: controller and plant must share one Z domain");
  const double T = cfg.plant.domain().sample_period();
  if (!(cfg.duration >= 10.0 * T))
    throw Degenerate("loop: duration must cover at least 10 samples");
}

}  // namespace

TransferFunction open_loop(const LoopConfig& cfg) {
  check_cfg(cfg);
  return series(cfg.controller, cfg.plant);
}

TransferFunction closed_loop(const LoopConfig& cfg) {
  const auto closed = unity_feedback(open_loop(cfg));
  if (closed.den().degree() >= 1) {
    std::vector<std::complex<double>> offenders;
    for (const auto& p : closed.den().roots())
      if (std::abs(p) > 1.0 + 1e-9) offenders.push_back(p);
    if (!offenders.empty())
      throw UnstableLoop("closed_loop: poles outside the unit disk",
                         std::move(offenders));
  }
  return closed;
}

std::vector<double> simulate_step(const LoopConfig& cfg) {
  const auto closed = closed_loop(cfg).normalized();
  const double T = cfg.plant.domain().sample_period();
  const std::size_t n = static_cast<std::size_t>(
      std::ceil(cfg.duration / T)) + 1;

  // Delay-indexed coefficients: a[i], b[i] multiply y[k-i], u[k-i]; that is
  // descending z-power order, a[0] = 1 after normalization.
  const auto nc = closed.num().coeffs();
  const auto dc = closed.den().coeffs();
  const std::size_t order = dc.size() - 1;
  std::vector<double> b(order + 1, 0.0), a(order + 1, 0.0);
  for (std::size_t i = 0; i < dc.size(); ++i) a[order - i] = dc[i];
  for (std::size_t i = 0; i < nc.size(); ++i) b[order - i] = nc[i];

  std::vector<double> y(n, 0.0);
  const double amp = cfg.step_amplitude;
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= order && i <= k; ++i) acc += b[i] * amp;
    for (std::size_t i = 1; i <= order && i <= k; ++i) acc -= a[i] * y[k - i];
    y[k] = acc;
  }
  return y;
}

double closed_loop_final_value(const LoopConfig& cfg) {
  const auto L = open_loop(cfg);
  const double num1 = L.num()(1.0);
  const double den1 = L.den()(1.0);
  if (L.num().is_zero()) return 0.0;
  // Type-1 branch: an open-loop integrator drives the closed-loop DC gain to
  // exactly one; return the exact value instead of a rounded quotient.
  if (std::abs(den1) <= 1e-9 * L.den().max_abs_coeff())
    return cfg.step_amplitude;
  return cfg.step_amplitude * num1 / (den1 + num1);
}

StepMetrics step_metrics(std::span<const double> y, double T,
                         double reference, double y_final) {
  if (y.size() < 2) throw Degenerate("step_metrics: series too short");
  if (reference == 0.0) throw Degenerate("step_metrics: zero reference");
  if (y_final == 0.0)
    throw NotSettled("step_metrics: output settles at zero against a nonzero "
                     "reference");

  StepMetrics m{};
  m.steady_state_error = std::abs(1.0 - y_final / reference);

  // Peak in the overshoot direction; the ratio is positive either way.
  double peak = y[0];
  for (double v : y) peak = y_final > 0.0 ? std::max(peak, v) : std::min(peak, v);
  m.percent_overshoot = std::max(0.0, (peak - y_final) / y_final * 100.0);

  // First crossings of 10% and 90% of the final value, linearly interpolated.
  auto first_crossing = [&](double level) -> double {
    if ((y[0] - level) * (y_final > 0 ? 1 : -1) >= 0.0) return 0.0;
    for (std::size_t k = 1; k < y.size(); ++k)
      if ((y[k - 1] - level) * (y[k] - level) <= 0.0 && y[k] != y[k - 1])
        return (static_cast<double>(k - 1) +
                (level - y[k - 1]) / (y[k] - y[k - 1])) * T;
    return -1.0;
  };
  const double t10 = first_crossing(0.1 * y_final);
  const double t90 = first_crossing(0.9 * y_final);
  if (t10 < 0.0 || t90 < 0.0)
    throw NotSettled("step_metrics: response never reaches 90% of final value");
  m.rise_time_s = t90 - t10;

  // Last departure from the 2% band, scanned from the end, interpolated to
  // the moment the band is re-entered for good.
  const double band = 0.02 * std::abs(y_final);
  if (std::abs(y.back() - y_final) > band)
    throw NotSettled("step_metrics: 2% band not entered by end of series");
  m.settling_time_s = 0.0;
  for (std::size_t k = y.size() - 1; k-- > 0;) {
    const double e0 = std::abs(y[k] - y_final) - band;
    if (e0 > 0.0) {
      const double e1 = std::abs(y[k + 1] - y_final) - band;
      m.settling_time_s = (static_cast<double>(k) + e0 / (e0 - e1)) * T;
      break;
    }
  }
  return m;
}

}  // namespace dcs
