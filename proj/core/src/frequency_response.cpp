#include "dcs/frequency_response.hpp"

#include <cmath>
#include <numbers>

#include "dcs/bilinear.hpp"
#include "dcs/errors.hpp"

namespace dcs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanPoints = 2000;

double to_deg(double rad) { return rad * 180.0 / kPi; }

// Principal phase shifted by whole turns to land within 180 of `ref`.
double phase_near(const TransferFunction& tf, double omega, double ref_deg) {
  double ph = to_deg(std::arg(response_at(tf, omega)));
  while (ph - ref_deg > 180.0) ph -= 360.0;
  while (ph - ref_deg < -180.0) ph += 360.0;
  return ph;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

// Bisection on [lo, hi] for a sign change of f, to ~1e-12 relative width.
template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::complex<double> response_at(const TransferFunction& tf, double omega) {
  switch (tf.domain().kind()) {
    case Domain::Kind::S:
    case Domain::Kind::W:
      return tf.evaluate({0.0, omega});
    case Domain::Kind::Z: {
      const double T = tf.domain().sample_period();
      if (std::abs(omega) >= kPi / T)
        throw NyquistViolation("response_at: omega at or beyond pi/T");
      return tf.evaluate(std::polar(1.0, omega * T));
    }
  }
  throw Degenerate("response_at: unreachable");
}

std::vector<FrequencyPoint> bode_sweep(const TransferFunction& tf,
                                       double omega_min, double omega_max,
                                       int points) {
  if (points < 2) throw Degenerate("bode_sweep: need at least 2 points");
  if (!(omega_min > 0.0) || !(omega_min < omega_max))
    throw Degenerate("bode_sweep: need 0 < omega_min < omega_max");
  if (tf.domain().kind() == Domain::Kind::Z &&
      omega_max >= kPi / tf.domain().sample_period())
    throw NyquistViolation("bode_sweep: omega_max at or beyond pi/T");

  std::vector<FrequencyPoint> out;
  out.reserve(points);
  double prev_phase = 0.0;
  for (double w : log_grid(omega_min, omega_max, points)) {
    const auto r = response_at(tf, w);
    double ph = to_deg(std::arg(r));
    if (!out.empty()) {
      while (ph - prev_phase > 180.0) ph -= 360.0;
      while (ph - prev_phase < -180.0) ph += 360.0;
    }
    prev_phase = ph;
    out.push_back({w, 20.0 * std::log10(std::abs(r)), ph});
  }
  return out;
}

StabilityMargins margins(const TransferFunction& open_loop) {
  double lo = 1e-3, hi = 1e6;
  if (open_loop.domain().kind() == Domain::Kind::Z) {
    hi = 0.999 * kPi / open_loop.domain().sample_period();
  } else if (open_loop.domain().kind() == Domain::Kind::W) {
    // Same physical band as the Z scan, mapped through the warp, so Z- and
    // W-domain margins of the same loop agree after unwarping.
    const double T = open_loop.domain().sample_period();
    lo = warp_frequency(1e-3, T);
    hi = warp_frequency(0.999 * kPi / T, T);
  }

  const auto grid = log_grid(lo, hi, kScanPoints);
  std::vector<double> mag(grid.size()), phase(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto r = response_at(open_loop, grid[i]);
    mag[i] = std::abs(r);
    phase[i] = to_deg(std::arg(r));
    if (i > 0) {
      while (phase[i] - phase[i - 1] > 180.0) phase[i] -= 360.0;
      while (phase[i] - phase[i - 1] < -180.0) phase[i] += 360.0;
    }
  }

  StabilityMargins result;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    // Gain crossover: |L| crosses 1. Keep the crossing with the smallest
    // phase margin when there are several.
    if ((mag[i - 1] - 1.0) * (mag[i] - 1.0) <= 0.0 && mag[i] != mag[i - 1]) {
      const double wx = bisect(
          [&](double w) { return std::abs(response_at(open_loop, w)) - 1.0; },
          grid[i - 1], grid[i]);
      const double pm = 180.0 + phase_near(open_loop, wx, phase[i - 1]);
      if (!result.phase_margin_deg || pm < *result.phase_margin_deg) {
        result.phase_margin_deg = pm;
        result.gain_crossover = wx;
      }
    }
    // Phase crossover: unwrapped phase crosses -180. Smallest gain margin.
    const double e0 = phase[i - 1] + 180.0, e1 = phase[i] + 180.0;
    if (e0 * e1 <= 0.0 && e0 != e1) {
      const double ref = phase[i - 1];
      const double wx = bisect(
          [&](double w) { return phase_near(open_loop, w, ref) + 180.0; },
          grid[i - 1], grid[i]);
      const double gm =
          -20.0 * std::log10(std::abs(response_at(open_loop, wx)));
      if (!result.gain_margin_db || gm < *result.gain_margin_db) {
        result.gain_margin_db = gm;
        result.phase_crossover = wx;
      }
    }
  }
  return result;
}

}  // namespace dcs
