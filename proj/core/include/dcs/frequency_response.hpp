#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dcs/transfer_function.hpp"

namespace dcs {

/// One row of a Bode sweep. omega is the true frequency for S/Z systems and
/// the warped (w-plane) frequency for W systems; phase is unwrapped along
/// the sweep, starting from the principal value at the lowest frequency.
struct FrequencyPoint {
  double omega;
  double mag_db;
  double phase_deg;
};

/// Classical margins. Each crossover/value pair is absent when the loop
/// never crosses the corresponding line inside the scanned band — that is a
/// result, not an error. With several crossings, the worst case (smallest
/// margin) is reported. Frequencies are domain-native (true rad/s for Z).
struct StabilityMargins {
  std::optional<double> phase_margin_deg;
  std::optional<double> gain_crossover;
  std::optional<double> gain_margin_db;
  std::optional<double> phase_crossover;
};

/// Pointwise response: s = j omega, w = j omega, or z = e^(j omega T).
/// Throws NyquistViolation for Z-domain omega >= pi/T; PoleHit propagates.
std::complex<double> response_at(const TransferFunction& tf, double omega);

/// Logarithmically spaced sweep, `points` >= 2 samples from omega_min to
/// omega_max inclusive. Phase is unwrapped sequentially (multiples of 360
/// are folded so consecutive samples differ by at most 180).
std::vector<FrequencyPoint> bode_sweep(const TransferFunction& tf,
                                       double omega_min, double omega_max,
                                       int points);

/// Gain/phase margins from a 2000-point logarithmic scan of the open loop
/// (1e-3 .. 0.999 pi/T for Z, the warped image of that band for W,
/// 1e-3 .. 1e6 for S), with each bracketed crossing refined by bisection to
/// ~1e-12 relative frequency.
StabilityMargins margins(const TransferFunction& open_loop);

}  // namespace dcs
