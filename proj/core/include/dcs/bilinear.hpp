#pragma once

#include "dcs/transfer_function.hpp"

namespace dcs {

/// First-order w-plane compensator D(w) = a0 (1 + w/omega_w0)/(1 + w/omega_wp)
/// with DC gain a0 and corner frequencies in rad/s. Covers both lag
/// (omega_w0 > omega_wp is allowed by the type, not by the design methods)
/// and lead shapes; both corners must sit inside the (0, 2/T) band.
struct FirstOrderWController {
  double a0;
  double omega_w0;
  double omega_wp;
  double sample_period;
};

/// Exact bilinear substitution z = (1 + (T/2)w) / (1 - (T/2)w), expanded
/// algebraically by factor convolution — no frequency sampling involved.
TransferFunction bilinear_z_to_w(const TransferFunction& tf_z);

/// Inverse map w = (2/T)(z - 1)/(z + 1), same expansion technique.
TransferFunction bilinear_w_to_z(const TransferFunction& tf_w);

/// True frequency on the unit circle -> w-plane frequency:
/// omega_w = (2/T) tan(omega T / 2). Throws NyquistViolation for
/// omega >= pi/T; negative input is reflected oddly (warp(-x) = -warp(x)).
double warp_frequency(double omega, double sample_period);

/// Inverse of warp_frequency: omega = (2/T) atan(omega_w T / 2).
double unwarp_frequency(double omega_w, double sample_period);

/// Closed-form discrete realization
///   D(z) = Kd (z - z0)/(z - zp),
///   Kd = a0 wp (w0 + 2/T) / (w0 (wp + 2/T)),
///   z0 = (2/T - w0)/(2/T + w0),  zp = (2/T - wp)/(2/T + wp).
/// Agrees with bilinear_w_to_z applied to the D(w) form to ~1e-15; the
/// closed form is kept because its coefficients appear in design records.
/// Throws BandViolation when a corner is at or beyond 2/T.
TransferFunction realize_first_order(const FirstOrderWController& ctrl);

}  // namespace dcs
