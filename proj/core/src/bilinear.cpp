#include "dcs/bilinear.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "dcs/errors.hpp"

namespace dcs {

namespace {

// Substitute x -> scale * (1 + u*v) / (1 - u*v) ... the two bilinear maps
// share one skeleton: given ascending coefficients c of a rational side,
// produce sum_k c_k * A(v)^k * B(v)^(M-k) where A, B are degree-1 factors.
// A and B are passed as {constant, linear} pairs.
std::vector<double> expand(std::span<const double> c, std::size_t M,
                           double a0, double a1, double b0, double b1,
                           double scale) {
  std::vector<double> out(M + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    // (a0 + a1 v)^k * (b0 + b1 v)^(M-k) by repeated convolution.
    std::vector<double> term{1.0};
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<double> next(term.size() + 1, 0.0);
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] += a0 * term[i];
        next[i + 1] += a1 * term[i];
      }
      term = std::move(next);
    }
    for (std::size_t r = k; r < M; ++r) {
      std::vector<double> next(term.size() + 1, 0.0);
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] += b0 * term[i];
        next[i + 1] += b1 * term[i];
      }
      term = std::move(next);
    }
    double ck = c[k] * std::pow(scale, static_cast<double>(k));
    for (std::size_t i = 0; i < term.size(); ++i) out[i] += ck * term[i];
  }
  return out;
}

}  // namespace

TransferFunction bilinear_z_to_w(const TransferFunction& tf_z) {
  if (tf_z.domain().kind() != Domain::Kind::Z)
    throw DomainMismatch("bilinear_z_to_w: input must be Z-domain");
  const double T = tf_z.domain().sample_period();
  const double h = T / 2.0;
  const std::size_t M = static_cast<std::size_t>(
      std::max(tf_z.num().degree(), tf_z.den().degree()));
  // z^k -> (1 + h w)^k (1 - h w)^(M-k); common (1 - h w)^-M clears.
  auto num = expand(tf_z.num().coeffs(), M, 1.0, h, 1.0, -h, 1.0);
  auto den = expand(tf_z.den().coeffs(), M, 1.0, h, 1.0, -h, 1.0);
  return TransferFunction(Polynomial(std::move(num)), Polynomial(std::move(den)),
                          Domain::w(T));
}

TransferFunction bilinear_w_to_z(const TransferFunction& tf_w) {
  if (tf_w.domain().kind() != Domain::Kind::W)
    throw DomainMismatch("bilinear_w_to_z: input must be W-domain");
  const double T = tf_w.domain().sample_period();
  const std::size_t M = static_cast<std::size_t>(
      std::max(tf_w.num().degree(), tf_w.den().degree()));
  // w^k -> (2/T)^k (z - 1)^k (z + 1)^(M-k); common (z + 1)^-M clears.
  auto num = expand(tf_w.num().coeffs(), M, -1.0, 1.0, 1.0, 1.0, 2.0 / T);
  auto den = expand(tf_w.den().coeffs(), M, -1.0, 1.0, 1.0, 1.0, 2.0 / T);
  return TransferFunction(Polynomial(std::move(num)), Polynomial(std::move(den)),
                          Domain::z(T));
}

double warp_frequency(double omega, double T) {
  if (std::abs(omega) >= std::numbers::pi / T)
    throw NyquistViolation("warp_frequency: |omega| must be below pi/T");
  return (2.0 / T) * std::tan(omega * T / 2.0);
}

double unwarp_frequency(double omega_w, double T) {
  return (2.0 / T) * std::atan(omega_w * T / 2.0);
}

TransferFunction realize_first_order(const FirstOrderWController& ctrl) {
  const double tt = 2.0 / ctrl.sample_period;
  if (!(ctrl.omega_w0 > 0.0) || !(ctrl.omega_wp > 0.0))
    throw BandViolation("realize_first_order: corners must be positive");
  if (ctrl.omega_w0 >= tt || ctrl.omega_wp >= tt)
    throw BandViolation("realize_first_order: corner at or beyond 2/T");
  const double kd = ctrl.a0 * ctrl.omega_wp * (ctrl.omega_w0 + tt) /
                    (ctrl.omega_w0 * (ctrl.omega_wp + tt));
  const double z0 = (tt - ctrl.omega_w0) / (tt + ctrl.omega_w0);
  const double zp = (tt - ctrl.omega_wp) / (tt + ctrl.omega_wp);
  return TransferFunction({-kd * z0, kd}, {-zp, 1.0},
                          Domain::z(ctrl.sample_period));
}

}  // namespace dcs
