#include "dcs/transfer_function.hpp"

#include <cmath>

#include "dcs/errors.hpp"

namespace dcs {

Domain Domain::z(double sample_period) {
  if (!(sample_period > 0.0))
    throw Degenerate("Domain::z: sample period must be positive");
  return Domain(Kind::Z, sample_period);
}

Domain Domain::w(double sample_period) {
  if (!(sample_period > 0.0))
    throw Degenerate("Domain::w: sample period must be positive");
  return Domain(Kind::W, sample_period);
}

double Domain::sample_period() const {
  if (kind_ == Kind::S)
    throw DomainMismatch("sample_period: continuous domain has none");
  return period_;
}

TransferFunction::TransferFunction(Polynomial num, Polynomial den, Domain domain)
    : num_(std::move(num)), den_(std::move(den)), domain_(domain) {
  if (den_.is_zero())
    throw Degenerate("TransferFunction: zero denominator");
}

std::complex<double> TransferFunction::evaluate(std::complex<double> x) const {
  const std::complex<double> d = den_(x);
  if (std::abs(d) == 0.0)
    throw PoleHit("evaluate: denominator is exactly zero at the given point");
  return num_(x) / d;
}

TransferFunction TransferFunction::normalized() const {
  const double lead = den_.coeffs().back();
  return TransferFunction(num_ * (1.0 / lead), den_ * (1.0 / lead), domain_);
}

TransferFunction series(const TransferFunction& a, const TransferFunction& b) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatch("series: operands live in different domains");
  return TransferFunction(a.num() * b.num(), a.den() * b.den(), a.domain());
}

TransferFunction unity_feedback(const TransferFunction& open_loop) {
  if (open_loop.domain().kind() != Domain::Kind::Z)
    throw DomainMismatch("unity_feedback: defined for Z-domain loops");
  return TransferFunction(open_loop.num(), open_loop.den() + open_loop.num(),
                          open_loop.domain());
}

std::optional<double> dc_gain(const TransferFunction& tf) {
  const double dc_point =
      tf.domain().kind() == Domain::Kind::Z ? 1.0 : 0.0;
  const double d = tf.den()(dc_point);
  if (std::abs(d) <= 1e-12 * tf.den().max_abs_coeff())
    return std::nullopt;
  return tf.num()(dc_point) / d;
}

}  // namespace dcs
