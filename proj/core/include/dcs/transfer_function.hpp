#pragma once

#include <complex>
#include <optional>

#include "dcs/polynomial.hpp"

namespace dcs {

/// Frequency-domain tag: continuous Laplace (S), sampled (Z, with period T),
/// or the bilinear w-plane image of Z (W, same T).
class Domain {
 public:
  enum class Kind { S, Z, W };

  static Domain s() { return Domain(Kind::S, 0.0); }
  static Domain z(double sample_period);
  static Domain w(double sample_period);

  Kind kind() const { return kind_; }
  bool is_discrete() const { return kind_ != Kind::S; }
  /// Sample period in seconds; invalid for S.
  double sample_period() const;

  bool operator==(const Domain& rhs) const {
    return kind_ == rhs.kind_ && period_ == rhs.period_;
  }

 private:
  Domain(Kind k, double T) : kind_(k), period_(T) {}
  Kind kind_;
  double period_;
};

/// Rational transfer function num/den over a tagged domain. No automatic
/// pole/zero cancellation is ever performed; what you build is what you get.
class TransferFunction {
 public:
  /// Throws Degenerate if den is the zero polynomial.
  TransferFunction(Polynomial num, Polynomial den, Domain domain);

  static TransferFunction unity(Domain domain) {
    return TransferFunction({1.0}, {1.0}, domain);
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  Domain domain() const { return domain_; }

  /// num(x)/den(x) by Horner. Throws PoleHit when |den(x)| is exactly zero.
  std::complex<double> evaluate(std::complex<double> x) const;

  /// Same function with a monic denominator (numerator rescaled to match).
  TransferFunction normalized() const;

 private:
  Polynomial num_, den_;
  Domain domain_;
};

/// Cascade a·b. Throws DomainMismatch unless both share one domain.
TransferFunction series(const TransferFunction& a, const TransferFunction& b);

/// Unity negative feedback closure num/(den+num) of a discrete open loop.
/// Throws DomainMismatch for non-Z domains. No stability check here.
TransferFunction unity_feedback(const TransferFunction& open_loop);

/// Gain at the domain's DC point (s=0, w=0, or z=1). nullopt means the DC
/// point is a pole of the function — an infinite DC gain, not an error.
std::optional<double> dc_gain(const TransferFunction& tf);

}  // namespace dcs
