#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace dcs {

/// Real polynomial with coefficients stored in ascending power order:
/// coeffs()[k] multiplies x^k. The representation is kept normalized —
/// trailing (highest-order) coefficients smaller than 1e-14 times the
/// largest coefficient magnitude are stripped, so degree() reflects the
/// numerically meaningful degree. The zero polynomial is stored as {0}.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  /// Monic product of (x - r_i), scaled by `lead`. Imaginary parts must
  /// cancel (conjugate-closed root set); they are checked and dropped.
  static Polynomial from_roots(std::span<const std::complex<double>> roots,
                               double lead = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }
  double max_abs_coeff() const;

  /// Horner evaluation.
  std::complex<double> operator()(std::complex<double> x) const;
  double operator()(double x) const;

  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(double s) const;
  friend Polynomial operator*(double s, const Polynomial& p) { return p * s; }

  Polynomial derivative() const;

  /// All complex roots, sorted by (real, imag). Exact zero trailing
  /// coefficients are peeled off first (exact roots at the origin); the
  /// rest go through a companion-matrix eigensolve with Newton polish.
  /// Throws Degenerate for constant polynomials.
  std::vector<std::complex<double>> roots() const;

 private:
  void normalize();
  std::vector<double> coeffs_;
};

}  // namespace dcs
