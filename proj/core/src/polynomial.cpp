#include "dcs/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcs/errors.hpp"

namespace dcs {

namespace {

constexpr double kTrailingTol = 1e-14;

// One Newton step at a time, keeping the best iterate seen. Companion
// eigenvalues are typically good to ~1e-12 already; this pushes simple
// roots to machine precision without risking divergence.
std::complex<double> polish_root(const std::vector<double>& c,
                                 std::complex<double> z) {
  auto eval = [&](std::complex<double> x) {
    std::complex<double> p = 0.0, d = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      d = d * x + p;
      p = p * x + *it;
    }
    return std::pair{p, d};
  };
  auto best = z;
  double best_abs = std::abs(eval(z).first);
  for (int i = 0; i < 16; ++i) {
    auto [p, d] = eval(z);
    if (std::abs(p) == 0.0 || std::abs(d) == 0.0) break;
    z -= p / d;
    double a = std::abs(eval(z).first);
    if (a < best_abs) {
      best_abs = a;
      best = z;
    } else {
      break;
    }
  }
  return best;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs) {
  if (coeffs_.empty()) coeffs_ = {0.0};
  normalize();
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_ = {0.0};
  normalize();
}

Polynomial Polynomial::from_roots(std::span<const std::complex<double>> roots,
                                  double lead) {
  std::vector<std::complex<double>> c{lead};
  for (auto r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] -= r * c[k];
      next[k + 1] += c[k];
    }
    c = std::move(next);
  }
  std::vector<double> re(c.size());
  double scale = 0.0;
  for (auto v : c) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (std::abs(c[k].imag()) > 1e-9 * std::max(scale, 1.0))
      throw std::invalid_argument(
          "from_roots: root set is not conjugate-closed");
    re[k] = c[k].real();
  }
  return Polynomial(std::move(re));
}

void Polynomial::normalize() {
  double scale = 0.0;
  for (double c : coeffs_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) {
    coeffs_ = {0.0};
    return;
  }
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) < kTrailingTol * scale)
    coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial{};
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (*this)[i] + rhs[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (*this)[i] - rhs[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> out(coeffs_);
  for (double& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial{};
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(out));
}

std::vector<std::complex<double>> Polynomial::roots() const {
  if (degree() < 1)
    throw Degenerate("roots: constant polynomial has no roots");

  std::vector<double> c = coeffs_;
  std::vector<std::complex<double>> out;

  // Exact zeros at the low end are exact roots at the origin; peel them so
  // constructed factors like z^2 - z keep their origin root bit-exact.
  while (c.size() > 1 && c.front() == 0.0) {
    out.emplace_back(0.0, 0.0);
    c.erase(c.begin());
  }

  const std::size_t m = c.size() - 1;
  if (m == 1) {
    out.emplace_back(-c[0] / c[1], 0.0);
  } else if (m == 2) {
    // Stable quadratic: q = -(b + sign(b)·sqrt(disc))/2 avoids cancellation.
    double a = c[2], b = c[1], cc = c[0];
    double disc = b * b - 4.0 * a * cc;
    if (disc >= 0.0) {
      double sq = std::sqrt(disc);
      double q = -0.5 * (b + std::copysign(sq, b));
      double r1 = q / a;
      double r2 = (q != 0.0) ? cc / q : -b / a - r1;
      out.emplace_back(r1, 0.0);
      out.emplace_back(r2, 0.0);
    } else {
      double re = -b / (2.0 * a), im = std::sqrt(-disc) / (2.0 * a);
      out.emplace_back(re, im);
      out.emplace_back(re, -im);
    }
  } else if (m >= 3) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<int>(m),
                                                 static_cast<int>(m));
    for (std::size_t i = 1; i < m; ++i)
      comp(static_cast<int>(i), static_cast<int>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      comp(static_cast<int>(i), static_cast<int>(m - 1)) = -c[i] / c[m];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < static_cast<int>(m); ++i)
      out.push_back(polish_root(c, solver.eigenvalues()(i)));
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace dcs
