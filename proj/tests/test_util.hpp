#pragma once

#include <cmath>
#include <complex>

#include <doctest.h>

#include "dcs/bilinear.hpp"
#include "dcs/discretize.hpp"
#include "dcs/io.hpp"

// |a - b| against an absolute or a relative bound. The doctest Approx
// default is too loose for what we pin here.
#define CHECK_ABS(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))
#define CHECK_REL(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol) * std::abs(b))

namespace tu {

inline dcs::TransferFunction plant_s() { return dcs::ProjectConfig{}.plant_s(); }

inline dcs::TransferFunction plant_z() {
  return dcs::zoh_discretize(plant_s(), 0.1);
}

inline dcs::TransferFunction plant_w() {
  return dcs::bilinear_z_to_w(plant_z());
}

// Equality of two rationals as functions: normalized() strips the common
// scale, after which the coefficient lists must match.
inline void check_same_function(const dcs::TransferFunction& a,
                                const dcs::TransferFunction& b, double tol) {
  auto an = a.normalized();
  auto bn = b.normalized();
  REQUIRE(an.num().degree() == bn.num().degree());
  REQUIRE(an.den().degree() == bn.den().degree());
  const double ns = std::max({an.num().max_abs_coeff(), bn.num().max_abs_coeff(), 1e-300});
  for (int k = 0; k <= an.num().degree(); ++k)
    CHECK_ABS(an.num()[k], bn.num()[k], tol * ns);
  const double ds = std::max({an.den().max_abs_coeff(), bn.den().max_abs_coeff(), 1e-300});
  for (int k = 0; k <= an.den().degree(); ++k)
    CHECK_ABS(an.den()[k], bn.den()[k], tol * ds);
}

}  // namespace tu
