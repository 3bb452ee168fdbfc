#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "dcs/errors.hpp"
#include "dcs/transfer_function.hpp"
#include "test_util.hpp"

using dcs::Domain;
using dcs::Polynomial;
using dcs::TransferFunction;
using cplx = std::complex<double>;

TEST_CASE("domains compare by kind and period") {
  CHECK(Domain::s() == Domain::s());
  CHECK(Domain::z(0.1) == Domain::z(0.1));
  CHECK_FALSE(Domain::z(0.1) == Domain::z(0.2));
  CHECK_FALSE(Domain::z(0.1) == Domain::w(0.1));
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS((void)Domain::z(0.0), dcs::Error);
  CHECK_THROWS_AS((void)Domain::w(-1.0), dcs::Error);
  CHECK_THROWS_AS((void)Domain::s().sample_period(), dcs::DomainMismatch);
  CHECK(Domain::z(0.1).sample_period() == 0.1);
  CHECK(Domain::z(0.1).is_discrete());
  CHECK_FALSE(Domain::s().is_discrete());
}

TEST_CASE("construction rejects a zero denominator") {
  CHECK_THROWS_AS(TransferFunction({1.0}, {0.0}, Domain::s()), dcs::Degenerate);
}

TEST_CASE("evaluation by Horner on the four-digit servo model") {
  TransferFunction coarse({0.0007279, 0.0007471}, {0.9249, -1.925, 1.0},
                          Domain::z(0.1));
  cplx v = coarse.evaluate(cplx(0.0, 0.0));  // num(0)/den(0)
  CHECK_REL(v.real(), 0.0007870040004324791, 1e-14);
  CHECK(v.imag() == 0.0);
}

TEST_CASE("evaluation at an exact pole throws") {
  TransferFunction f({1.0}, {-1.0, 1.0}, Domain::z(0.1));
  CHECK_THROWS_AS((void)f.evaluate(cplx(1.0, 0.0)), dcs::PoleHit);
  CHECK_ABS(std::abs(f.evaluate(cplx(0.0, 0.0))), 1.0, 1e-15);
}

TEST_CASE("series multiplies and checks domains") {
  TransferFunction a({1.0, 2.0}, {1.0, 0.0, 1.0}, Domain::z(0.1));
  TransferFunction b({3.0}, {2.0, 1.0}, Domain::z(0.1));
  auto ab = series(a, b);
  CHECK(ab.num().degree() == 1);
  CHECK(ab.den().degree() == 3);
  CHECK(ab.num()[0] == 3.0);
  CHECK(ab.num()[1] == 6.0);

  // Multiplicativity as functions.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    cplx x(u(rng), u(rng));
    cplx lhs = ab.evaluate(x);
    cplx rhs = a.evaluate(x) * b.evaluate(x);
    CHECK_ABS(std::abs(lhs - rhs), 0.0, 1e-12 * (1.0 + std::abs(rhs)));
  }

  CHECK_THROWS_AS((void)series(a, TransferFunction({1.0}, {1.0}, Domain::z(0.2))),
                  dcs::DomainMismatch);
  CHECK_THROWS_AS((void)series(a, TransferFunction({1.0}, {1.0}, Domain::s())),
                  dcs::DomainMismatch);
}

TEST_CASE("unity feedback closes num/(den+num)") {
  TransferFunction L({0.5}, {-0.5, 1.0}, Domain::z(0.1));
  auto cl = dcs::unity_feedback(L);
  CHECK(cl.num()[0] == 0.5);
  CHECK(cl.den()[0] == 0.0);
  CHECK(cl.den()[1] == 1.0);

  CHECK_THROWS_AS((void)dcs::unity_feedback(
                      TransferFunction({1.0}, {1.0, 1.0}, Domain::s())),
                  dcs::DomainMismatch);
}

TEST_CASE("dc gain: finite, infinite, and the bundled lag table row") {
  // Discrete integrator-bearing plant: infinite dc gain, reported as absent.
  CHECK_FALSE(dc_gain(tu::plant_z()).has_value());

  // First-order compensator from the bundled reference table:
  // 66.15(z - 64.01/66.15)/(z - 0.7859) has dc gain ~10.
  TransferFunction lag({-64.01, 66.15}, {-0.7859, 1.0}, Domain::z(0.1));
  auto g = dc_gain(lag);
  REQUIRE(g.has_value());
  CHECK_REL(*g, 9.995329285380668, 1e-12);

  CHECK(*dc_gain(TransferFunction::unity(Domain::z(0.1))) == 1.0);

  // S and W domains take their dc value at 0.
  TransferFunction fw({2.0, 1.0}, {4.0, 1.0}, Domain::w(0.1));
  CHECK_ABS(*dc_gain(fw), 0.5, 1e-15);
}

TEST_CASE("normalized keeps the function, monic denominator") {
  TransferFunction f({2.0, 4.0}, {8.0, 2.0, 4.0}, Domain::s());
  auto n = f.normalized();
  CHECK(n.den()[2] == 1.0);
  for (double x : {0.3, 1.7, -2.2}) {
    cplx a = f.evaluate(cplx(x, 0.1));
    cplx b = n.evaluate(cplx(x, 0.1));
    CHECK_ABS(std::abs(a - b), 0.0, 1e-14 * (1.0 + std::abs(a)));
  }
}
