#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dcs/errors.hpp"
#include "dcs/frequency_response.hpp"
#include "test_util.hpp"

using dcs::Domain;
using dcs::TransferFunction;
using cplx = std::complex<double>;

namespace {
double mag_at(const TransferFunction& tf, double w) {
  return std::abs(dcs::response_at(tf, w));
}
double phase_at(const TransferFunction& tf, double w) {
  return std::arg(dcs::response_at(tf, w)) * 180.0 / 3.14159265358979323846;
}
}  // namespace

TEST_CASE("pointwise response in each domain") {
  // Continuous servo model at its own corner: |G| there is pinned and the
  // phase is -90 - 45 degrees on the nose.
  auto gs = tu::plant_s();
  CHECK_REL(mag_at(gs, 0.7809), 0.17776092903546908, 1e-14);
  CHECK_ABS(phase_at(gs, 0.7809), -135.0, 1e-12);

  // Sampled model on the unit circle.
  auto gz = tu::plant_z();
  CHECK_REL(mag_at(gz, 3.29), 0.01371726547548512, 1e-13);
  CHECK_ABS(phase_at(gz, 3.29), -176.07187151500602, 1e-11);

  // w-plane image along the warped axis.
  auto gw = tu::plant_w();
  CHECK_REL(mag_at(gw, 0.8), 0.17150045914445589, 1e-13);
  CHECK_ABS(phase_at(gw, 0.8), -137.96753160475032, 1e-11);
  CHECK_REL(mag_at(gw, 2.5), 0.02358373131930406, 1e-13);
  CHECK_ABS(phase_at(gw, 2.5), -169.69337778107504, 1e-11);

  CHECK_THROWS_AS((void)dcs::response_at(gz, 31.41592653589794),
                  dcs::NyquistViolation);
}

TEST_CASE("sweep grid and slopes") {
  auto gz = tu::plant_z();
  auto pts = dcs::bode_sweep(gz, 1e-3, 1e-2, 11);
  REQUIRE(pts.size() == 11);
  CHECK(pts.front().omega == 1e-3);
  CHECK(pts.back().omega == 1e-2);
  for (std::size_t i = 1; i < pts.size(); ++i)
    CHECK(pts[i].omega > pts[i - 1].omega);

  // One decade below the pole the sampled servo is an integrator:
  // -20 dB/decade and -90 degrees.
  CHECK_ABS(pts.back().mag_db - pts.front().mag_db, -20.0, 0.05);
  CHECK_ABS(pts.front().phase_deg, -90.0, 0.5);

  // Well above the pole corner it rolls at -40 dB/decade.
  auto hi = dcs::bode_sweep(gz, 8.0, 16.0, 2);
  CHECK_ABS(hi.back().mag_db - hi.front().mag_db, -40.0 * std::log10(2.0), 1.5);
}

TEST_CASE("sweep phase is unwrapped, not principal") {
  // Third-order w-plane roll-off passes -180 on the way to -270; the sweep
  // must keep going down instead of folding back to +180.
  TransferFunction gw({1.0}, {0.0, 1.0, 1.0, 1.0}, Domain::w(0.1));
  auto pts = dcs::bode_sweep(gw, 0.01, 19.0, 300);
  for (std::size_t i = 1; i < pts.size(); ++i)
    CHECK(std::abs(pts[i].phase_deg - pts[i - 1].phase_deg) < 180.0);
  CHECK(pts.back().phase_deg < -180.0);
}

TEST_CASE("sweep input guards") {
  auto gz = tu::plant_z();
  CHECK_THROWS_AS((void)dcs::bode_sweep(gz, 0.1, 1.0, 1), dcs::Degenerate);
  CHECK_THROWS_AS((void)dcs::bode_sweep(gz, 0.0, 1.0, 10), dcs::Degenerate);
  CHECK_THROWS_AS((void)dcs::bode_sweep(gz, 2.0, 1.0, 10), dcs::Degenerate);
  CHECK_THROWS_AS((void)dcs::bode_sweep(gz, 0.1, 40.0, 10),
                  dcs::NyquistViolation);
}

TEST_CASE("margins of the raw sampled servo") {
  auto m = dcs::margins(tu::plant_z());
  REQUIRE(m.phase_margin_deg.has_value());
  REQUIRE(m.gain_crossover.has_value());
  REQUIRE(m.gain_margin_db.has_value());
  REQUIRE(m.phase_crossover.has_value());
  CHECK_REL(*m.phase_margin_deg, 75.7300098785792, 1e-9);
  CHECK_REL(*m.gain_crossover, 0.19070459339395857, 1e-9);
  CHECK_REL(*m.gain_margin_db, 40.27544258555415, 1e-9);
  CHECK_REL(*m.phase_crossover, 3.926698413928204, 1e-9);

  // Self-consistency: |L| = 1 at the reported gain crossover, and the
  // principal phase at the phase crossover sits on the 180 line (either
  // sign, the principal value flips there).
  CHECK_ABS(mag_at(tu::plant_z(), *m.gain_crossover), 1.0, 1e-9);
  CHECK_ABS(std::abs(phase_at(tu::plant_z(), *m.phase_crossover)), 180.0, 1e-7);
}

TEST_CASE("absent crossings are reported as absent") {
  // |L| tops out around 0.2 and first-order phase stays above -180.
  TransferFunction small({0.1}, {-0.5, 1.0}, Domain::z(0.1));
  auto m = dcs::margins(small);
  CHECK_FALSE(m.phase_margin_deg.has_value());
  CHECK_FALSE(m.gain_crossover.has_value());
  CHECK_FALSE(m.gain_margin_db.has_value());
  CHECK_FALSE(m.phase_crossover.has_value());
}

TEST_CASE("margins agree between the z loop and its w image") {
  // Compensated loop: the bundled first-order lag stage in front of the
  // servo, in both representations.
  TransferFunction dz({-64.02376013938405, 66.1653713524243},
                      {-0.7858388786959754, 1.0}, Domain::z(0.1));
  auto loop_z = series(dz, tu::plant_z());
  auto loop_w = series(dcs::bilinear_z_to_w(dz), tu::plant_w());

  auto mz = dcs::margins(loop_z);
  auto mw = dcs::margins(loop_w);
  REQUIRE(mz.phase_margin_deg.has_value());
  REQUIRE(mw.phase_margin_deg.has_value());

  CHECK_REL(*mz.phase_margin_deg, 39.89437636922642, 1e-9);
  CHECK_REL(*mz.gain_crossover, 2.8893977071107697, 1e-9);
  CHECK_REL(*mz.gain_margin_db, 14.285876494133849, 1e-9);
  CHECK_REL(*mz.phase_crossover, 7.328043316383522, 1e-9);

  // The w-domain margins live at warped frequencies; unwarping them must
  // land on the z-domain crossovers, and the margin values must match.
  CHECK_REL(dcs::unwarp_frequency(*mw.gain_crossover, 0.1), *mz.gain_crossover,
            1e-9);
  CHECK_REL(dcs::unwarp_frequency(*mw.phase_crossover, 0.1),
            *mz.phase_crossover, 1e-9);
  CHECK_ABS(*mw.phase_margin_deg, *mz.phase_margin_deg, 1e-7);
  CHECK_ABS(*mw.gain_margin_db, *mz.gain_margin_db, 1e-7);
}
