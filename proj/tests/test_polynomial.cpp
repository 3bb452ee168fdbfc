#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "dcs/errors.hpp"
#include "dcs/polynomial.hpp"

using dcs::Polynomial;
using cplx = std::complex<double>;

#define CHECK_ABS(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))

TEST_CASE("normalization strips only negligible leading-order terms") {
  Polynomial p{1.0, 2.0, 1e-20};
  CHECK(p.degree() == 1);

  Polynomial z{0.0, 0.0, 0.0};
  CHECK(z.degree() == 0);
  CHECK(z.is_zero());

  // A tiny constant is tiny relative to nothing — it stays.
  Polynomial tiny{1e-20};
  CHECK(tiny.degree() == 0);
  CHECK_FALSE(tiny.is_zero());

  // Out-of-range index reads as zero.
  CHECK(p[7] == 0.0);
}

TEST_CASE("Horner evaluation at a complex point") {
  // 1 - 2x + 3x^2 at x = 1+2i: 3(1+2i)^2 = -9+12i, total -10+8i.
  Polynomial p{1.0, -2.0, 3.0};
  cplx v = p(cplx(1.0, 2.0));
  CHECK_ABS(v.real(), -10.0, 1e-12);
  CHECK_ABS(v.imag(), 8.0, 1e-12);
  CHECK(p(2.0) == 9.0);
}

TEST_CASE("ring operations") {
  Polynomial a{1.0, 1.0};   // 1 + x
  Polynomial b{1.0, -1.0};  // 1 - x
  Polynomial prod = a * b;  // 1 - x^2
  CHECK(prod.degree() == 2);
  CHECK(prod[0] == 1.0);
  CHECK(prod[1] == 0.0);
  CHECK(prod[2] == -1.0);

  Polynomial s = a + b;
  CHECK(s.degree() == 0);
  CHECK(s[0] == 2.0);

  // Subtraction that cancels the top power must renormalize the degree.
  Polynomial c{1.0, 0.0, 1.0};
  Polynomial d{0.0, 2.0, 1.0};
  Polynomial e = c - d;
  CHECK(e.degree() == 1);
  CHECK(e[0] == 1.0);
  CHECK(e[1] == -2.0);

  Polynomial self = c - c;
  CHECK(self.is_zero());

  Polynomial scaled = a * 3.0;
  CHECK(scaled[0] == 3.0);
  CHECK(scaled[1] == 3.0);
}

TEST_CASE("derivative") {
  Polynomial p{1.0, 2.0, 3.0};
  Polynomial d = p.derivative();
  CHECK(d.degree() == 1);
  CHECK(d[0] == 2.0);
  CHECK(d[1] == 6.0);

  CHECK(Polynomial{5.0}.derivative().is_zero());
}

TEST_CASE("from_roots rebuilds real coefficients") {
  std::vector<cplx> roots{{0.5, 0.0}, {-0.25, 0.0}};
  Polynomial p = Polynomial::from_roots(roots, 2.0);
  // 2(x - 0.5)(x + 0.25) = 2x^2 - 0.5x - 0.25
  CHECK_ABS(p[0], -0.25, 1e-15);
  CHECK_ABS(p[1], -0.5, 1e-15);
  CHECK_ABS(p[2], 2.0, 1e-15);

  std::vector<cplx> pair{{0.3, 0.4}, {0.3, -0.4}};
  Polynomial q = Polynomial::from_roots(pair);
  // x^2 - 0.6x + 0.25
  CHECK_ABS(q[0], 0.25, 1e-15);
  CHECK_ABS(q[1], -0.6, 1e-15);
  CHECK_ABS(q[2], 1.0, 1e-15);
}

TEST_CASE("roots: closed forms") {
  CHECK_THROWS_AS((void)Polynomial{3.0}.roots(), dcs::Degenerate);

  auto lin = Polynomial{-1.5, 3.0}.roots();
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == cplx(0.5, 0.0));

  // Exact zero constant term peels an exact origin root.
  auto zr = Polynomial{0.0, -1.0, 1.0}.roots();  // x^2 - x
  REQUIRE(zr.size() == 2);
  CHECK(zr[0] == cplx(0.0, 0.0));
  CHECK(zr[1] == cplx(1.0, 0.0));

  // Well-separated quadratic.
  Polynomial quad = Polynomial{-1.0, 1.0} * Polynomial{-0.9248811834911439, 1.0};
  auto qr = quad.roots();
  REQUIRE(qr.size() == 2);
  CHECK_ABS(qr[0].real(), 0.9248811834911439, 1e-13);
  CHECK_ABS(qr[1].real(), 1.0, 1e-13);
  CHECK_ABS(qr[0].imag(), 0.0, 1e-15);

  // Complex pair.
  auto cr = Polynomial{0.25, -0.6, 1.0}.roots();
  REQUIRE(cr.size() == 2);
  CHECK_ABS(cr[0].real(), 0.3, 1e-13);
  CHECK_ABS(cr[0].imag(), -0.4, 1e-13);
  CHECK_ABS(cr[1].imag(), 0.4, 1e-13);
}

TEST_CASE("roots: companion path, random stable sets round-trip") {
  std::mt19937 rng(20240901);
  std::uniform_real_distribution<double> mag(0.05, 0.95);
  std::uniform_real_distribution<double> ang(0.1, 3.0);
  std::uniform_int_distribution<int> pairs(0, 2);
  std::uniform_int_distribution<int> reals(1, 3);

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> roots;
    int np = pairs(rng), nr = reals(rng);
    if (2 * np + nr < 3) nr = 3 - 2 * np;  // force the eigensolve path
    for (int i = 0; i < np; ++i) {
      cplx r = std::polar(mag(rng), ang(rng));
      roots.push_back(r);
      roots.push_back(std::conj(r));
    }
    for (int i = 0; i < nr; ++i)
      roots.push_back(cplx(mag(rng) * (i % 2 ? -1.0 : 1.0), 0.0));

    Polynomial p = Polynomial::from_roots(roots);
    auto found = p.roots();
    REQUIRE(found.size() == roots.size());

    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK_ABS(found[i].real(), roots[i].real(), 1e-7);
      CHECK_ABS(found[i].imag(), roots[i].imag(), 1e-7);
    }
    // Residual check: the polynomial really vanishes there.
    for (const auto& r : found)
      CHECK(std::abs(p(r)) <= 1e-10 * p.max_abs_coeff());
  }
}

TEST_CASE("roots: double root accuracy degrades gracefully") {
  // (x - 0.5)^2 (x + 0.25): the clustered pair is good to ~sqrt(eps).
  std::vector<cplx> rs{{0.5, 0.0}, {0.5, 0.0}, {-0.25, 0.0}};
  auto found = Polynomial::from_roots(rs).roots();
  REQUIRE(found.size() == 3);
  CHECK_ABS(found[0].real(), -0.25, 1e-10);
  CHECK_ABS(found[1].real(), 0.5, 1e-6);
  CHECK_ABS(found[2].real(), 0.5, 1e-6);
}

TEST_CASE("roots are sorted by real part then imaginary part") {
  std::vector<cplx> rs{{0.9, 0.0}, {-0.3, 0.0}, {0.2, 0.5}, {0.2, -0.5}};
  auto found = Polynomial::from_roots(rs).roots();
  REQUIRE(found.size() == 4);
  for (std::size_t i = 1; i < found.size(); ++i) {
    bool ordered = found[i - 1].real() < found[i].real() ||
                   (found[i - 1].real() == found[i].real() &&
                    found[i - 1].imag() <= found[i].imag());
    CHECK(ordered);
  }
}
