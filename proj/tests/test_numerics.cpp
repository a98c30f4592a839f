#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polylog/numerics.hpp"

using namespace polylog;

namespace {

const PrecisionConfig kPrec{256, 1e-30};

Real rtol() { return Real("1e-30"); }

}  // namespace

TEST_CASE("precision config invariants") {
  CHECK_THROWS_AS(PrecisionConfig(32, 1e-10), std::domain_error);
  CHECK_THROWS_AS(PrecisionConfig(256, -1.0), std::domain_error);
  // 64 bits ~ 19 digits cannot certify 1e-30 with 2x guard digits.
  CHECK_THROWS_AS(PrecisionConfig(64, 1e-30), std::domain_error);
  CHECK_NOTHROW(PrecisionConfig(256, 1e-30));
}

TEST_CASE("complex arithmetic basics") {
  ScopedPrecision scope(kPrec);
  Complex a(Real(3), Real(4));
  CHECK(abs(a) == 5);
  Complex b = a * inverse(a);
  CHECK(fabs(b.re - 1) < rtol());
  CHECK(fabs(b.im) < rtol());

  // Principal branch: arg in (-pi, pi], negative axis maps to +pi.
  Complex minus_one(Real(-1), Real(0));
  CHECK(arg(minus_one) > 0);
  Complex l = log(minus_one);
  CHECK(fabs(l.re) < rtol());
  CHECK(fabs(l.im - pi_reference(kPrec)) < rtol());

  Complex e = exp(Complex(Real(0), pi_reference(kPrec)));
  CHECK(fabs(e.re + 1) < rtol());
}

TEST_CASE("complex literal parsing") {
  ScopedPrecision scope(kPrec);
  CHECK(parse_complex("1+2i") == Complex(Real(1), Real(2)));
  CHECK(parse_complex("-0.5") == Complex(Real(-0.5), Real(0)));
  CHECK(parse_complex("i") == Complex(Real(0), Real(1)));
  CHECK(parse_complex("-i") == Complex(Real(0), Real(-1)));
  CHECK(parse_complex("2.5-0.25i") == Complex(Real(2.5), Real(-0.25)));
  CHECK(parse_complex("1e-5") == Complex(Real("1e-5"), Real(0)));
  CHECK_THROWS_AS(parse_complex("zz"), std::invalid_argument);
}

TEST_CASE("series_polylog at k=1 matches -log(1-x)") {
  ScopedPrecision scope(kPrec);
  Complex half(Real(1) / 2, Real(0));
  Complex s = series_polylog(1, half, kPrec);
  Real log2 = log(Complex(Real(2), Real(0))).re;
  CHECK(fabs(s.re - log2) < rtol());
  CHECK(fabs(s.im) < rtol());

  Complex z(Real(1) / 4, Real(-3) / 8);
  Complex lhs = series_polylog(1, z, kPrec);
  Complex rhs = -log(Complex(Real(1), Real(0)) - z);
  CHECK(abs(lhs - rhs) < rtol());
}

TEST_CASE("series_polylog trivial and domain errors") {
  ScopedPrecision scope(kPrec);
  CHECK(series_polylog(5, Complex(Real(0), Real(0)), kPrec).is_zero());
  CHECK_THROWS_AS(series_polylog(2, Complex(Real(0.8), Real(0)), kPrec), std::domain_error);
  CHECK_THROWS_AS(series_polylog(0, Complex(Real(0.5), Real(0)), kPrec), std::invalid_argument);
}

TEST_CASE("series_polylog against brute-force partial sums") {
  ScopedPrecision scope(kPrec);
  // Naive summation oracle: 10^4 terms of sum x^n/n^2 at x = i/2.
  Complex x(Real(0), Real(1) / 2);
  Complex power(Real(1), Real(0));
  Complex brute(Real(0), Real(0));
  for (int n = 1; n <= 10000; ++n) {
    power *= x;
    brute += power * (1 / (Real(n) * Real(n)));
  }
  Complex s = series_polylog(2, x, kPrec);
  // |x| = 1/2, so 10^4 naive terms are accurate far beyond 1e-30.
  CHECK(abs(s - brute) < rtol());
}

TEST_CASE("series_polylog tail bound: doubling terms changes nothing") {
  PrecisionConfig tight(320, 1e-40);
  ScopedPrecision scope(tight);
  Complex x(Real(-5) / 8, Real(1) / 8);
  Complex a = series_polylog(3, x, tight);
  Complex b = series_polylog(3, x, PrecisionConfig(640, 1e-80));
  CHECK(abs(a - b) < Real("1e-40"));
}

TEST_CASE("zeta reference values") {
  ScopedPrecision scope(kPrec);
  Real pi = pi_reference(kPrec);
  CHECK(fabs(zeta_reference(2, kPrec) - pi * pi / 6) < rtol());
  CHECK(fabs(zeta_reference(4, kPrec) - pow(pi, 4) / 90) < rtol());
  // First 50 digits of zeta(3) (Apery's constant).
  Real zeta3("1.2020569031595942853997381615114499907649862923405");
  CHECK(fabs(zeta_reference(3, kPrec) - zeta3) < rtol());
  CHECK_THROWS_AS(zeta_reference(1, kPrec), std::invalid_argument);
}

TEST_CASE("catalan reference matches alternating series") {
  ScopedPrecision scope(kPrec);
  Real catalan("0.91596559417721901505460351493238411077414937428167");
  CHECK(fabs(catalan_reference(kPrec) - catalan) < rtol());

  // Independent check: directly sum the alternating series with a
  // two-term pairing to 2*10^4 terms (error ~ 1e-13), coarse agreement.
  Real brute = 0;
  for (long m = 0; m < 20000; m += 2) {
    brute += 1 / (Real(2 * m + 1) * Real(2 * m + 1));
    brute -= 1 / (Real(2 * m + 3) * Real(2 * m + 3));
  }
  CHECK(fabs(catalan_reference(kPrec) - brute) < Real("1e-8"));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_number(13) == 0);
}
