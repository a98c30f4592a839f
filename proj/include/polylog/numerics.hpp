#ifndef POLYLOG_NUMERICS_HPP
#define POLYLOG_NUMERICS_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace polylog {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Thrown when a path runs closer to a singular point than the clearance
// rule allows.
struct singularity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when adaptive step control underflows or a series refuses to
// converge at the requested tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when the working precision cannot certify the requested tolerance
// (e.g. the t->0 residual estimate in the limit-period computation).
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2;
}

/// Lossy double view of an arbitrary-precision value (step-size heuristics).
inline double approx_double(const Real& x) { return x.convert_to<double>(); }

/// Working precision plus target output tolerance for one computation.
///
/// The tolerance is an absolute per-entry bound on the numeric outputs of
/// an operation; the working precision must leave enough guard digits to
/// reach it (at least twice the decimal digits the tolerance asks for).
struct PrecisionConfig {
  unsigned working_bits = 256;
  double target_tol = 1e-30;

  PrecisionConfig() = default;
  PrecisionConfig(unsigned bits, double tol) : working_bits(bits), target_tol(tol) {
    if (working_bits < 64)
      throw std::domain_error("PrecisionConfig: working_bits must be >= 64");
    if (!(target_tol > 0))
      throw std::domain_error("PrecisionConfig: target_tol must be positive");
    const double tol_digits = -std::log10(target_tol);
    if (working_bits * 0.30102999566398120 < 2.0 * tol_digits)
      throw std::domain_error(
          "PrecisionConfig: working precision leaves fewer than 2x guard digits "
          "for the requested tolerance");
  }

  unsigned decimal_digits() const { return digits_for_bits(working_bits); }
  Real tol() const { return Real(target_tol); }
  PrecisionConfig doubled() const { return PrecisionConfig(2 * working_bits, target_tol); }
};

// Sets the default mpfr precision for the current scope and restores the
// previous one on exit.  Every public operation installs one of these from
// its PrecisionConfig, so temporaries pick up the working precision.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(digits_for_bits(bits));
  }
  explicit ScopedPrecision(const PrecisionConfig& prec) : ScopedPrecision(prec.working_bits) {}
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Arbitrary-precision complex number.  Values are finite by construction;
/// the point at infinity is represented only by ProjectivePoint.
struct Complex {
  Real re{};
  Real im{};

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)) { im = 0; }
  explicit Complex(int r) { re = r; im = 0; }
  explicit Complex(long r) { re = r; im = 0; }
  explicit Complex(double r) { re = r; im = 0; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Complex operator-() const { return Complex(-re, -im); }
  Complex conj() const { return Complex(re, -im); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2

/// Principal argument in (-pi, pi].  Real zero imaginary parts (either sign)
/// on the negative real axis map to +pi.
Real arg(const Complex& z);

Complex exp(const Complex& z);
/// Principal branch: log|z| + i arg(z).
Complex log(const Complex& z);
Complex inverse(const Complex& z);
Complex pow_int(const Complex& z, long k);

/// i*pi at the current default precision.
Complex i_pi();
/// 2*pi*i at the current default precision.
Complex two_pi_i();

Complex to_complex(const Rational& q);
std::string to_string(const Real& x, unsigned digits);
std::string to_string(const Complex& z, unsigned digits);

/// Parses "a+bi" / "a-bi" / "a" / "bi" / "i" with decimal components at the
/// current default precision.
Complex parse_complex(const std::string& text);

// ---------------------------------------------------------------------------
// Series evaluation and reference constants.
//
// The reference constants below are oracles for the test suites.  They use
// Euler-Maclaurin accelerated summation (zeta, catalan) and the mpfr builtin
// pi and share no code with the transport/polylogarithm evaluation paths.
// ---------------------------------------------------------------------------

/// Truncated defining series sum_{n>=1} x^n / n^k, valid for |x| <= 3/4.
/// The tail bound |x|^{N+1} / ((N+1)^k (1-|x|)) is driven below target_tol.
Complex series_polylog(int k, const Complex& x, const PrecisionConfig& prec);

/// Hurwitz zeta(s, a) for integer s >= 2 and rational a in (0, 1], by
/// Euler-Maclaurin summation with exact Bernoulli coefficients.
Real hurwitz_zeta(int s, const Rational& a, const PrecisionConfig& prec);

/// zeta(k) for k >= 2.
Real zeta_reference(int k, const PrecisionConfig& prec);
/// pi (mpfr builtin constant).
Real pi_reference(const PrecisionConfig& prec);
/// Catalan constant via (zeta(2,1/4) - zeta(2,3/4)) / 16.
Real catalan_reference(const PrecisionConfig& prec);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli_number(unsigned n);

}  // namespace polylog

#endif
