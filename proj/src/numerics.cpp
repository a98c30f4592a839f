#include "polylog/numerics.hpp"

#include <boost/math/constants/constants.hpp>

#include <mutex>
#include <sstream>
#include <vector>

namespace polylog {

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
  if (z.im.is_zero() && z.re < 0) return boost::math::constants::pi<Real>();
  return atan2(z.im, z.re);
}

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return Complex(m * cos(z.im), m * sin(z.im));
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw std::domain_error("log: argument is zero");
  return Complex(boost::multiprecision::log(abs(z)), arg(z));
}

Complex inverse(const Complex& z) {
  Real d = norm(z);
  return Complex(z.re / d, -z.im / d);
}

Complex pow_int(const Complex& z, long k) {
  if (k < 0) return inverse(pow_int(z, -k));
  Complex acc(Real(1), Real(0));
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Complex i_pi() { return Complex(Real(0), boost::math::constants::pi<Real>()); }

Complex two_pi_i() { return Complex(Real(0), 2 * boost::math::constants::pi<Real>()); }

Complex to_complex(const Rational& q) {
  Real num(numerator(q));
  Real den(denominator(q));
  return Complex(num / den, Real(0));
}

std::string to_string(const Real& x, unsigned digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Complex& z, unsigned digits) {
  std::string s = to_string(z.re, digits);
  if (z.im.is_zero()) return s;
  std::string t = to_string(boost::multiprecision::abs(z.im), digits);
  return s + (z.im < 0 ? " - " : " + ") + t + "*i";
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_complex: empty literal");

  // Locate the sign that separates the real and imaginary parts, if any.
  // Signs inside exponents (e.g. 1e-5) do not count.
  auto is_split_sign = [&](std::size_t i) {
    if (i == 0) return false;
    char p = s[i - 1];
    return p != 'e' && p != 'E';
  };
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && is_split_sign(i)) {
      split = i;
      break;
    }
  }

  auto parse_real_part = [](const std::string& part) -> Real {
    if (part.empty() || part == "+") return Real(1);
    if (part == "-") return Real(-1);
    return Real(part);
  };

  try {
    if (!s.empty() && s.back() == 'i') {
      if (split == std::string::npos) {
        return Complex(Real(0), parse_real_part(s.substr(0, s.size() - 1)));
      }
      std::string re_part = s.substr(0, split);
      std::string im_part = s.substr(split, s.size() - split - 1);
      return Complex(Real(re_part), parse_real_part(im_part));
    }
    return Complex(Real(s), Real(0));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_complex: bad literal '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// Series and reference constants
// ---------------------------------------------------------------------------

Complex series_polylog(int k, const Complex& x, const PrecisionConfig& prec) {
  if (k < 1) throw std::invalid_argument("series_polylog: k must be >= 1");
  ScopedPrecision scope(prec);
  Real r = abs(x);
  if (r > Real(3) / 4) throw std::domain_error("series_polylog: |x| > 3/4");
  Complex sum(Real(0), Real(0));
  if (x.is_zero()) return sum;

  Real tol = prec.tol();
  Real one_minus_r = 1 - r;
  Complex power(Real(1), Real(0));
  Real rpow = 1;
  for (unsigned long n = 1;; ++n) {
    power *= x;
    rpow *= r;
    Real nk = pow(Real(n), k);
    sum += power * (1 / nk);
    // Tail after N terms: |x|^{N+1} / ((N+1)^k (1-|x|)).
    Real tail = rpow * r / (pow(Real(n + 1), k) * one_minus_r);
    if (tail < tol) break;
    if (n > 100000)
      throw convergence_error("series_polylog: tail bound not reached");
  }
  return sum;
}

namespace {

// Bernoulli cache, filled once up to index 256 (enough for any precision the
// Euler-Maclaurin engine accepts; J is bounded well below this by the N
// growth policy).
constexpr unsigned kMaxBernoulli = 256;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kMaxBernoulli + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= kMaxBernoulli; ++m) {
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      Rational acc = 0;
      Integer binom = 1;  // C(m+1, 0)
      for (unsigned j = 0; j < m; ++j) {
        acc += Rational(binom) * b[j];
        binom = binom * Integer(m + 1 - j) / Integer(j + 1);
      }
      b[m] = -acc / Rational(binom);
      if (m > 1 && (m & 1)) b[m] = 0;
    }
    return b;
  }();
  return table;
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  if (n > kMaxBernoulli) throw std::invalid_argument("bernoulli_number: index too large");
  return bernoulli_table()[n];
}

Real hurwitz_zeta(int s, const Rational& a, const PrecisionConfig& prec) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta: s must be >= 2");
  if (!(a > 0) || a > 1) throw std::domain_error("hurwitz_zeta: a must lie in (0,1]");
  ScopedPrecision scope(prec);
  Real tol = prec.tol() / 8;
  Real ar = to_complex(a).re;

  unsigned n_terms = std::max<unsigned>(16, prec.decimal_digits());
  for (int attempt = 0; attempt < 6; ++attempt) {
    // Direct part: sum_{n=0}^{N-1} (n+a)^{-s}
    Real direct = 0;
    for (unsigned n = 0; n < n_terms; ++n) direct += pow(ar + n, -s);

    Real base = ar + n_terms;  // N + a
    Real result = direct + pow(base, 1 - s) / (s - 1) + pow(base, -s) / 2;

    // Correction terms: B_{2j}/(2j)! * (s)_{2j-1} * (N+a)^{-s-2j+1}.
    // The summand is completely monotone, so the remainder is bounded by
    // the first omitted term.
    Rational poch = s;            // rising factorial (s)_{2j-1}
    Rational fact = 1;            // (2j)!
    Real base_pow = pow(base, -s - 1);
    Real inv_base2 = 1 / (base * base);
    bool converged = false;
    for (unsigned j = 1; 2 * j + 2 <= kMaxBernoulli; ++j) {
      fact *= Rational(2 * j - 1) * Rational(2 * j);
      if (j > 1) poch *= Rational(s + 2 * (j - 1) - 1) * Rational(s + 2 * (j - 1));
      Rational coeff = bernoulli_number(2 * j) / fact * poch;
      Real term = to_complex(coeff).re * base_pow;
      Real mag = fabs(term);
      if (mag < tol) {
        converged = true;
        result += term;
        break;
      }
      result += term;
      base_pow *= inv_base2;
      // Detect the divergent regime of the asymptotic series.
      Real next_scale = mag * Real(2 * j + 1) * Real(2 * j + 2) / (base * base);
      if (next_scale > mag && mag > tol) break;
    }
    if (converged) return result;
    n_terms *= 2;
  }
  throw convergence_error("hurwitz_zeta: Euler-Maclaurin tail did not converge");
}

Real zeta_reference(int k, const PrecisionConfig& prec) {
  if (k < 2) throw std::invalid_argument("zeta_reference: k must be >= 2");
  return hurwitz_zeta(k, Rational(1), prec);
}

Real pi_reference(const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  return boost::math::constants::pi<Real>();
}

Real catalan_reference(const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  // sum (-1)^m (2m+1)^{-2} = (zeta(2,1/4) - zeta(2,3/4)) / 16
  Real a = hurwitz_zeta(2, Rational(1, 4), prec);
  Real b = hurwitz_zeta(2, Rational(3, 4), prec);
  return (a - b) / 16;
}

}  // namespace polylog
