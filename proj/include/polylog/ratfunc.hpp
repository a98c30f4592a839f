#ifndef POLYLOG_RATFUNC_HPP
#define POLYLOG_RATFUNC_HPP

#include "polylog/numerics.hpp"

#include <optional>
#include <vector>

namespace polylog {

/// Polynomial in one variable t with exact rational coefficients,
/// coefficient of t^k at index k.  The zero polynomial has empty storage.
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  Poly(std::initializer_list<Rational> cs) : c(cs) { trim(); }
  static Poly constant(const Rational& v);
  static Poly variable();  // t

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational lead() const { return c.empty() ? Rational(0) : c.back(); }
  void trim();

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& s) const;

  Rational eval(const Rational& x) const;
  Complex eval(const Complex& x) const;
  Poly derivative() const;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic gcd

  bool operator==(const Poly& o) const { return c == o.c; }
};

/// Valuation point of Q(t): a rational number or the place at infinity.
struct ValuationPoint {
  std::optional<Rational> finite;  // nullopt = infinity

  ValuationPoint() = default;
  explicit ValuationPoint(Rational a) : finite(std::move(a)) {}
  static ValuationPoint infinity() { return ValuationPoint(); }
  bool is_infinite() const { return !finite.has_value(); }

  /// "p/q", integer, or "inf".
  static ValuationPoint parse(const std::string& text);
  std::string str() const;

  bool operator==(const ValuationPoint& o) const { return finite == o.finite; }
};

/// Element of Q(t), stored coprime with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
  RationalFunction(Poly num, Poly den);
  static RationalFunction constant(const Rational& v);
  static RationalFunction variable();

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction pow(long e) const;

  Rational eval(const Rational& x) const;   // throws on pole
  Complex eval(const Complex& x) const;     // throws on pole
  /// Value at the infinite place; requires ord_inf >= 0 (0 gives the finite
  /// leading ratio, > 0 gives 0).
  Rational eval_at_infinity() const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

/// Parses polynomial/rational-function expressions over t with integer or
/// parenthesized rational coefficients, e.g. "t^2 - 1", "(3/2)t^3 + t - 5",
/// "t/(t-1)", "(t+1)(t+2)", "2(t-1)^2/(t+3)".
RationalFunction parse_rational_function(const std::string& text);

/// Order of vanishing of f at the valuation point (negative at poles);
/// ord_inf = deg denominator - deg numerator.  Throws on the zero function.
int order_at(const RationalFunction& f, const ValuationPoint& p);

/// Tame symbol (-1)^{v(f)v(g)} f^{v(g)}/g^{v(f)} evaluated in the residue
/// field at p; exact value in Q^*.
Rational tame_symbol(const RationalFunction& f, const RationalFunction& g,
                     const ValuationPoint& p);

/// Rational zero/pole support of f with multiplicities (finite places only).
/// Throws std::domain_error if the numerator or denominator has a
/// non-rational root.
std::vector<std::pair<Rational, int>> rational_support(const RationalFunction& f);

/// All rational roots of p with multiplicities; the returned boolean is
/// false if a non-rational factor remains.
std::pair<std::vector<std::pair<Rational, int>>, bool> rational_roots(const Poly& p);

}  // namespace polylog

#endif
