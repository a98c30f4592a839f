#include "polylog/ratfunc.hpp"

#include <cctype>
#include <sstream>

namespace polylog {

Poly Poly::constant(const Rational& v) {
  Poly p;
  if (v != 0) p.c.push_back(v);
  return p;
}

Poly Poly::variable() {
  Poly p;
  p.c = {Rational(0), Rational(1)};
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < c.size()) r.c[i] += c[i];
    if (i < o.c.size()) r.c[i] += o.c[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < c.size()) r.c[i] += c[i];
    if (i < o.c.size()) r.c[i] -= o.c[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c.assign(c.size() + o.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Poly::eval(const Complex& x) const {
  Complex acc(Real(0), Real(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_complex(*it);
  return acc;
}

Poly Poly::derivative() const {
  Poly r;
  if (c.size() <= 1) return r;
  r.c.resize(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Rational(static_cast<long>(i));
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  Poly rem = a;
  Poly quot;
  if (rem.degree() >= b.degree()) quot.c.assign(rem.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational f = rem.lead() / b.lead();
    quot.c[shift] += f;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[i + shift] -= f * b.c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.lead() != 1) a = a.scaled(Rational(1) / a.lead());
  return a;
}

ValuationPoint ValuationPoint::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "inf" || s == "oo" || s == "infinity") return infinity();
  try {
    return ValuationPoint(Rational(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("ValuationPoint: bad literal '" + text + "'");
  }
}

std::string ValuationPoint::str() const {
  if (is_infinite()) return "inf";
  std::ostringstream os;
  os << *finite;
  return os.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rational lead = den_.lead();
  if (lead != 1) {
    den_ = den_.scaled(Rational(1) / lead);
    num_ = num_.scaled(Rational(1) / lead);
  }
}

RationalFunction RationalFunction::constant(const Rational& v) {
  return RationalFunction(Poly::constant(v), Poly::constant(1));
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Poly::variable(), Poly::constant(1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(num_.scaled(Rational(-1)), den_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return constant(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("RationalFunction: 0^negative");
    return *this;
  }
  RationalFunction base = e > 0 ? *this : constant(1) / *this;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  RationalFunction acc = constant(1);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("RationalFunction::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

Complex RationalFunction::eval(const Complex& x) const {
  Complex d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RationalFunction::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

Rational RationalFunction::eval_at_infinity() const {
  int ord = den_.degree() - num_.degree();
  if (ord < 0) throw std::domain_error("RationalFunction: pole at infinity");
  if (ord > 0) return 0;
  return num_.lead() / den_.lead();
}

std::string RationalFunction::str() const {
  auto poly_str = [](const Poly& p) {
    if (p.is_zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const Rational& ck = p.c[k];
      if (ck == 0) continue;
      Rational mag = ck < 0 ? Rational(-ck) : ck;
      if (first) {
        if (ck < 0) os << "-";
        first = false;
      } else {
        os << (ck < 0 ? " - " : " + ");
      }
      bool unit = (mag == 1) && k > 0;
      if (!unit) {
        if (boost::multiprecision::denominator(mag) == 1)
          os << boost::multiprecision::numerator(mag);
        else
          os << "(" << mag << ")";
      }
      if (k > 0) os << "t";
      if (k > 1) os << "^" << k;
    }
    return os.str();
  };
  if (den_.degree() == 0 && den_.lead() == 1) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

// --------------------------------------------------------------------------
// Expression parser: +, -, *, /, ^, parentheses, the variable t, integer
// literals, and implicit multiplication by juxtaposition.
// --------------------------------------------------------------------------

namespace {

struct RfParser {
  const std::string& s;
  std::size_t i = 0;

  explicit RfParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  RationalFunction parse_expr() {
    RationalFunction acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++i;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction parse_term() {
    RationalFunction acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i;
        acc = acc * parse_factor();
      } else if (c == '/') {
        ++i;
        acc = acc / parse_factor();
      } else if (c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * parse_factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  RationalFunction parse_factor() {
    char c = peek();
    if (c == '-') {
      ++i;
      return -parse_factor();
    }
    if (c == '+') {
      ++i;
      return parse_factor();
    }
    RationalFunction base = parse_atom();
    if (peek() == '^') {
      ++i;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++i;
      }
      long e = parse_integer();
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction parse_atom() {
    char c = peek();
    if (c == '(') {
      ++i;
      RationalFunction inner = parse_expr();
      if (peek() != ')') throw std::invalid_argument("rational function: missing ')'");
      ++i;
      return inner;
    }
    if (c == 't') {
      ++i;
      return RationalFunction::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RationalFunction::constant(Rational(parse_integer()));
    throw std::invalid_argument("rational function: unexpected character");
  }

  long parse_integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("rational function: expected integer");
    return std::stol(s.substr(start, i - start));
  }
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
  RfParser p(text);
  RationalFunction r = p.parse_expr();
  if (!p.eof())
    throw std::invalid_argument("rational function: trailing characters in '" + text + "'");
  return r;
}

namespace {

int root_multiplicity(const Poly& p, const Rational& a) {
  // Count factors (t - a) by repeated synthetic division.
  Poly q = p;
  Poly lin;
  lin.c = {Rational(-a), Rational(1)};
  int mult = 0;
  while (!q.is_zero() && q.eval(a) == 0) {
    q = Poly::divmod(q, lin).first;
    ++mult;
  }
  return mult;
}

}  // namespace

int order_at(const RationalFunction& f, const ValuationPoint& p) {
  if (f.is_zero()) throw std::domain_error("order_at: zero function");
  if (p.is_infinite()) return f.denominator().degree() - f.numerator().degree();
  return root_multiplicity(f.numerator(), *p.finite) -
         root_multiplicity(f.denominator(), *p.finite);
}

Rational tame_symbol(const RationalFunction& f, const RationalFunction& g,
                     const ValuationPoint& p) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("tame_symbol: zero function");
  long vf = order_at(f, p);
  long vg = order_at(g, p);
  // (-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)} has valuation 0 at p; evaluate it.
  RationalFunction unit = f.pow(vg) / g.pow(vf);
  Rational value = p.is_infinite() ? unit.eval_at_infinity() : unit.eval(*p.finite);
  if ((vf * vg) % 2 != 0) value = -value;
  return value;
}

std::pair<std::vector<std::pair<Rational, int>>, bool> rational_roots(const Poly& p) {
  std::vector<std::pair<Rational, int>> roots;
  if (p.is_zero() || p.degree() == 0) return {roots, true};
  Poly q = p;
  // Clear denominators to get integer coefficients for the root search.
  Integer lcm = 1;
  for (const auto& ck : q.c) lcm = boost::multiprecision::lcm(lcm, denominator(ck));
  std::vector<Integer> ic(q.c.size());
  for (std::size_t k = 0; k < q.c.size(); ++k)
    ic[k] = numerator(q.c[k]) * (lcm / denominator(q.c[k]));
  // Candidate roots r/s: r | ic[0 nonzero], s | lead.
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  Integer a0 = boost::multiprecision::abs(ic[low]);
  Integer an = boost::multiprecision::abs(ic.back());
  if (low > 0) {
    roots.emplace_back(Rational(0), static_cast<int>(low));
    Poly shift;
    shift.c = {Rational(0), Rational(1)};
    for (std::size_t k = 0; k < low; ++k) q = Poly::divmod(q, shift).first;
  }
  auto divisors = [](const Integer& n) {
    std::vector<Integer> ds;
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    }
    return ds;
  };
  for (const Integer& r : divisors(a0)) {
    for (const Integer& sden : divisors(an)) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        Rational cand(sign * r, sden);
        int mult = root_multiplicity(q, cand);
        if (mult > 0) {
          roots.emplace_back(cand, mult);
          Poly lin;
          lin.c = {Rational(-cand), Rational(1)};
          for (int m = 0; m < mult; ++m) q = Poly::divmod(q, lin).first;
        }
      }
    }
  }
  return {roots, q.degree() == 0};
}

std::vector<std::pair<Rational, int>> rational_support(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("rational_support: zero function");
  auto [num_roots, num_ok] = rational_roots(f.numerator());
  auto [den_roots, den_ok] = rational_roots(f.denominator());
  if (!num_ok || !den_ok)
    throw std::domain_error(
        "rational_support: function has zeros or poles outside Q "
        "(only rational support is implemented)");
  std::vector<std::pair<Rational, int>> support = num_roots;
  for (auto& [a, m] : den_roots) {
    bool merged = false;
    for (auto& [b, mb] : support)
      if (a == b) {
        mb -= m;
        merged = true;
        break;
      }
    if (!merged) support.emplace_back(a, -m);
  }
  std::erase_if(support, [](const auto& pr) { return pr.second == 0; });
  return support;
}

}  // namespace polylog
