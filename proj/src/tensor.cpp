#include "polylog/tensor.hpp"

namespace polylog {

namespace words {

std::string name(std::size_t idx) {
  unsigned len = length(idx);
  if (len == 0) return "1";
  unsigned b = bits(idx);
  std::string s;
  for (unsigned i = 0; i < len; ++i) {
    if (!s.empty()) s += ' ';
    s += ((b >> (len - 1 - i)) & 1) ? "X1" : "X0";
  }
  return s;
}

}  // namespace words

Real coeff_abs(const Rational& q) {
  Real num(boost::multiprecision::abs(numerator(q)));
  Real den(denominator(q));
  return num / den;
}

Real coeff_abs(const Complex& z) { return abs(z); }

namespace {

Rational inverse_of(const Rational& q) { return Rational(1) / q; }
Complex inverse_of(const Complex& z) { return inverse(z); }

}  // namespace

template <class C>
TensorSeries<C>& TensorSeries<C>::operator+=(const TensorSeries& o) {
  if (trunc != o.trunc) throw std::invalid_argument("TensorSeries: truncation mismatch");
  for (std::size_t i = 1; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
  return *this;
}

template <class C>
TensorSeries<C>& TensorSeries<C>::operator-=(const TensorSeries& o) {
  if (trunc != o.trunc) throw std::invalid_argument("TensorSeries: truncation mismatch");
  for (std::size_t i = 1; i < coeff.size(); ++i) coeff[i] -= o.coeff[i];
  return *this;
}

template <class C>
TensorSeries<C> TensorSeries<C>::scaled(const C& s) const {
  TensorSeries r = *this;
  for (std::size_t i = 1; i < r.coeff.size(); ++i) r.coeff[i] = r.coeff[i] * s;
  return r;
}

template <class C>
bool TensorSeries<C>::is_zero() const {
  for (std::size_t i = 1; i < coeff.size(); ++i)
    if (!coeff_abs(coeff[i]).is_zero()) return false;
  return true;
}

template <class C>
std::vector<C> TensorSeries<C>::graded_piece(unsigned d) const {
  std::vector<C> piece(std::size_t(1) << d);
  for (std::size_t b = 0; b < piece.size(); ++b) piece[b] = coeff[words::index(d, b)];
  return piece;
}

template <class C>
TensorSeries<C> concat_product(const TensorSeries<C>& a, const TensorSeries<C>& b) {
  if (a.trunc != b.trunc) throw std::invalid_argument("concat_product: truncation mismatch");
  TensorSeries<C> r(a.trunc);
  for (unsigned len = 0; len <= a.trunc; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t(1) << len); ++bits) {
      std::size_t w = words::index(len, bits);
      C acc(0);
      for (unsigned cut = 0; cut <= len; ++cut) {
        const C& x = a.coeff[words::prefix(w, cut)];
        const C& y = b.coeff[words::suffix(w, cut)];
        acc += x * y;
      }
      r.coeff[w] = acc;
    }
  }
  return r;
}

template <class C>
TensorSeries<C> commutator(const TensorSeries<C>& a, const TensorSeries<C>& b) {
  return concat_product(a, b) - concat_product(b, a);
}

template <class C>
TensorSeries<C> series_log(const TensorSeries<C>& a) {
  if (!(coeff_abs(a.constant_term() - C(1)).is_zero()))
    throw std::domain_error("series_log: constant term must be 1");
  TensorSeries<C> u = a;
  u.coeff[1] = C(0);
  // log(1+u) = sum (-1)^{k+1} u^k / k, truncated at degree trunc.
  TensorSeries<C> acc(a.trunc);
  TensorSeries<C> power = TensorSeries<C>::unit(a.trunc);
  for (unsigned k = 1; k <= a.trunc; ++k) {
    power = concat_product(power, u);
    C c = (k % 2 == 1) ? C(1) : C(-1);
    acc += power.scaled(c * inverse_of(C(static_cast<int>(k))));
  }
  return acc;
}

template <class C>
TensorSeries<C> series_exp(const TensorSeries<C>& a) {
  if (!coeff_abs(a.constant_term()).is_zero())
    throw std::domain_error("series_exp: constant term must be 0");
  TensorSeries<C> acc = TensorSeries<C>::unit(a.trunc);
  TensorSeries<C> power = TensorSeries<C>::unit(a.trunc);
  C fact(1);
  for (unsigned k = 1; k <= a.trunc; ++k) {
    power = concat_product(power, a);
    fact = fact * C(static_cast<int>(k));
    acc += power.scaled(inverse_of(fact));
  }
  return acc;
}

template <class C>
CoproductTable<C> coproduct(const TensorSeries<C>& a) {
  if (a.trunc > 8)
    throw std::invalid_argument("coproduct: table materialization capped at degree 8");
  CoproductTable<C> t;
  t.trunc = a.trunc;
  t.stride = std::size_t(1) << (a.trunc + 1);
  t.table.assign(t.stride * t.stride, C(0));
  for (unsigned len = 0; len <= a.trunc; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t(1) << len); ++bits) {
      std::size_t w = words::index(len, bits);
      const C& cw = a.coeff[w];
      if (coeff_abs(cw).is_zero()) continue;
      // Deshuffle: split the letter positions into a subset and complement.
      for (std::size_t subset = 0; subset < (std::size_t(1) << len); ++subset) {
        unsigned ubits = 0, vbits = 0, ulen = 0, vlen = 0;
        for (unsigned pos = 0; pos < len; ++pos) {
          unsigned letter = (bits >> (len - 1 - pos)) & 1;
          if ((subset >> pos) & 1) {
            ubits = (ubits << 1) | letter;
            ++ulen;
          } else {
            vbits = (vbits << 1) | letter;
            ++vlen;
          }
        }
        t.table[words::index(ulen, ubits) * t.stride + words::index(vlen, vbits)] += cw;
      }
    }
  }
  return t;
}

template <class C>
Real is_grouplike(const TensorSeries<C>& a) {
  CoproductTable<C> d = coproduct(a);
  Real worst = 0;
  for (unsigned lu = 0; lu <= a.trunc; ++lu)
    for (std::size_t bu = 0; bu < (std::size_t(1) << lu); ++bu)
      for (unsigned lv = 0; lu + lv <= a.trunc; ++lv)
        for (std::size_t bv = 0; bv < (std::size_t(1) << lv); ++bv) {
          std::size_t u = words::index(lu, bu), v = words::index(lv, bv);
          Real r = coeff_abs(d.at(u, v) - a.coeff[u] * a.coeff[v]);
          if (r > worst) worst = r;
        }
  return worst;
}

template <class C>
Real is_primitive(const TensorSeries<C>& a) {
  CoproductTable<C> d = coproduct(a);
  Real worst = 0;
  for (unsigned lu = 0; lu <= a.trunc; ++lu)
    for (std::size_t bu = 0; bu < (std::size_t(1) << lu); ++bu)
      for (unsigned lv = 0; lu + lv <= a.trunc; ++lv)
        for (std::size_t bv = 0; bv < (std::size_t(1) << lv); ++bv) {
          std::size_t u = words::index(lu, bu), v = words::index(lv, bv);
          C expect(0);
          if (u == 1) expect += a.coeff[v];
          if (v == 1) expect += a.coeff[u];
          Real r = coeff_abs(d.at(u, v) - expect);
          if (r > worst) worst = r;
        }
  return worst;
}

template struct TensorSeries<Rational>;
template struct TensorSeries<Complex>;

template TensorSeries<Rational> concat_product(const TensorSeries<Rational>&,
                                               const TensorSeries<Rational>&);
template TensorSeries<Complex> concat_product(const TensorSeries<Complex>&,
                                              const TensorSeries<Complex>&);
template TensorSeries<Rational> commutator(const TensorSeries<Rational>&,
                                           const TensorSeries<Rational>&);
template TensorSeries<Complex> commutator(const TensorSeries<Complex>&,
                                          const TensorSeries<Complex>&);
template TensorSeries<Rational> series_log(const TensorSeries<Rational>&);
template TensorSeries<Complex> series_log(const TensorSeries<Complex>&);
template TensorSeries<Rational> series_exp(const TensorSeries<Rational>&);
template TensorSeries<Complex> series_exp(const TensorSeries<Complex>&);
template CoproductTable<Rational> coproduct(const TensorSeries<Rational>&);
template CoproductTable<Complex> coproduct(const TensorSeries<Complex>&);
template Real is_grouplike(const TensorSeries<Rational>&);
template Real is_grouplike(const TensorSeries<Complex>&);
template Real is_primitive(const TensorSeries<Rational>&);
template Real is_primitive(const TensorSeries<Complex>&);

}  // namespace polylog
