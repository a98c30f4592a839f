#ifndef POLYLOG_TENSOR_HPP
#define POLYLOG_TENSOR_HPP

#include "polylog/numerics.hpp"

#include <vector>

namespace polylog {

// Words over the alphabet {X0, X1} of length len <= trunc are indexed by
// (1 << len) + bits, with the first letter at the most significant bit.
// Appending a letter is idx*2 + letter; index 1 is the empty word.
namespace words {

inline std::size_t index(unsigned len, unsigned bits) { return (std::size_t(1) << len) + bits; }
inline unsigned length(std::size_t idx) {
  unsigned len = 0;
  while (idx >> (len + 1)) ++len;
  return len;
}
inline unsigned bits(std::size_t idx) { return static_cast<unsigned>(idx - (std::size_t(1) << length(idx))); }
inline std::size_t prefix(std::size_t idx, unsigned cut) {
  unsigned len = length(idx);
  return index(cut, bits(idx) >> (len - cut));
}
inline std::size_t suffix(std::size_t idx, unsigned cut) {
  unsigned len = length(idx);
  return index(len - cut, bits(idx) & ((1u << (len - cut)) - 1));
}
std::string name(std::size_t idx);  // e.g. "X0 X1 X1"

}  // namespace words

/// Element of the degree-truncated free associative algebra on X0, X1.
/// Instantiated with exact rational coefficients for algebraic identities
/// and with Complex coefficients for transport series.
template <class C>
struct TensorSeries {
  unsigned trunc = 0;
  std::vector<C> coeff;  // dense over word indices, size 2^{trunc+1}

  TensorSeries() = default;
  explicit TensorSeries(unsigned m) : trunc(m), coeff(std::size_t(1) << (m + 1)) {}

  C& operator[](std::size_t idx) { return coeff[idx]; }
  const C& operator[](std::size_t idx) const { return coeff[idx]; }

  static TensorSeries unit(unsigned m) {
    TensorSeries s(m);
    s.coeff[1] = C(1);
    return s;
  }
  static TensorSeries generator(unsigned m, unsigned which) {
    TensorSeries s(m);
    s.coeff[words::index(1, which)] = C(1);
    return s;
  }

  TensorSeries& operator+=(const TensorSeries& o);
  TensorSeries& operator-=(const TensorSeries& o);
  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  TensorSeries scaled(const C& s) const;

  C constant_term() const { return coeff[1]; }
  bool is_zero() const;
  /// Coefficients of the degree-d graded piece, indexed by bits.
  std::vector<C> graded_piece(unsigned d) const;
};

using TensorSeriesQ = TensorSeries<Rational>;
using TensorSeriesC = TensorSeries<Complex>;

template <class C>
TensorSeries<C> concat_product(const TensorSeries<C>& a, const TensorSeries<C>& b);

template <class C>
TensorSeries<C> commutator(const TensorSeries<C>& a, const TensorSeries<C>& b);

/// log of a series with constant term 1 (truncated).
template <class C>
TensorSeries<C> series_log(const TensorSeries<C>& a);

/// exp of a series with constant term 0 (truncated).
template <class C>
TensorSeries<C> series_exp(const TensorSeries<C>& a);

/// Degree-truncated coproduct table: coefficient of u (x) v at
/// table[u * stride + v], where Delta is the algebra map with
/// Delta(X) = 1 (x) X + X (x) 1 on generators (deshuffle on words).
template <class C>
struct CoproductTable {
  unsigned trunc = 0;
  std::size_t stride = 0;
  std::vector<C> table;
  const C& at(std::size_t u, std::size_t v) const { return table[u * stride + v]; }
};

template <class C>
CoproductTable<C> coproduct(const TensorSeries<C>& a);

/// Max |Delta a - a (x) a| coefficient over pairs with |u|+|v| <= trunc.
template <class C>
Real is_grouplike(const TensorSeries<C>& a);

/// Max |Delta a - 1 (x) a - a (x) 1| coefficient.
template <class C>
Real is_primitive(const TensorSeries<C>& a);

Real coeff_abs(const Rational& q);
Real coeff_abs(const Complex& z);

extern template struct TensorSeries<Rational>;
extern template struct TensorSeries<Complex>;

}  // namespace polylog

#endif
