#ifndef POLYLOG_MATRICES_HPP
#define POLYLOG_MATRICES_HPP

#include "polylog/numerics.hpp"

#include <vector>

namespace polylog {

/// Dense complex matrix, sized for the small systems in this library.
struct CMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Complex& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t r, std::size_t c) { return CMatrix(r, c); }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix scaled(const Complex& s) const;

  Real max_abs() const;
  bool is_upper_triangular() const;
};

Real max_abs_diff(const CMatrix& x, const CMatrix& y);

/// Inverse of an upper-triangular matrix by back substitution.
CMatrix upper_triangular_inverse(const CMatrix& m);

/// exp(N) for nilpotent N (finite series; throws if N^rows != 0 numerically).
CMatrix exp_nilpotent(const CMatrix& n);

/// (n+1)x(n+1) matrix with exact rational entries.  `twist` is a global
/// scalar power of 2 pi i: the numeric value of the matrix is
/// (2 pi i)^twist * entries.  Monodromy matrices carry twist 0; local
/// monodromy logarithms N_P = log(T_P)/(2 pi i) carry twist -1.
struct ExactMatrix {
  std::size_t n = 0;  // dimension
  int twist = 0;
  std::vector<Rational> a;

  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim, int tw = 0) : n(dim), twist(tw), a(dim * dim) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static ExactMatrix identity(std::size_t dim);

  ExactMatrix operator*(const ExactMatrix& o) const;  // requires equal twist-free use
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Rational& s) const;

  bool operator==(const ExactMatrix& o) const { return n == o.n && twist == o.twist && a == o.a; }

  bool is_zero() const;
  bool is_nilpotent() const;
  bool is_unipotent() const;  // (M - I)^n == 0

  /// Exact inverse by Gauss-Jordan elimination; throws on singular input.
  ExactMatrix inverse() const;

  /// Numeric matrix at the current default precision, including the twist
  /// factor (2 pi i)^twist.
  CMatrix to_numeric() const;
};

/// log(M) for unipotent M, as a finite series (exact).
ExactMatrix log_unipotent(const ExactMatrix& m);
/// exp(N) for nilpotent N (exact; the twist field must be 0).
ExactMatrix exp_nilpotent(const ExactMatrix& n);

}  // namespace polylog

#endif
