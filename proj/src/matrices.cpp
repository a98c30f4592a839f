#include "polylog/matrices.hpp"

namespace polylog {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(Real(1), Real(0));
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("CMatrix: dimension mismatch");
  CMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Complex& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  CMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  CMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

CMatrix CMatrix::scaled(const Complex& s) const {
  CMatrix r = *this;
  for (auto& x : r.a) x *= s;
  return r;
}

Real CMatrix::max_abs() const {
  Real m = 0;
  for (const auto& x : a) m = std::max(m, abs(x));
  return m;
}

bool CMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < std::min(i, cols); ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

Real max_abs_diff(const CMatrix& x, const CMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  Real m = 0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, abs(x.a[i] - y.a[i]));
  return m;
}

CMatrix upper_triangular_inverse(const CMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("upper_triangular_inverse: not square");
  std::size_t n = m.rows;
  CMatrix r(n, n);
  for (std::size_t ii = n; ii-- > 0;) {
    std::size_t i = ii;
    if (m.at(i, i).is_zero())
      throw std::domain_error("upper_triangular_inverse: zero diagonal entry");
    Complex d = inverse(m.at(i, i));
    r.at(i, i) = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex s(Real(0), Real(0));
      for (std::size_t k = i + 1; k <= j; ++k) s += m.at(i, k) * r.at(k, j);
      r.at(i, j) = -(d * s);
    }
  }
  return r;
}

CMatrix exp_nilpotent(const CMatrix& n) {
  if (n.rows != n.cols) throw std::invalid_argument("exp_nilpotent: not square");
  CMatrix acc = CMatrix::identity(n.rows);
  CMatrix power = CMatrix::identity(n.rows);
  Real fact = 1;
  for (std::size_t k = 1; k <= n.rows; ++k) {
    power = power * n;
    if (power.max_abs().is_zero()) break;
    fact *= static_cast<unsigned>(k);
    acc = acc + power.scaled(Complex(1 / fact, Real(0)));
  }
  return acc;
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  ExactMatrix r(n, twist + o.twist);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (n != o.n || twist != o.twist)
    throw std::invalid_argument("ExactMatrix: twist/dimension mismatch in addition");
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (n != o.n || twist != o.twist)
    throw std::invalid_argument("ExactMatrix: twist/dimension mismatch in subtraction");
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& s) const {
  ExactMatrix r = *this;
  for (auto& x : r.a) x *= s;
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool ExactMatrix::is_nilpotent() const {
  ExactMatrix p = *this;
  p.twist = 0;
  ExactMatrix base = p;
  for (std::size_t k = 1; k < n; ++k) {
    if (p.is_zero()) return true;
    p = p * base;
  }
  return p.is_zero();
}

bool ExactMatrix::is_unipotent() const {
  ExactMatrix d = *this;
  d.twist = 0;
  return (d - ExactMatrix::identity(n)).is_nilpotent();
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix m = *this;
  ExactMatrix r = ExactMatrix::identity(n);
  r.twist = -twist;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("ExactMatrix::inverse: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(r.at(pivot, j), r.at(col, j));
      }
    Rational d = m.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) /= d;
      r.at(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        r.at(i, j) -= f * r.at(col, j);
      }
    }
  }
  return r;
}

CMatrix ExactMatrix::to_numeric() const {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = to_complex(at(i, j));
  if (twist != 0) {
    Complex f = pow_int(two_pi_i(), twist);
    m = m.scaled(f);
  }
  return m;
}

ExactMatrix log_unipotent(const ExactMatrix& m) {
  if (!m.is_unipotent()) throw std::domain_error("log_unipotent: matrix is not unipotent");
  ExactMatrix nil = m;
  nil.twist = 0;
  nil = nil - ExactMatrix::identity(m.n);
  ExactMatrix acc(m.n);
  ExactMatrix power = ExactMatrix::identity(m.n);
  for (std::size_t k = 1; k < m.n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    Rational c(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    acc = acc + power.scaled(c);
  }
  return acc;
}

ExactMatrix exp_nilpotent(const ExactMatrix& nmat) {
  if (nmat.twist != 0) throw std::invalid_argument("exp_nilpotent: twist must be 0");
  if (!nmat.is_nilpotent()) throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
  ExactMatrix acc = ExactMatrix::identity(nmat.n);
  ExactMatrix power = ExactMatrix::identity(nmat.n);
  Rational fact = 1;
  for (std::size_t k = 1; k < nmat.n; ++k) {
    power = power * nmat;
    if (power.is_zero()) break;
    fact *= static_cast<long>(k);
    acc = acc + power.scaled(Rational(1) / fact);
  }
  return acc;
}

}  // namespace polylog
