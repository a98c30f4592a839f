#include "polylog/branch.hpp"

#include <map>
#include <mutex>

namespace polylog {

SparseConnection polylog_connection(int n) {
  if (n < 1) throw std::invalid_argument("polylog_connection: n must be >= 1");
  SparseConnection conn(n + 1);
  conn.add(0, 1, LogForm::omega1());
  for (int j = 1; j < n; ++j) conn.add(j, j + 1, LogForm::omega0());
  return conn;
}

Path route_to(const Complex& x) {
  Complex half(Real(1) / 2, Real(0));
  return route_between(half, x, {Complex(0), Complex(1)});
}

namespace {

// Row vector (1, ln_1 x, ..., ln_n x) by the defining series, |x| <= 3/4.
CMatrix series_row(const Complex& x, int n, const PrecisionConfig& prec) {
  CMatrix row(1, n + 1);
  row.at(0, 0) = Complex(1);
  for (int k = 1; k <= n; ++k) row.at(0, k) = series_polylog(k, x, prec);
  return row;
}

// Row vector of principal polylog values anywhere in the disk |x-1/2| < 1/2;
// radial transport from |x| = 3/4 when the series bound does not apply.
CMatrix principal_row(const Complex& x, int n, const PrecisionConfig& prec) {
  Real r = abs(x);
  if (r <= Real(3) / 4) return series_row(x, n, prec);
  Complex x0 = x * (Real(3) / (4 * r));
  CMatrix row = series_row(x0, n, prec);
  Path radial;
  radial.basepoint = x0;
  radial.append(PathSegment::line(x0, x));
  return ode_transport(polylog_connection(n), radial, row, prec);
}

Complex two_pi_i_pow(int j) { return pow_int(two_pi_i(), j); }

}  // namespace

BranchState principal_lambda(const Complex& x, int n, const PrecisionConfig& prec) {
  if (n < 1) throw std::invalid_argument("principal_lambda: n must be >= 1");
  ScopedPrecision scope(prec);
  Complex half(Real(1) / 2, Real(0));
  if (!(abs(x - half) < Real(1) / 2))
    throw std::domain_error("principal_lambda: x outside the disk |x - 1/2| < 1/2");

  BranchState st;
  st.order = n;
  st.point = x;
  st.history = route_to(x);
  st.lambda = CMatrix(n + 1, n + 1);

  CMatrix row0 = principal_row(x, n, prec);
  for (int k = 0; k <= n; ++k) st.lambda.at(0, k) = row0.at(0, k);

  Complex logx = log(x);  // principal: Re x > 0 on the disk
  for (int j = 1; j <= n; ++j) {
    Complex pj = two_pi_i_pow(j);
    Complex power(1);
    Real fact = 1;
    for (int k = j; k <= n; ++k) {
      st.lambda.at(j, k) = pj * power * (1 / fact);
      power *= logx;
      fact *= (k - j + 1);
    }
  }
  return st;
}

BranchState continue_branch(const BranchState& state, const Path& path,
                            const PrecisionConfig& prec, const TransportOptions& opts) {
  ScopedPrecision scope(prec);
  if (!path.segments.empty() &&
      abs(path.start() - state.point) > Real(1e-12) * std::max(Real(1), abs(state.point)))
    throw std::invalid_argument("continue_branch: path does not start at the branch point");
  BranchState out;
  out.order = state.order;
  out.point = path.segments.empty() ? state.point : path.end();
  out.history = compose(state.history, path);
  out.lambda = ode_transport(polylog_connection(state.order), path, state.lambda, prec, opts);
  return out;
}

Complex li_value(const BranchState& state, int k) {
  if (k < 1 || k > state.order) throw std::out_of_range("li_value: k out of range");
  return state.lambda.at(0, k);
}

Real branch_invariant_residual(const BranchState& state, const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  Real worst = 0;
  int n = state.order;
  for (int j = 0; j <= n; ++j) {
    worst = std::max(worst, abs(state.lambda.at(j, j) - two_pi_i_pow(j)));
    for (int k = 0; k < j; ++k) worst = std::max(worst, abs(state.lambda.at(j, k)));
  }
  return worst;
}

const CMatrix& generator_transport(Letter l, int n, const PrecisionConfig& prec) {
  struct Key {
    int letter, n;
    unsigned bits;
    double tol;
    bool operator<(const Key& o) const {
      return std::tie(letter, n, bits, tol) < std::tie(o.letter, o.n, o.bits, o.tol);
    }
  };
  static std::map<Key, CMatrix> cache;
  static std::mutex mu;
  Key key{static_cast<int>(l), n, prec.working_bits, prec.target_tol};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ScopedPrecision scope(prec);
  CMatrix t = ode_transport(polylog_connection(n), standard_loop(l),
                            CMatrix::identity(n + 1), prec);
  return cache.emplace(key, std::move(t)).first->second;
}

CMatrix branch_row(const Complex& x, int n, const MonodromyWord& word,
                   const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  Complex half(Real(1) / 2, Real(0));
  CMatrix row = series_row(half, n, prec);
  for (Letter l : word.letters) row = row * generator_transport(l, n, prec);
  if (x == half) return row;
  if (word.letters.empty() && abs(x) <= Real(3) / 4) return series_row(x, n, prec);
  return ode_transport(polylog_connection(n), route_to(x), row, prec);
}

Real d1(const Complex& x) {
  if (x.is_zero()) throw std::domain_error("d1: log|0| is undefined");
  return log(abs(x));
}

namespace {

bool is_special_point(const Complex& x, int which) {
  return x == Complex(which);
}

Real d2_from_row(const Complex& x, const CMatrix& row) {
  // D_2 = Im ln_2 + log|x| arg(1-x), with arg(1-x) continued along the same
  // branch: arg(1-x) = Im log(1-x) = -Im ln_1.
  Real logabs = log(abs(x));
  return row.at(0, 2).im - logabs * row.at(0, 1).im;
}

Real d3_from_row(const Complex& x, const CMatrix& row) {
  Real logabs = log(abs(x));
  Complex v = row.at(0, 3) - row.at(0, 2) * logabs + row.at(0, 1) * (logabs * logabs / 3);
  return v.re;
}

Real limit_parameter(const PrecisionConfig& prec) {
  int e = static_cast<int>((prec.working_bits + 7) / 8);
  return pow(Real(10), -e);
}

}  // namespace

Real d2(const Complex& x, const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  if (is_special_point(x, 0) || is_special_point(x, 1)) return Real(0);
  CMatrix row = branch_row(x, 2, MonodromyWord{}, prec);
  return d2_from_row(x, row);
}

Real d3(const Complex& x, const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  if (is_special_point(x, 0)) return Real(0);
  Complex at = x;
  if (is_special_point(x, 1)) at = Complex(1 - limit_parameter(prec), Real(0));
  CMatrix row = branch_row(at, 3, MonodromyWord{}, prec);
  return d3_from_row(at, row);
}

Real d2_via_branch(const Complex& x, const MonodromyWord& word, const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  if (is_special_point(x, 0) || is_special_point(x, 1)) return Real(0);
  CMatrix row = branch_row(x, 2, word, prec);
  return d2_from_row(x, row);
}

Real d3_via_branch(const Complex& x, const MonodromyWord& word, const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  if (is_special_point(x, 0)) return Real(0);
  Complex at = x;
  if (is_special_point(x, 1)) at = Complex(1 - limit_parameter(prec), Real(0));
  CMatrix row = branch_row(at, 3, word, prec);
  return d3_from_row(at, row);
}

}  // namespace polylog
