#include "polylog/transport.hpp"

#include "polylog/ratfunc.hpp"

#include <boost/math/constants/constants.hpp>

namespace polylog {

LogForm LogForm::omega0() { return pole(Complex(Real(0), Real(0))); }

LogForm LogForm::omega1() {
  // dz/(1-z) = -dz/(z-1)
  return pole(Complex(Real(1), Real(0)), Complex(Real(-1), Real(0)));
}

LogForm LogForm::pole(Complex a, Complex coeff) {
  LogForm f;
  f.terms.push_back({std::move(coeff), std::move(a)});
  return f;
}

LogForm LogForm::dlog(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("LogForm::dlog: zero function");
  LogForm form;
  for (const auto& [a, mult] : rational_support(f))
    form.terms.push_back({Complex(Real(mult), Real(0)), to_complex(a)});
  return form;
}

LogForm LogForm::scaled(const Complex& s) const {
  LogForm f = *this;
  for (auto& t : f.terms) t.coeff *= s;
  return f;
}

std::vector<Complex> LogForm::poles() const {
  std::vector<Complex> ps;
  for (const auto& t : terms)
    if (!t.coeff.is_zero()) ps.push_back(t.pole);
  return ps;
}

bool LogForm::structurally_equal(const LogForm& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].coeff != o.terms[i].coeff || terms[i].pole != o.terms[i].pole) return false;
  return true;
}

void SparseConnection::add(std::size_t row, std::size_t col, LogForm f) {
  if (row >= dim || col >= dim) throw std::out_of_range("SparseConnection::add");
  entries.push_back({row, col, std::move(f)});
}

std::vector<Complex> SparseConnection::poles() const {
  std::vector<Complex> ps;
  for (const auto& e : entries)
    for (const auto& p : e.form.poles()) {
      bool seen = false;
      for (const auto& q : ps)
        if (q == p) {
          seen = true;
          break;
        }
      if (!seen) ps.push_back(p);
    }
  return ps;
}

namespace detail {

namespace {

// Quotient of two Taylor series to K terms; d[0] must be nonzero.
std::vector<Complex> series_div(const std::vector<Complex>& n, const std::vector<Complex>& d,
                                unsigned K) {
  std::vector<Complex> q(K);
  Complex inv_d0 = inverse(d[0]);
  for (unsigned k = 0; k < K; ++k) {
    Complex acc = k < n.size() ? n[k] : Complex(Real(0), Real(0));
    for (unsigned j = 1; j <= k && j < d.size(); ++j) acc -= d[j] * q[k - j];
    q[k] = acc * inv_d0;
  }
  return q;
}

}  // namespace

std::vector<Complex> pullback_series(const LogForm& form, const PathSegment& seg, const Real& t,
                                     const Real& h, unsigned K) {
  std::vector<Complex> out(K);
  if (seg.kind == PathSegment::Kind::Line) {
    // z(sigma) = z_t + v h sigma:
    //   c dz/(z-a)  ->  c q sum_k (-q)^k sigma^k  with  q = v h / (z_t - a).
    Complex zt = seg.point_at(t);
    Complex vh = (seg.line_end - seg.line_start) * h;
    for (const auto& term : form.terms) {
      if (term.coeff.is_zero()) continue;
      Complex q = vh / (zt - term.pole);
      Complex acc = term.coeff * q;
      for (unsigned k = 0; k < K; ++k) {
        out[k] += acc;
        acc *= -q;
      }
    }
    return out;
  }

  // Arc z(sigma) = c + u E(sigma), u = z_t - center, E = exp(i w sigma),
  // w = (angle_end - angle_start) * h.  Then dz/dsigma = i w u E and
  //   c dz/(z-a) -> c * (i w u E) / (u E + (center - a)).
  Real w = (seg.angle_end - seg.angle_start) * h;
  Complex iw(Real(0), w);
  Complex u = seg.point_at(t) - seg.center;
  std::vector<Complex> E(K);
  E[0] = Complex(Real(1), Real(0));
  for (unsigned k = 1; k < K; ++k) E[k] = E[k - 1] * iw * Real(Real(1) / k);

  std::vector<Complex> numer(K);
  for (unsigned k = 0; k < K; ++k) numer[k] = iw * u * E[k];

  for (const auto& term : form.terms) {
    if (term.coeff.is_zero()) continue;
    if (term.pole == seg.center) {
      // dz/(z - center) pulls back to the constant i w dsigma.
      out[0] += term.coeff * iw;
      continue;
    }
    std::vector<Complex> denom(K);
    Complex shift = seg.center - term.pole;
    for (unsigned k = 0; k < K; ++k) {
      denom[k] = u * E[k];
      if (k == 0) denom[k] += shift;
    }
    std::vector<Complex> q = series_div(numer, denom, K);
    for (unsigned k = 0; k < K; ++k) out[k] += term.coeff * q[k];
  }
  return out;
}

Real tau_radius(const PathSegment& seg, const std::vector<Complex>& poles, const Real& t) {
  Real best = -1;
  if (seg.kind == PathSegment::Kind::Line) {
    Complex zt = seg.point_at(t);
    Real vlen = abs(seg.line_end - seg.line_start);
    if (vlen.is_zero()) return best;
    for (const auto& a : poles) {
      Real d = abs(zt - a) / vlen;
      if (best < 0 || d < best) best = d;
    }
    return best;
  }
  // Arc: z(t + zeta) = center + (z_t - center) e^{i dtheta zeta} hits a at
  //   zeta = (Arg w + 2 pi k - i ln|w|) / dtheta,  w = (a - center)/(z_t - center);
  // the principal k = 0 minimizes |zeta|.
  Real dtheta = fabs(seg.angle_end - seg.angle_start);
  Complex u = seg.point_at(t) - seg.center;
  for (const auto& a : poles) {
    if (a == seg.center) continue;  // pole at the center never meets the arc
    Complex w = (a - seg.center) / u;
    Real d = hypot(arg(w), log(abs(w))) / dtheta;
    if (best < 0 || d < best) best = d;
  }
  return best;
}

void scale_state(CMatrix& m, const Real& s) {
  for (auto& x : m.a) x *= s;
}

void value_add(CMatrix& acc, const CMatrix& inc) {
  for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += inc.a[i];
}

void scale_state(std::vector<Complex>& v, const Real& s) {
  for (auto& x : v) x *= s;
}

void value_add(std::vector<Complex>& acc, const std::vector<Complex>& inc) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += inc[i];
}

MatrixAlgebra::MatrixAlgebra(const SparseConnection& conn, std::size_t state_rows)
    : conn_(&conn), state_rows_(state_rows), poles_(conn.poles()) {
  for (const auto& e : conn.entries) {
    std::size_t idx = forms_.size();
    for (std::size_t f = 0; f < forms_.size(); ++f)
      if (forms_[f].structurally_equal(e.form)) {
        idx = f;
        break;
      }
    if (idx == forms_.size()) forms_.push_back(e.form);
    entry_form_.push_back(idx);
  }
}

void MatrixAlgebra::begin_step(const PathSegment& seg, const Real& t, const Real& h, unsigned K) {
  series_.resize(forms_.size());
  for (std::size_t f = 0; f < forms_.size(); ++f)
    series_[f] = pullback_series(forms_[f], seg, t, h, K);
}

void MatrixAlgebra::apply_block(unsigned k, const State& c, State& out) const {
  // out += c * B_k with B_k sparse: (c B)(r, col) += c(r, row) * b.
  for (std::size_t e = 0; e < conn_->entries.size(); ++e) {
    const Complex& b = series_[entry_form_[e]][k];
    if (b.is_zero()) continue;
    std::size_t row = conn_->entries[e].row, col = conn_->entries[e].col;
    for (std::size_t r = 0; r < state_rows_; ++r) {
      const Complex& x = c.at(r, row);
      if (x.is_zero()) continue;
      out.at(r, col) += x * b;
    }
  }
}

}  // namespace detail

CMatrix ode_transport(const SparseConnection& conn, const Path& path, const CMatrix& init,
                      const PrecisionConfig& prec, const TransportOptions& opts,
                      TransportStats* stats) {
  if (init.cols != conn.dim)
    throw std::invalid_argument("ode_transport: state/connection dimension mismatch");
  ScopedPrecision scope(prec);
  if (opts.check_clearance) validate_path(path, conn.poles(), opts.clearance);
  detail::MatrixAlgebra alg(conn, init.rows);
  return detail::transport_path(alg, path, init, prec, opts, stats);
}

}  // namespace polylog
