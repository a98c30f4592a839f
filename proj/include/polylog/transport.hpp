#ifndef POLYLOG_TRANSPORT_HPP
#define POLYLOG_TRANSPORT_HPP

#include "polylog/matrices.hpp"
#include "polylog/numerics.hpp"
#include "polylog/paths.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace polylog {

class RationalFunction;

/// Closed logarithmic 1-form: a finite sum  sum_i  c_i dz/(z - a_i).
/// Covers dz/z, dz/(1-z), simple pole forms, dlog of rational functions with
/// rational zero/pole support, and scalar multiples of all of these.
struct LogForm {
  struct Term {
    Complex coeff;
    Complex pole;
  };
  std::vector<Term> terms;

  static LogForm omega0();                 // dz/z
  static LogForm omega1();                 // dz/(1-z) = -dz/(z-1)
  static LogForm pole(Complex a, Complex coeff = Complex(Real(1), Real(0)));
  /// dlog f = f'/f dz expanded over the rational zero/pole support of f.
  /// Throws std::domain_error if f does not factor into rational linear
  /// factors.
  static LogForm dlog(const RationalFunction& f);

  LogForm scaled(const Complex& s) const;
  LogForm operator-() const { return scaled(Complex(Real(-1), Real(0))); }

  std::vector<Complex> poles() const;
  bool structurally_equal(const LogForm& o) const;
};

/// Matrix-valued 1-form with LogForm entries at sparse positions; the
/// connection of the linear system dM = M * omega.
struct SparseConnection {
  std::size_t dim = 0;
  struct Entry {
    std::size_t row, col;
    LogForm form;
  };
  std::vector<Entry> entries;

  SparseConnection() = default;
  explicit SparseConnection(std::size_t d) : dim(d) {}
  void add(std::size_t row, std::size_t col, LogForm f);
  std::vector<Complex> poles() const;
};

struct TransportOptions {
  double step_ratio = 0.25;    // fraction of the local convergence radius
  unsigned max_terms = 400;    // hard cap on Taylor terms per step
  Real clearance = Real(-1);   // < 0: default clearance rule
  bool check_clearance = true;
  unsigned max_steps = 200000;
};

struct TransportStats {
  unsigned long steps = 0;
  Real error_estimate{0};
};

/// Transports `init` along `path` through the linear system
/// M'(t) = M(t) * omega(gamma(t)) * gamma'(t), by adaptive Taylor series
/// steps with a per-step, per-entry embedded error estimate.  The step
/// budget keeps the accumulated estimate below prec.target_tol.
CMatrix ode_transport(const SparseConnection& conn, const Path& path, const CMatrix& init,
                      const PrecisionConfig& prec, const TransportOptions& opts = {},
                      TransportStats* stats = nullptr);

namespace detail {

/// Taylor coefficients (length K) of the pullback of `form` to the segment
/// piece tau = t + sigma*h, sigma in [0,1]:  f(sigma) dsigma with
/// f(sigma) = sum_i c_i * z'(t + sigma h) * h / (z(t + sigma h) - a_i).
std::vector<Complex> pullback_series(const LogForm& form, const PathSegment& seg,
                                     const Real& t, const Real& h, unsigned K);

/// Distance from tau = t to the nearest singularity of the pulled-back form
/// in segment-parameter units; negative means no finite singularity.
Real tau_radius(const PathSegment& seg, const std::vector<Complex>& poles, const Real& t);

// State helpers shared by the algebra instantiations.
void scale_state(CMatrix& m, const Real& s);
void value_add(CMatrix& acc, const CMatrix& inc);
void scale_state(std::vector<Complex>& v, const Real& s);
void value_add(std::vector<Complex>& acc, const std::vector<Complex>& inc);

/// One adaptive Taylor transport over a full path.  Algebra requirements:
///   using State = ...;
///   void begin_step(const PathSegment&, const Real& t, const Real& h, unsigned K);
///   void apply_block(unsigned k, const State& c, State& out) const;  // out += c*B_k
///   State zero_state() const;
///   Real state_max_abs(const State&) const;
///   const std::vector<Complex>& pole_list() const;
template <class Algebra>
typename Algebra::State transport_path(Algebra& alg, const Path& path,
                                       typename Algebra::State state,
                                       const PrecisionConfig& prec,
                                       const TransportOptions& opts,
                                       TransportStats* stats) {
  using State = typename Algebra::State;
  ScopedPrecision scope(prec);

  const Real tol = prec.tol();
  const Real total_len = path.length();
  if (path.segments.empty() || total_len.is_zero()) return state;

  const Real ratio = Real(opts.step_ratio);
  unsigned long nsteps = 0;
  Real err_acc = 0;

  for (const PathSegment& seg : path.segments) {
    const Real seg_len = seg.length();
    if (seg_len.is_zero()) continue;
    Real t = 0;
    Real h_floor = Real(std::numeric_limits<double>::min());
    while (t < 1) {
      Real radius = tau_radius(seg, alg.pole_list(), t);
      Real h = 1 - t;
      Real rho = Real(0.5);
      if (radius > 0) {
        if (ratio * radius < h) h = ratio * radius;
        rho = h / radius;
      }

      bool accepted = false;
      while (!accepted) {
        if (++nsteps > opts.max_steps)
          throw convergence_error("ode_transport: step limit exceeded");
        // Error budget proportional to arc length covered by this step.
        Real tol_step = tol * (h * seg_len) / (2 * total_len);
        Real tail_factor = rho / (1 - rho);
        Real stop_below = tol_step / (4 * (tail_factor > 1 ? tail_factor : Real(1)));

        double log_rho = std::log(std::min(0.75, std::max(1e-30, approx_double(rho))));
        double scale = std::max(1e-30, approx_double(alg.state_max_abs(state)));
        double log_need = std::log(std::max(1e-300, approx_double(stop_below) / scale));
        unsigned K = static_cast<unsigned>(std::min<double>(
            opts.max_terms, std::max(12.0, log_need / log_rho + 16.0)));

        alg.begin_step(seg, t, h, K);

        std::vector<State> coeff;
        coeff.reserve(K + 1);
        coeff.push_back(state);
        State value = state;
        unsigned small_run = 0;
        bool converged = false;
        Real last_mag = 0;
        for (unsigned k = 0; k + 1 <= K; ++k) {
          State next = alg.zero_state();
          for (unsigned j = 0; j <= k; ++j) alg.apply_block(k - j, coeff[j], next);
          Real inv = Real(1) / (k + 1);
          scale_state(next, inv);
          value_add(value, next);
          last_mag = alg.state_max_abs(next);
          coeff.push_back(std::move(next));
          if (last_mag < stop_below) {
            if (++small_run >= 3 && k >= 4) {
              converged = true;
              break;
            }
          } else {
            small_run = 0;
          }
        }
        if (converged) {
          state = std::move(value);
          err_acc += last_mag * (tail_factor > 0 ? tail_factor : Real(1)) + 3 * stop_below;
          accepted = true;
        } else {
          h /= 2;
          rho /= 2;
          if (h * seg_len < h_floor)
            throw convergence_error("ode_transport: step size underflow");
        }
      }
      t += h;
    }
  }
  if (stats) {
    stats->steps = nsteps;
    stats->error_estimate = err_acc;
  }
  return state;
}

/// Algebra driving CMatrix states through a SparseConnection.
class MatrixAlgebra {
 public:
  using State = CMatrix;

  MatrixAlgebra(const SparseConnection& conn, std::size_t state_rows);

  void begin_step(const PathSegment& seg, const Real& t, const Real& h, unsigned K);
  void apply_block(unsigned k, const State& c, State& out) const;
  State zero_state() const { return CMatrix(state_rows_, conn_->dim); }
  Real state_max_abs(const State& s) const { return s.max_abs(); }
  const std::vector<Complex>& pole_list() const { return poles_; }

 private:
  const SparseConnection* conn_;
  std::size_t state_rows_;
  std::vector<Complex> poles_;
  // Entries grouped by distinct form so each pullback series is computed once.
  std::vector<LogForm> forms_;
  std::vector<std::size_t> entry_form_;       // entry index -> form index
  std::vector<std::vector<Complex>> series_;  // per distinct form, Taylor blocks
};

}  // namespace detail

}  // namespace polylog

#endif
