#include "polylog/itint.hpp"

namespace polylog {

Complex iterated_integral(const FormWord& word, const Path& path, const PrecisionConfig& prec,
                          const TransportOptions& opts) {
  ScopedPrecision scope(prec);
  if (word.empty()) return Complex(1);
  std::size_t r = word.size();
  SparseConnection conn(r + 1);
  for (std::size_t i = 0; i < r; ++i) conn.add(i, i + 1, word[i]);
  CMatrix res = ode_transport(conn, path, CMatrix::identity(r + 1), prec, opts);
  return res.at(0, r);
}

namespace {

bool words_equal(const FormWord& a, const FormWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].structurally_equal(b[i])) return false;
  return true;
}

}  // namespace

ShuffleSum shuffle_product(const FormWord& u, const FormWord& v) {
  ShuffleSum out;
  std::size_t r = u.size(), s = v.size();
  // Interleavings as bitmasks choosing the positions of u within r+s slots.
  FormWord word(r + s);
  std::vector<unsigned> positions;
  // Enumerate subsets of size r of {0, ..., r+s-1}.
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  auto emit = [&]() {
    std::size_t ui = 0, vi = 0;
    for (std::size_t p = 0; p < r + s; ++p) {
      bool from_u = ui < r && idx[ui] == p;
      word[p] = from_u ? u[ui++] : v[vi++];
    }
    for (auto& [w, c] : out.terms)
      if (words_equal(w, word)) {
        ++c;
        return;
      }
    out.terms.emplace_back(word, 1);
  };
  if (r == 0 || s == 0) {
    word = r == 0 ? v : u;
    out.terms.emplace_back(word, 1);
    return out;
  }
  while (true) {
    emit();
    // Next combination.
    std::size_t i = r;
    while (i-- > 0) {
      if (idx[i] + (r - i) < r + s) {
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

Complex evaluate(const ShuffleSum& sum, const Path& path, const PrecisionConfig& prec,
                 const TransportOptions& opts) {
  ScopedPrecision scope(prec);
  Complex acc(0);
  for (const auto& [w, c] : sum.terms)
    acc += iterated_integral(w, path, prec, opts) * Real(static_cast<long>(c));
  return acc;
}

namespace {

// Transport algebra over the truncated tensor algebra on X0, X1 with the
// connection omega_0 X0 - omega_1 X1; states are dense coefficient vectors.
class TensorTransportAlgebra {
 public:
  using State = std::vector<Complex>;

  explicit TensorTransportAlgebra(unsigned trunc)
      : trunc_(trunc),
        e0_(LogForm::omega0()),
        e1_(-LogForm::omega1()),
        poles_{Complex(0), Complex(1)} {}

  void begin_step(const PathSegment& seg, const Real& t, const Real& h, unsigned K) {
    f0_ = detail::pullback_series(e0_, seg, t, h, K);
    f1_ = detail::pullback_series(e1_, seg, t, h, K);
  }

  void apply_block(unsigned k, const State& c, State& out) const {
    const Complex& b0 = f0_[k];
    const Complex& b1 = f1_[k];
    bool z0 = b0.is_zero(), z1 = b1.is_zero();
    if (z0 && z1) return;
    std::size_t half = c.size() / 2;
    for (std::size_t idx = 1; idx < half; ++idx) {
      const Complex& x = c[idx];
      if (x.is_zero()) continue;
      if (!z0) out[idx * 2] += x * b0;
      if (!z1) out[idx * 2 + 1] += x * b1;
    }
  }

  State zero_state() const { return State(std::size_t(1) << (trunc_ + 1)); }
  Real state_max_abs(const State& s) const {
    Real m = 0;
    for (const auto& x : s) m = std::max(m, abs(x));
    return m;
  }
  const std::vector<Complex>& pole_list() const { return poles_; }

 private:
  unsigned trunc_;
  LogForm e0_, e1_;
  std::vector<Complex> poles_;
  std::vector<Complex> f0_, f1_;
};

}  // namespace

TensorSeriesC transport_series(const Path& path, unsigned trunc, const PrecisionConfig& prec,
                               const TransportOptions& opts) {
  if (trunc < 1) throw std::invalid_argument("transport_series: truncation must be >= 1");
  if (trunc > 12) throw std::invalid_argument("transport_series: truncation capped at 12");
  ScopedPrecision scope(prec);
  TensorTransportAlgebra alg(trunc);
  if (opts.check_clearance) validate_path(path, alg.pole_list(), opts.clearance);
  TensorSeriesC unit = TensorSeriesC::unit(trunc);
  std::vector<Complex> state =
      detail::transport_path(alg, path, unit.coeff, prec, opts, nullptr);
  TensorSeriesC out(trunc);
  out.coeff = std::move(state);
  return out;
}

}  // namespace polylog
