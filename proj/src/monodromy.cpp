#include "polylog/monodromy.hpp"

#include "polylog/lie.hpp"

namespace polylog {

ExactMatrix generator_matrix(Letter l, int n) {
  if (n < 1) throw std::invalid_argument("generator_matrix: n must be >= 1");
  std::size_t dim = n + 1;
  switch (l) {
    case Letter::s0: {
      ExactMatrix m = ExactMatrix::identity(dim);
      for (std::size_t i = 1; i < dim; ++i) {
        Rational fact = 1;
        for (std::size_t j = i + 1; j < dim; ++j) {
          fact *= static_cast<long>(j - i);
          m.at(i, j) = Rational(1) / fact;
        }
      }
      return m;
    }
    case Letter::s1: {
      ExactMatrix m = ExactMatrix::identity(dim);
      m.at(0, 1) = -1;
      return m;
    }
    case Letter::s0_inv:
      return generator_matrix(Letter::s0, n).inverse();
    case Letter::s1_inv:
      return generator_matrix(Letter::s1, n).inverse();
  }
  throw std::logic_error("generator_matrix");
}

ExactMatrix monodromy_exact(const MonodromyWord& word, int n) {
  ExactMatrix m = ExactMatrix::identity(n + 1);
  for (Letter l : word.letters) m = m * generator_matrix(l, n);
  return m;
}

CMatrix monodromy_numeric(const MonodromyWord& word, int n, const PrecisionConfig& prec,
                          bool use_cache) {
  ScopedPrecision scope(prec);
  Complex half(Real(1) / 2, Real(0));
  BranchState base = principal_lambda(half, n, prec);
  CMatrix lambda_end;
  if (use_cache) {
    lambda_end = base.lambda;
    for (Letter l : word.letters) lambda_end = lambda_end * generator_transport(l, n, prec);
  } else {
    lambda_end = continue_branch(base, word_to_path(word), prec).lambda;
  }
  return lambda_end * upper_triangular_inverse(base.lambda);
}

ConnectionResidues connection_residues(int n) {
  if (n < 1) throw std::invalid_argument("connection_residues: n must be >= 1");
  std::size_t dim = n + 1;
  ConnectionResidues r{ExactMatrix(dim), ExactMatrix(dim), ExactMatrix(dim)};
  // omega_0 = dz/z contributes residue 1 at 0 and -1 at infinity;
  // omega_1 = dz/(1-z) contributes residue -1 at 1 and +1 at infinity.
  for (std::size_t j = 1; j + 1 < dim; ++j) {
    r.at_zero.at(j, j + 1) = 1;
    r.at_infinity.at(j, j + 1) = -1;
  }
  r.at_one.at(0, 1) = -1;
  r.at_infinity.at(0, 1) = 1;
  return r;
}

ExactMatrix local_log(Letter l, int n) {
  if (l != Letter::s0 && l != Letter::s1)
    throw std::invalid_argument("local_log: local monodromy logarithms attach to s0 and s1");
  ExactMatrix lg = log_unipotent(generator_matrix(l, n));
  lg.twist = -1;
  return lg;
}

FiltrationSpec FiltrationSpec::standard(int n) {
  FiltrationSpec f;
  f.n = n;
  return f;
}

std::vector<std::size_t> FiltrationSpec::weight_members(int l) const {
  // W_{-2l'} = W_{-2l'+1} = span{e_{l'}, ..., e_n}; floor division pairs the
  // odd level with the even one below it.
  int lp = -(l - (l % 2 != 0 ? 1 : 0)) / 2;
  if (l >= 0) lp = 0;
  std::vector<std::size_t> idx;
  for (int m = lp; m <= n; ++m)
    if (m >= 0) idx.push_back(static_cast<std::size_t>(m));
  return idx;
}

std::vector<std::size_t> FiltrationSpec::hodge_members(int p) const {
  // F^{-p} = span{e_0, ..., e_p}.
  std::vector<std::size_t> idx;
  for (int m = 0; m <= std::min(-p, n); ++m) idx.push_back(static_cast<std::size_t>(m));
  return idx;
}

bool check_relative_weight(const ExactMatrix& L, const FiltrationSpec& W) {
  std::size_t dim = W.n + 1;
  if (L.n != dim) throw std::invalid_argument("check_relative_weight: dimension mismatch");
  for (int l = 0; l >= -2 * W.n; --l) {
    auto members = W.weight_members(l);
    auto target = W.weight_members(l - 2);
    std::vector<bool> allowed(dim, false);
    for (auto j : target) allowed[j] = true;
    for (auto i : members)
      for (std::size_t j = 0; j < dim; ++j)
        if (L.at(i, j) != 0 && !allowed[j]) return false;
  }
  return true;
}

LimitMHSResult limit_mhs(int basepoint, int n, const PrecisionConfig& prec) {
  if (basepoint != 0 && basepoint != 1)
    throw std::invalid_argument("limit_mhs: basepoint must be 0 or 1");
  if (n < 1) throw std::invalid_argument("limit_mhs: n must be >= 1");
  ScopedPrecision scope(prec);

  int e = static_cast<int>((prec.working_bits + 7) / 8);
  Real t0 = pow(Real(10), -e);

  // Residual of the single-point limit evaluation is O(t0 log^n t0); refuse
  // to return values the precision cannot certify.
  Real est = t0 * pow(fabs(log(t0)) + 1, n);
  if (est > prec.tol())
    throw precision_error(
        "limit_mhs: t -> 0 residual estimate exceeds the tolerance; raise working_bits");

  Complex half(Real(1) / 2, Real(0));
  Complex endpoint = basepoint == 0 ? Complex(t0, Real(0)) : Complex(1 - t0, Real(0));
  Path approach;
  approach.append(PathSegment::line(half, endpoint));

  BranchState st = continue_branch(principal_lambda(half, n, prec), approach, prec);

  // N_P = log T_P / (2 pi i) with T_P the local monodromy in the transported
  // frame (the segment-conjugated small positive loop around P is homotopic
  // to the standard generator).
  ExactMatrix lg = local_log(basepoint == 0 ? Letter::s0 : Letter::s1, n);
  CMatrix n_matrix = lg.to_numeric();  // includes the 1/(2 pi i) twist

  // s_j(t0) = rows of exp(-log(t0) N) Lambda(t0).
  CMatrix reg = exp_nilpotent(n_matrix.scaled(Complex(-log(t0), Real(0))));
  LimitMHSResult out;
  out.basepoint = basepoint;
  out.n = n;
  out.t0 = t0;
  out.rational_structure = reg * st.lambda;
  return out;
}

CMatrix ext_class_matrix(const Complex& lambda, int m) {
  if (m < 1) throw std::invalid_argument("ext_class_matrix: m must be >= 1");
  CMatrix r(2, 2);
  r.at(0, 0) = Complex(1);
  r.at(0, 1) = lambda;
  r.at(1, 1) = pow_int(two_pi_i(), m);
  return r;
}

CMatrix monodromy_from_transport_series(const TensorSeriesC& theta, int n,
                                        const PrecisionConfig& prec) {
  ScopedPrecision scope(prec);
  CMatrix rep = rep_evaluate(theta, n, prec);
  Complex half(Real(1) / 2, Real(0));
  CMatrix lambda = principal_lambda(half, n, prec).lambda;
  return lambda * rep * upper_triangular_inverse(lambda);
}

}  // namespace polylog
