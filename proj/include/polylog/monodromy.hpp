#ifndef POLYLOG_MONODROMY_HPP
#define POLYLOG_MONODROMY_HPP

#include "polylog/branch.hpp"
#include "polylog/matrices.hpp"
#include "polylog/paths.hpp"
#include "polylog/tensor.hpp"

namespace polylog {

/// Exact monodromy matrix of one generator: M(sigma_0) = blockdiag(1, J)
/// with J_{ij} = 1/(j-i)!, M(sigma_1) = I with entry (0,1) = -1; inverses
/// are exact matrix inverses.  Dimension (n+1)x(n+1), twist 0.
ExactMatrix generator_matrix(Letter l, int n);

/// Ordered product of generator matrices (the representation is a
/// homomorphism for path composition in the same order).
ExactMatrix monodromy_exact(const MonodromyWord& word, int n);

/// Lambda_end * Lambda(1/2)^{-1} with Lambda_end the continuation of the
/// principal branch along word_to_path(word).  Generator loop transports are
/// memoized; set use_cache = false to integrate the concatenated path
/// directly.
CMatrix monodromy_numeric(const MonodromyWord& word, int n, const PrecisionConfig& prec,
                          bool use_cache = true);

/// Residues of the connection at 0, 1 and infinity (in the chart w = 1/z);
/// each is nilpotent and the three sum to zero.
struct ConnectionResidues {
  ExactMatrix at_zero, at_one, at_infinity;
};
ConnectionResidues connection_residues(int n);

/// Exact nilpotent log T_P of the unipotent local monodromy, with the
/// 1/(2 pi i) factor of N_P = log(T_P)/(2 pi i) carried in the twist field.
ExactMatrix local_log(Letter l, int n);

/// Weight and Hodge filtrations of the degree-n system:
/// W_{-2l+1} = W_{-2l} = span{e_l, ..., e_n},  F^{-p} = span{e_0, ..., e_p}.
struct FiltrationSpec {
  int n = 0;
  static FiltrationSpec standard(int n);
  /// Indices spanning W_l (empty below the bottom weight).
  std::vector<std::size_t> weight_members(int l) const;
  /// Indices spanning F^p.
  std::vector<std::size_t> hodge_members(int p) const;
};

/// True iff L maps each W_l into W_{l-2} (the twist scalar is irrelevant to
/// the inclusion).
bool check_relative_weight(const ExactMatrix& L, const FiltrationSpec& W);

/// Rational structure of the limit mixed Hodge structure at P in {0, 1} with
/// the paper's tangent choices (d/dz at 0, -d/dz at 1): rows of the matrix
/// express s_0, ..., s_n in the frame e_0, ..., e_n, computed from the
/// regularized frame t^{-N} Lambda(t) at t0 = 10^{-ceil(bits/8)}.
struct LimitMHSResult {
  int basepoint = 0;  // 0 or 1
  int n = 0;
  Real t0;
  CMatrix rational_structure;
};
LimitMHSResult limit_mhs(int basepoint, int n, const PrecisionConfig& prec);

/// Extension-class period matrix [[1, lambda], [0, (2 pi i)^m]].
CMatrix ext_class_matrix(const Complex& lambda, int m);

/// Image of a transport series under the degree-n matrix representation,
/// conjugated into the monodromy frame: Lambda(1/2) rep(theta) Lambda(1/2)^{-1}.
/// Matches monodromy_exact of the same word within tolerance.
CMatrix monodromy_from_transport_series(const TensorSeriesC& theta, int n,
                                        const PrecisionConfig& prec);

}  // namespace polylog

#endif
