#ifndef POLYLOG_BRANCH_HPP
#define POLYLOG_BRANCH_HPP

#include "polylog/itint.hpp"
#include "polylog/matrices.hpp"
#include "polylog/paths.hpp"
#include "polylog/transport.hpp"

namespace polylog {

/// The (n+1)x(n+1) connection of the fundamental system d Lambda = Lambda w:
/// w_1 = dz/(1-z) in slot (0,1) and w_0 = dz/z in slots (j, j+1), j >= 1.
SparseConnection polylog_connection(int n);

/// A point x together with the fundamental solution Lambda(x) transported
/// from the basepoint 1/2 along the recorded path.  lambda stays upper
/// triangular with diagonal (1, 2 pi i, ..., (2 pi i)^n); row 0 carries the
/// branch values of (1, ln_1 x, ..., ln_n x).
struct BranchState {
  int order = 1;
  Complex point;
  Path history;
  CMatrix lambda;
};

/// Standard route from 1/2 to x: the straight segment, with deterministic
/// semicircular detours around 0 or 1 where it passes too close.
Path route_to(const Complex& x);

/// Principal branch of Lambda on the disk |x - 1/2| < 1/2.  Row 0 comes from
/// the defining series (through a short radial transport from |x| = 3/4 when
/// needed); row j > 0 entry k is (2 pi i)^j log^{k-j}(x) / (k-j)!.
BranchState principal_lambda(const Complex& x, int n, const PrecisionConfig& prec);

/// Analytic continuation along a path starting at state.point.
BranchState continue_branch(const BranchState& state, const Path& path,
                            const PrecisionConfig& prec, const TransportOptions& opts = {});

/// Entry (0, k): the value of ln_k on this branch.
Complex li_value(const BranchState& state, int k);

/// Residual of the BranchState invariants (diagonal (2 pi i)^j, upper
/// triangularity); used by tests.
Real branch_invariant_residual(const BranchState& state, const PrecisionConfig& prec);

/// Transport matrix of one standard generator loop at the basepoint 1/2,
/// memoized per (letter, n, precision): the unipotent T with
/// Lambda_after = Lambda(1/2) * T.  Pure-function cache, thread safe.
const CMatrix& generator_transport(Letter l, int n, const PrecisionConfig& prec);

/// Row 0 of Lambda at x on the branch reached by first looping along `word`
/// (empty for the principal route) and then following the standard route.
CMatrix branch_row(const Complex& x, int n, const MonodromyWord& word,
                   const PrecisionConfig& prec);

/// D_1 = log| |.
Real d1(const Complex& x);

/// Bloch-Wigner function D_2 = Im ln_2 x + log|x| arg(1-x), extended by
/// D_2(0) = D_2(1) = 0; single valued, so the transport route is immaterial.
Real d2(const Complex& x, const PrecisionConfig& prec);

/// Single-valued trilogarithm
///   D_3 = Re[ ln_3 x - log|x| ln_2 x + log^2|x| ln_1 x / 3 ],
/// with D_3(0) = 0 and D_3(1) evaluated as the t -> 0 limit along the real
/// axis (the continuous extension; numerically t = 10^{-ceil(bits/8)}).
Real d3(const Complex& x, const PrecisionConfig& prec);

/// D_2 recomputed on the branch reached through `word`; equals d2(x) up to
/// tolerance by single-valuedness.
Real d2_via_branch(const Complex& x, const MonodromyWord& word, const PrecisionConfig& prec);
Real d3_via_branch(const Complex& x, const MonodromyWord& word, const PrecisionConfig& prec);

}  // namespace polylog

#endif
