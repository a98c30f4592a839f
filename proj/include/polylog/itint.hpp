#ifndef POLYLOG_ITINT_HPP
#define POLYLOG_ITINT_HPP

#include "polylog/tensor.hpp"
#include "polylog/transport.hpp"

namespace polylog {

/// Word (w_1, ..., w_r) of logarithmic 1-forms.
using FormWord = std::vector<LogForm>;

/// Value of the iterated integral int_gamma w_1 ... w_r, computed as the
/// (0, r) entry of the transport of the (r+1)x(r+1) strictly upper
/// triangular connection carrying w_i in slot (i-1, i).  The empty word
/// integrates to 1.
Complex iterated_integral(const FormWord& word, const Path& path, const PrecisionConfig& prec,
                          const TransportOptions& opts = {});

/// Formal integer combination of form words.
struct ShuffleSum {
  std::vector<std::pair<FormWord, long>> terms;
};

/// Sum over (r, s)-shuffles of u and v; structurally equal interleavings are
/// collected with multiplicity.
ShuffleSum shuffle_product(const FormWord& u, const FormWord& v);

/// Numeric evaluation of a shuffle sum along a path.
Complex evaluate(const ShuffleSum& sum, const Path& path, const PrecisionConfig& prec,
                 const TransportOptions& opts = {});

/// Degree-<=m truncation of the transport series
///   1 + sum_r sum_words (int_gamma e_{i_1} ... e_{i_r}) X_{i_1} ... X_{i_r}
/// where e_0 = omega_0 pairs with X0 and e_1 = -omega_1 pairs with X1 (the
/// sign fixed by the connection form omega_0 X0 - omega_1 X1).  The result
/// is multiplicative under path composition and group-like.
TensorSeriesC transport_series(const Path& path, unsigned trunc, const PrecisionConfig& prec,
                               const TransportOptions& opts = {});

}  // namespace polylog

#endif
