#ifndef QUADVAL_ORACLE_HPP
#define QUADVAL_ORACLE_HPP

// Brute-force ground truth: evaluate f(n) exactly and take nu2. Nothing here
// may depend on the classifier, the closed form, the tree or the operators.

#include <optional>
#include <vector>

#include "quadval/core_arith.hpp"
#include "quadval/poly.hpp"

namespace quadval::oracle {

struct ValuationSequence {
  QuadraticPoly poly;
  Int start;
  std::vector<Valuation> values;
};

/// values[k] = nu2(f(start + k)). Throws std::invalid_argument when
/// count == 0 or start < 0.
ValuationSequence valuation_sequence(const QuadraticPoly& f, const Int& start,
                                     std::size_t count);

/// Smallest power of two P <= horizon / 2 with values[n] == values[n + P]
/// for every n < horizon - P, over the sequence starting at 0.
/// Throws std::invalid_argument when horizon < 4.
std::optional<std::size_t> empirical_period(const QuadraticPoly& f,
                                            std::size_t horizon);

/// Same test applied to an already computed sequence.
std::optional<std::size_t> empirical_period(
    const std::vector<Valuation>& values);

/// First n < period / 2 with values[n] != values[n + period / 2], the witness
/// that period / 2 is not a period. Requires values.size() >= period.
std::optional<std::size_t> half_period_witness(
    const std::vector<Valuation>& values, std::size_t period);

}  // namespace quadval::oracle

#endif  // QUADVAL_ORACLE_HPP
