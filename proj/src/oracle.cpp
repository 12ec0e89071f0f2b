#include "quadval/oracle.hpp"

#include <stdexcept>

namespace quadval::oracle {

ValuationSequence valuation_sequence(const QuadraticPoly& f, const Int& start,
                                     std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be >= 1");
  if (start < 0) throw std::invalid_argument("start must be >= 0");
  ValuationSequence seq{.poly = f, .start = start};
  seq.values.reserve(count);
  Int n = start;
  for (std::size_t k = 0; k < count; ++k, ++n) seq.values.push_back(nu2(f(n)));
  return seq;
}

std::optional<std::size_t> empirical_period(
    const std::vector<Valuation>& values) {
  const std::size_t horizon = values.size();
  for (std::size_t period = 1; period <= horizon / 2; period *= 2) {
    bool periodic = true;
    for (std::size_t n = 0; n + period < horizon && periodic; ++n) {
      periodic = values[n] == values[n + period];
    }
    if (periodic) return period;
  }
  return std::nullopt;
}

std::optional<std::size_t> empirical_period(const QuadraticPoly& f,
                                            std::size_t horizon) {
  if (horizon < 4) throw std::invalid_argument("horizon must be >= 4");
  return empirical_period(valuation_sequence(f, 0, horizon).values);
}

std::optional<std::size_t> half_period_witness(
    const std::vector<Valuation>& values, std::size_t period) {
  if (period < 2 || values.size() < period) {
    throw std::invalid_argument("half_period_witness: need period >= 2 "
                                "values");
  }
  const std::size_t half = period / 2;
  for (std::size_t n = 0; n < half; ++n) {
    if (values[n] != values[n + half]) return n;
  }
  return std::nullopt;
}

}  // namespace quadval::oracle
