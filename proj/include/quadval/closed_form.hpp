#ifndef QUADVAL_CLOSED_FORM_HPP
#define QUADVAL_CLOSED_FORM_HPP

// Exact valuations of bounded (case 3(c)) quadratics without evaluating f.
//
// With a odd, b = 2k, D = 4^ell * delta, delta == m (mod 8) and
// a' = a^{-1} mod 2^ell, the residue classes
//
//   n == a'(2^{i-1} - k)  (mod 2^i),  1 <= i < ell   ->  2(i-1)
//   n == a'(2^{ell-1} - k) (mod 2^ell)               ->  2(ell-1) | 2ell-1 | 2ell
//   n == a'(2^ell - k)     (mod 2^ell)               ->  2ell-1 | 2(ell-1)
//
// partition the naturals; the level-ell values depend on m (see
// closed_form.cpp). ell == 1 is a separate four-way table on
// (m, b mod 4).

#include <cstddef>
#include <vector>

#include "quadval/classifier.hpp"
#include "quadval/core_arith.hpp"
#include "quadval/poly.hpp"

namespace quadval {

struct PeriodTable {
  unsigned long ell = 0;
  Int period;
  /// entries[r] is the valuation of f(n) for every n == r (mod 2^ell),
  /// including the even-reduction offset.
  std::vector<Valuation> entries;

  const Valuation& operator[](std::size_t r) const { return entries[r]; }
  std::size_t size() const { return entries.size(); }
};

/// Largest ell for which period_table() will materialize 2^ell entries.
inline constexpr unsigned long kMaxTableEll = 24;

/// Throws std::domain_error("sequence not bounded") unless f is case 3(c).
Valuation closed_form_valuation(const QuadraticPoly& f, const Int& n);
Valuation closed_form_valuation(const Classification& cls, const Int& n);

/// Throws std::domain_error for non-3(c) input and std::length_error when
/// ell exceeds kMaxTableEll.
PeriodTable period_table(const QuadraticPoly& f);
PeriodTable period_table(const Classification& cls);

/// 2ell when m == 5, otherwise 2ell - 1; plus the even-reduction offset.
Valuation max_valuation(const QuadraticPoly& f);
Valuation max_valuation(const Classification& cls);

}  // namespace quadval

#endif  // QUADVAL_CLOSED_FORM_HPP
