#ifndef QUADVAL_CLASSIFIER_HPP
#define QUADVAL_CLASSIFIER_HPP

// Boundedness classification of n -> nu2(a n^2 + b n + c) from the
// coefficients alone.
//
// All-even coefficient triples are first divided by their common power of
// two 2^i; every valuation of the original polynomial is i plus the
// valuation of the reduced one. The reduced triple is then dispatched on
// parity:
//
//   a even, b even (c odd)   -> constant 0
//   a even, b odd            -> unbounded, one 2-adic root
//   a odd,  b even           -> split on D = b^2 - 4ac = 4^ell * delta:
//       D == 0                  unbounded, one (double) root
//       delta == 1 (mod 8)      unbounded, two roots
//       delta == 2,3,5,6,7      bounded, minimal period 2^ell
//   a odd,  b odd,  c even   -> unbounded, two roots
//   a odd,  b odd,  c odd    -> constant 0

#include <optional>
#include <string>
#include <string_view>

#include "quadval/core_arith.hpp"
#include "quadval/poly.hpp"

namespace quadval {

enum class CaseTag {
  kCase1ConstZero,
  kCase2Unbounded,
  kCase3aUnbounded,
  kCase3bUnbounded,
  kCase3cBounded,
  kCase4Unbounded,
  kCase5ConstZero,
};

/// "1", "2", "3(a)", "3(b)", "3(c)", "4", "5".
std::string_view case_label(CaseTag tag);

/// Stable machine name, e.g. "CASE3C_BOUNDED".
std::string_view case_name(CaseTag tag);

struct EvenReduction {
  unsigned long shift;
  QuadraticPoly reduced;
};

/// Divides out the largest 2^i dividing a, b and c.
EvenReduction reduce_even(const QuadraticPoly& f);

struct Classification {
  unsigned long even_offset = 0;
  CaseTag case_tag = CaseTag::kCase5ConstZero;
  QuadraticPoly reduced;
  /// Present for the a-odd/b-even cases (3a, 3b, 3c).
  std::optional<DiscFactorization> disc;
  /// 2^ell for 3(c), 1 for the constant cases, absent when unbounded.
  std::optional<Int> period;
  /// Number of 2-adic roots: 0, 1 or 2.
  unsigned infinite_branches = 0;

  bool is_bounded() const { return period.has_value(); }
  bool is_constant() const {
    return case_tag == CaseTag::kCase1ConstZero ||
           case_tag == CaseTag::kCase5ConstZero;
  }
  bool is_case3c() const { return case_tag == CaseTag::kCase3cBounded; }
  /// ell of the discriminant factorization; throws std::domain_error when
  /// there is none (D == 0 or not case 3).
  unsigned long ell() const;
};

Classification classify(const QuadraticPoly& f);

/// The constant valuation for the constant cases (the even-reduction
/// offset), otherwise nullopt.
std::optional<Valuation> constant_valuation(const Classification& cls);

}  // namespace quadval

#endif  // QUADVAL_CLASSIFIER_HPP
