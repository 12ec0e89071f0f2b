#ifndef QUADVAL_OPERATORS_HPP
#define QUADVAL_OPERATORS_HPP

// Structural operators on quadratics and their effect on valuations:
//
//   translate  (tau^s f)(n)  = f(n - s)
//   dilate     (delta^s f)(n) = f(s n)
//   S-forward  n^2 + b n + a c  ->  a n^2 + b n + c     (a odd)
//   S-backward a n^2 + b n + c  ->  n^2 + b n + a c
//
// Translation rotates the period table by s; the S operator permutes it by
// r -> a^{-1} r. Every bounded quadratic with ell >= 2 is the image of a
// monic n^2 + 2n + C under one translation followed by one S step.

#include <string>
#include <vector>

#include "quadval/core_arith.hpp"
#include "quadval/poly.hpp"

namespace quadval {

struct OperatorDescriptor {
  enum class Kind { kTranslate, kDilate, kSForward, kSBackward };
  Kind kind;
  Int parameter;

  /// "TRANSLATE(-52)", "S_FORWARD(5)", ...
  std::string to_string() const;
  friend bool operator==(const OperatorDescriptor&,
                         const OperatorDescriptor&) = default;
};

enum class SDirection { kForward, kBackward };

QuadraticPoly translate(const QuadraticPoly& f, const Int& s);

/// Throws std::invalid_argument when s == 0.
QuadraticPoly dilate(const QuadraticPoly& f, const Int& s);

/// Throws std::domain_error when a is even, when forward is applied to a
/// non-monic f or one whose constant term a does not divide, or when
/// backward is applied to f with leading coefficient other than a.
QuadraticPoly s_operator(const QuadraticPoly& f, const Int& a,
                         SDirection direction);

QuadraticPoly apply(const QuadraticPoly& f, const OperatorDescriptor& op);
QuadraticPoly apply(QuadraticPoly f, const std::vector<OperatorDescriptor>& ops);

/// table(tau^s f)[(r + s) mod 2^ell] == table(f)[r] for every r.
/// Throws std::domain_error unless f is case 3(c).
bool table_translate_law(const QuadraticPoly& f, const Int& s);

/// nu2(S^a f (n)) == nu2(f(a n)) on [0, 2^{ell+2}) and
/// table(S^a f)[a^{-1} r mod 2^ell] == table(f)[r].
/// Throws std::domain_error on S-forward precondition violations or when f
/// is not case 3(c).
bool table_s_law(const QuadraticPoly& f, const Int& a);

struct Canonicalization {
  /// n^2 + 2n + C, a type (ell, 1) quadratic.
  QuadraticPoly canonical;
  /// {TRANSLATE(1 - b/2), S_FORWARD(a)}; applying them to `canonical`
  /// reproduces the input exactly.
  std::vector<OperatorDescriptor> ops;
};

/// Throws std::domain_error unless f is case 3(c) with ell >= 2 and its
/// coefficients are not all even.
Canonicalization canonicalize_to_type_ell_1(const QuadraticPoly& f);

}  // namespace quadval

#endif  // QUADVAL_OPERATORS_HPP
