#ifndef QUADVAL_POLY_HPP
#define QUADVAL_POLY_HPP

#include <ostream>
#include <string>

#include "quadval/core_arith.hpp"

namespace quadval {

/// f(n) = a n^2 + b n + c with integer coefficients and a != 0.
class QuadraticPoly {
 public:
  /// Throws std::invalid_argument when a == 0.
  QuadraticPoly(Int a, Int b, Int c);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  Int operator()(const Int& n) const { return (a_ * n + b_) * n + c_; }

  /// b^2 - 4ac.
  Int discriminant() const { return b_ * b_ - 4 * a_ * c_; }

  /// "a n^2 + b n + c" with signs folded, e.g. "4n^2 + 13n - 25".
  std::string to_string() const;

  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;

 private:
  Int a_;
  Int b_;
  Int c_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticPoly& f);

}  // namespace quadval

#endif  // QUADVAL_POLY_HPP
