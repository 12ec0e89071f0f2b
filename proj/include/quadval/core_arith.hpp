#ifndef QUADVAL_CORE_ARITH_HPP
#define QUADVAL_CORE_ARITH_HPP

// 2-adic primitives over arbitrary-precision integers: valuations,
// discriminant factorization D = 4^ell * delta, inverses modulo 2^i and the
// square-in-Z_2 test for odd integers.

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

namespace quadval {

using Int = mpz_class;
using Rational = mpq_class;

/// A p-adic valuation: a non-negative integer, or infinity for the input 0.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t value) : value_(value) {}

  static constexpr Valuation infinite() {
    Valuation v;
    v.value_ = kInfinite;
    return v;
  }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return value_ != kInfinite; }

  /// Finite value; throws std::logic_error when infinite.
  std::uint64_t value() const;

  /// Shift by a finite offset. Infinity absorbs the offset.
  constexpr Valuation operator+(std::uint64_t offset) const {
    return is_infinite() ? *this : Valuation(value_ + offset);
  }

  /// Infinity compares greater than every finite value.
  friend constexpr auto operator<=>(Valuation, Valuation) = default;
  friend constexpr bool operator==(Valuation, Valuation) = default;

  /// Decimal digits, or "inf".
  std::string to_string() const;

  /// Inverse of to_string(); throws std::invalid_argument.
  static Valuation parse(const std::string& text);

 private:
  static constexpr std::uint64_t kInfinite =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

/// Exponent of the largest power of the prime p dividing n (sign ignored).
/// nu(p, 0) is infinite. Throws std::invalid_argument when p is not prime.
Valuation nu(unsigned long p, const Int& n);

/// Shorthand for nu(2, n).
Valuation nu2(const Int& n);

/// Signed 2-adic valuation of a nonzero rational,
/// nu2(numerator) - nu2(denominator).
std::int64_t nu2(const Rational& x);

/// Self-test of multiplicativity on nonzero rationals:
/// nu2(x*y) == nu2(x) + nu2(y). Throws std::invalid_argument on zero input.
bool nu_product_check(const Rational& x, const Rational& y);

/// D = 4^ell * delta with ell maximal, so 4 does not divide delta.
/// m is delta mod 8 taken in [0, 8). For D = 0 only is_zero is meaningful.
struct DiscFactorization {
  bool is_zero = false;
  unsigned long ell = 0;
  Int delta = 0;
  unsigned m = 0;

  friend bool operator==(const DiscFactorization&,
                         const DiscFactorization&) = default;
};

DiscFactorization factor_discriminant(const Int& discriminant);

/// Odd a is a square in Z_2 iff a == 1 (mod 8).
/// Throws std::invalid_argument for even a.
bool is_square_in_Z2(const Int& a);

/// The unique x in [0, 2^i) with a*x == 1 (mod 2^i); 0 when i == 0.
/// Throws std::invalid_argument for even a.
Int inverse_mod_pow2(const Int& a, unsigned long i);

/// Canonical residue of n modulo 2^i, in [0, 2^i).
Int mod_pow2(const Int& n, unsigned long i);

/// 2^i as an arbitrary-precision integer.
Int pow2(unsigned long i);

/// Parses an optionally signed decimal integer of any length.
/// Throws std::invalid_argument on anything else.
Int parse_int(const std::string& text);

/// Returns true and stores the value when x fits in 64 bits.
bool fits_int64(const Int& x, std::int64_t* out = nullptr);

}  // namespace quadval

#endif  // QUADVAL_CORE_ARITH_HPP
