#include "quadval/core_arith.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace quadval {

std::uint64_t Valuation::value() const {
  if (is_infinite()) throw std::logic_error("valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

Valuation Valuation::parse(const std::string& text) {
  if (text == "inf") return infinite();
  if (text.empty() || text.size() > 19) {
    throw std::invalid_argument("malformed valuation: '" + text + "'");
  }
  std::uint64_t v = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed valuation: '" + text + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return Valuation(v);
}

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Valuation nu(unsigned long p, const Int& n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("nu: " + std::to_string(p) + " is not prime");
  }
  if (n == 0) return Valuation::infinite();
  if (p == 2) return Valuation(mpz_scan1(n.get_mpz_t(), 0));
  Int rest;
  Int prime = p;
  return Valuation(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(),
                              prime.get_mpz_t()));
}

Valuation nu2(const Int& n) { return nu(2, n); }

std::int64_t nu2(const Rational& x) {
  if (x == 0) throw std::invalid_argument("nu2: rational argument is zero");
  const auto num = nu2(Int(x.get_num())).value();
  const auto den = nu2(Int(x.get_den())).value();
  return static_cast<std::int64_t>(num) - static_cast<std::int64_t>(den);
}

bool nu_product_check(const Rational& x, const Rational& y) {
  if (x == 0 || y == 0) {
    throw std::invalid_argument("nu_product_check: arguments must be nonzero");
  }
  const Rational product = x * y;
  return nu2(product) == nu2(x) + nu2(y);
}

DiscFactorization factor_discriminant(const Int& discriminant) {
  DiscFactorization out;
  if (discriminant == 0) {
    out.is_zero = true;
    return out;
  }
  const auto twos = nu2(discriminant).value();
  out.ell = twos / 2;
  out.delta = discriminant;
  mpz_tdiv_q_2exp(out.delta.get_mpz_t(), out.delta.get_mpz_t(), 2 * out.ell);
  out.m = static_cast<unsigned>(mpz_fdiv_ui(out.delta.get_mpz_t(), 8));
  return out;
}

bool is_square_in_Z2(const Int& a) {
  if (mpz_even_p(a.get_mpz_t())) {
    throw std::invalid_argument("is_square_in_Z2: argument must be odd");
  }
  return mpz_fdiv_ui(a.get_mpz_t(), 8) == 1;
}

Int pow2(unsigned long i) {
  Int out;
  mpz_setbit(out.get_mpz_t(), i);
  return out;
}

Int mod_pow2(const Int& n, unsigned long i) {
  Int out;
  mpz_fdiv_r_2exp(out.get_mpz_t(), n.get_mpz_t(), i);
  return out;
}

Int inverse_mod_pow2(const Int& a, unsigned long i) {
  if (mpz_even_p(a.get_mpz_t())) {
    throw std::invalid_argument("inverse_mod_pow2: argument must be odd");
  }
  if (i == 0) return 0;
  // Newton iteration x <- x(2 - a x) doubles the number of correct bits;
  // x = 1 is correct modulo 2 for odd a.
  Int x = 1;
  for (unsigned long bits = 1; bits < i;) {
    bits = std::min(2 * bits, i);
    x = mod_pow2(x * (2 - a * x), bits);
  }
  return mod_pow2(x, i);
}

Int parse_int(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size()) {
    throw std::invalid_argument("malformed integer: '" + text + "'");
  }
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("malformed integer: '" + text + "'");
    }
  }
  Int out(text.substr(text[0] == '+' ? 1 : 0), 10);
  return out;
}

bool fits_int64(const Int& x, std::int64_t* out) {
  static const Int lo = Int("-9223372036854775808");
  static const Int hi = Int("9223372036854775807");
  if (x < lo || x > hi) return false;
  if (out != nullptr) {
    // mpz_get_si is exact for values in the long range on LP64.
    *out = static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
  }
  return true;
}

}  // namespace quadval
