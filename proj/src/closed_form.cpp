#include "quadval/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace quadval {
namespace {

const Classification& require_bounded(const Classification& cls) {
  if (!cls.is_case3c()) throw std::domain_error("sequence not bounded");
  return cls;
}

// Residue classes of the closed form, precomputed once per polynomial.
class ClosedForm {
 public:
  explicit ClosedForm(const Classification& cls)
      : ell_(cls.ell()), m_(cls.disc->m), offset_(cls.even_offset) {
    const QuadraticPoly& g = cls.reduced;
    Int k = g.b() / 2;
    if (ell_ == 1) {
      b_mod4_ = static_cast<unsigned>(mpz_fdiv_ui(g.b().get_mpz_t(), 4));
      return;
    }
    const Int inv = inverse_mod_pow2(g.a(), ell_);
    // terminal_[i-1] is the level-i terminating residue, 1 <= i < ell.
    terminal_.reserve(ell_ - 1);
    for (unsigned long i = 1; i < ell_; ++i) {
      terminal_.push_back(mod_pow2(inv * (pow2(i - 1) - k), i));
    }
    last_first_ = mod_pow2(inv * (pow2(ell_ - 1) - k), ell_);
    last_second_ = mod_pow2(inv * (pow2(ell_) - k), ell_);
  }

  Valuation operator()(const Int& n) const {
    if (n < 0) throw std::invalid_argument("closed form needs n >= 0");
    return Valuation(ell_ == 1 ? level_one(n) : general(n)) + offset_;
  }

 private:
  // With k = b/2, a*f(n) = (an + k)^2 - delta, and an + k is odd exactly
  // when n and b/2 have opposite parity. An odd square minus delta has
  // valuation nu2(1 - m) for m in {3,5,7} and 0 for m in {2,6}; an even
  // square minus delta has valuation 1 for m in {2,6} and 0 otherwise.
  std::uint64_t level_one(const Int& n) const {
    const bool n_odd = mpz_odd_p(n.get_mpz_t()) != 0;
    const bool k_odd = b_mod4_ == 2;
    const bool square_odd = n_odd != k_odd;
    switch (m_) {
      case 2:
      case 6:
        return square_odd ? 0 : 1;
      case 3:
      case 7:
        return square_odd ? 1 : 0;
      case 5:
        return square_odd ? 2 : 0;
      default:
        throw std::logic_error("closed form: m=" + std::to_string(m_) +
                               " is not a bounded class");
    }
  }

  std::uint64_t general(const Int& n) const {
    int matches = 0;
    std::uint64_t value = 0;
    for (unsigned long i = 1; i < ell_; ++i) {
      if (mod_pow2(n, i) == terminal_[i - 1]) {
        ++matches;
        value = 2 * (i - 1);
      }
    }
    const Int top = mod_pow2(n, ell_);
    if (top == last_first_) {
      ++matches;
      switch (m_) {
        case 2: case 6: value = 2 * (ell_ - 1); break;
        case 3: case 7: value = 2 * ell_ - 1; break;
        case 5: value = 2 * ell_; break;
        default: throw std::logic_error("closed form: bad m");
      }
    }
    if (top == last_second_) {
      ++matches;
      value = (m_ == 2 || m_ == 6) ? 2 * ell_ - 1 : 2 * (ell_ - 1);
    }
    if (matches != 1) {
      throw std::logic_error("closed form: residue classes matched " +
                             std::to_string(matches) + " times for n=" +
                             n.get_str());
    }
    return value;
  }

  unsigned long ell_;
  unsigned m_;
  unsigned long offset_;
  unsigned b_mod4_ = 0;
  std::vector<Int> terminal_;
  Int last_first_;
  Int last_second_;
};

}  // namespace

Valuation closed_form_valuation(const Classification& cls, const Int& n) {
  return ClosedForm(require_bounded(cls))(n);
}

Valuation closed_form_valuation(const QuadraticPoly& f, const Int& n) {
  return closed_form_valuation(classify(f), n);
}

PeriodTable period_table(const Classification& cls) {
  require_bounded(cls);
  const unsigned long ell = cls.ell();
  if (ell > kMaxTableEll) {
    throw std::length_error("period table with 2^" + std::to_string(ell) +
                            " entries is too large");
  }
  const ClosedForm form(cls);
  PeriodTable table{.ell = ell, .period = *cls.period};
  const std::size_t size = std::size_t{1} << ell;
  table.entries.reserve(size);
  for (std::size_t r = 0; r < size; ++r) {
    table.entries.push_back(form(Int(static_cast<unsigned long>(r))));
  }
  return table;
}

PeriodTable period_table(const QuadraticPoly& f) {
  return period_table(classify(f));
}

Valuation max_valuation(const Classification& cls) {
  require_bounded(cls);
  const unsigned long ell = cls.ell();
  const std::uint64_t top = cls.disc->m == 5 ? 2 * ell : 2 * ell - 1;
  return Valuation(top) + cls.even_offset;
}

Valuation max_valuation(const QuadraticPoly& f) {
  return max_valuation(classify(f));
}

}  // namespace quadval
