#include "quadval/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadval {

std::string_view case_label(CaseTag tag) {
  switch (tag) {
    case CaseTag::kCase1ConstZero: return "1";
    case CaseTag::kCase2Unbounded: return "2";
    case CaseTag::kCase3aUnbounded: return "3(a)";
    case CaseTag::kCase3bUnbounded: return "3(b)";
    case CaseTag::kCase3cBounded: return "3(c)";
    case CaseTag::kCase4Unbounded: return "4";
    case CaseTag::kCase5ConstZero: return "5";
  }
  return "?";
}

std::string_view case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kCase1ConstZero: return "CASE1_CONST_ZERO";
    case CaseTag::kCase2Unbounded: return "CASE2_UNBOUNDED";
    case CaseTag::kCase3aUnbounded: return "CASE3A_UNBOUNDED";
    case CaseTag::kCase3bUnbounded: return "CASE3B_UNBOUNDED";
    case CaseTag::kCase3cBounded: return "CASE3C_BOUNDED";
    case CaseTag::kCase4Unbounded: return "CASE4_UNBOUNDED";
    case CaseTag::kCase5ConstZero: return "CASE5_CONST_ZERO";
  }
  return "?";
}

EvenReduction reduce_even(const QuadraticPoly& f) {
  // a != 0 keeps the minimum finite.
  Valuation shift = nu2(f.a());
  shift = std::min(shift, nu2(f.b()));
  shift = std::min(shift, nu2(f.c()));
  const auto i = shift.value();
  if (i == 0) return {0, f};
  auto scaled = [i](const Int& x) {
    Int out;
    mpz_tdiv_q_2exp(out.get_mpz_t(), x.get_mpz_t(), i);
    return out;
  };
  return {i, QuadraticPoly(scaled(f.a()), scaled(f.b()), scaled(f.c()))};
}

unsigned long Classification::ell() const {
  if (!disc || disc->is_zero) {
    throw std::domain_error("classification has no discriminant exponent");
  }
  return disc->ell;
}

Classification classify(const QuadraticPoly& f) {
  auto [shift, g] = reduce_even(f);
  Classification out{.even_offset = shift, .reduced = g};

  const bool a_odd = mpz_odd_p(g.a().get_mpz_t()) != 0;
  const bool b_odd = mpz_odd_p(g.b().get_mpz_t()) != 0;
  const bool c_odd = mpz_odd_p(g.c().get_mpz_t()) != 0;

  if (!a_odd && !b_odd) {
    out.case_tag = CaseTag::kCase1ConstZero;
    out.period = Int(1);
  } else if (!a_odd) {
    out.case_tag = CaseTag::kCase2Unbounded;
    out.infinite_branches = 1;
  } else if (b_odd) {
    if (c_odd) {
      out.case_tag = CaseTag::kCase5ConstZero;
      out.period = Int(1);
    } else {
      out.case_tag = CaseTag::kCase4Unbounded;
      out.infinite_branches = 2;
    }
  } else {
    out.disc = factor_discriminant(g.discriminant());
    if (out.disc->is_zero) {
      out.case_tag = CaseTag::kCase3aUnbounded;
      out.infinite_branches = 1;
    } else if (out.disc->m == 1) {
      out.case_tag = CaseTag::kCase3bUnbounded;
      out.infinite_branches = 2;
    } else {
      out.case_tag = CaseTag::kCase3cBounded;
      out.period = pow2(out.disc->ell);
    }
  }
  return out;
}

std::optional<Valuation> constant_valuation(const Classification& cls) {
  if (!cls.is_constant()) return std::nullopt;
  return Valuation(cls.even_offset);
}

}  // namespace quadval
