#include "quadval/operators.hpp"

#include <stdexcept>

#include "quadval/classifier.hpp"
#include "quadval/closed_form.hpp"

namespace quadval {

std::string OperatorDescriptor::to_string() const {
  const char* name = "?";
  switch (kind) {
    case Kind::kTranslate: name = "TRANSLATE"; break;
    case Kind::kDilate: name = "DILATE"; break;
    case Kind::kSForward: name = "S_FORWARD"; break;
    case Kind::kSBackward: name = "S_BACKWARD"; break;
  }
  return std::string(name) + "(" + parameter.get_str() + ")";
}

QuadraticPoly translate(const QuadraticPoly& f, const Int& s) {
  const Int& a = f.a();
  const Int& b = f.b();
  return QuadraticPoly(a, b - 2 * a * s, f.c() + a * s * s - b * s);
}

QuadraticPoly dilate(const QuadraticPoly& f, const Int& s) {
  if (s == 0) throw std::invalid_argument("dilation by 0 is not quadratic");
  return QuadraticPoly(f.a() * s * s, f.b() * s, f.c());
}

QuadraticPoly s_operator(const QuadraticPoly& f, const Int& a,
                         SDirection direction) {
  if (mpz_even_p(a.get_mpz_t())) {
    throw std::domain_error("S operator needs an odd multiplier, got " +
                            a.get_str());
  }
  if (direction == SDirection::kBackward) {
    if (f.a() != a) {
      throw std::domain_error("S backward: leading coefficient " +
                              f.a().get_str() + " is not " + a.get_str());
    }
    return QuadraticPoly(1, f.b(), a * f.c());
  }
  if (f.a() != 1) {
    throw std::domain_error("S forward: polynomial is not monic");
  }
  if (!mpz_divisible_p(f.c().get_mpz_t(), a.get_mpz_t())) {
    throw std::domain_error("S forward: " + a.get_str() +
                            " does not divide the constant term " +
                            f.c().get_str() + "; the image is not integral");
  }
  return QuadraticPoly(a, f.b(), f.c() / a);
}

QuadraticPoly apply(const QuadraticPoly& f, const OperatorDescriptor& op) {
  using Kind = OperatorDescriptor::Kind;
  switch (op.kind) {
    case Kind::kTranslate: return translate(f, op.parameter);
    case Kind::kDilate: return dilate(f, op.parameter);
    case Kind::kSForward:
      return s_operator(f, op.parameter, SDirection::kForward);
    case Kind::kSBackward:
      return s_operator(f, op.parameter, SDirection::kBackward);
  }
  throw std::logic_error("unknown operator kind");
}

QuadraticPoly apply(QuadraticPoly f,
                    const std::vector<OperatorDescriptor>& ops) {
  for (const auto& op : ops) f = apply(f, op);
  return f;
}

bool table_translate_law(const QuadraticPoly& f, const Int& s) {
  const PeriodTable before = period_table(f);
  const PeriodTable after = period_table(translate(f, s));
  if (after.ell != before.ell) return false;
  for (std::size_t r = 0; r < before.size(); ++r) {
    const Int moved = mod_pow2(Int(static_cast<unsigned long>(r)) + s,
                               before.ell);
    if (after[mpz_get_ui(moved.get_mpz_t())] != before[r]) return false;
  }
  return true;
}

bool table_s_law(const QuadraticPoly& f, const Int& a) {
  const QuadraticPoly image = s_operator(f, a, SDirection::kForward);
  const PeriodTable before = period_table(f);
  const PeriodTable after = period_table(image);
  if (after.ell != before.ell) return false;

  const unsigned long span = 1UL << (before.ell + 2);
  for (unsigned long n = 0; n < span; ++n) {
    const Int x(n);
    if (nu2(image(x)) != nu2(f(a * x))) return false;
  }
  const Int inv = inverse_mod_pow2(a, before.ell);
  for (std::size_t r = 0; r < before.size(); ++r) {
    const Int moved =
        mod_pow2(inv * Int(static_cast<unsigned long>(r)), before.ell);
    if (after[mpz_get_ui(moved.get_mpz_t())] != before[r]) return false;
  }
  return true;
}

Canonicalization canonicalize_to_type_ell_1(const QuadraticPoly& f) {
  const Classification cls = classify(f);
  if (!cls.is_case3c()) {
    throw std::domain_error("canonical form needs a bounded case 3(c) input");
  }
  if (cls.ell() < 2) {
    throw std::domain_error("canonical form needs ell >= 2");
  }
  if (cls.even_offset != 0) {
    throw std::domain_error(
        "canonical form needs coefficients that are not all even");
  }
  const Int shift = 1 - f.b() / 2;
  const Int constant = -shift * shift + 2 * shift + f.a() * f.c();
  using Kind = OperatorDescriptor::Kind;
  return Canonicalization{
      .canonical = QuadraticPoly(1, 2, constant),
      .ops = {{Kind::kTranslate, shift}, {Kind::kSForward, f.a()}},
  };
}

}  // namespace quadval
