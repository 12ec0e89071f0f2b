#include "quadval/poly.hpp"

#include <stdexcept>
#include <utility>

namespace quadval {

QuadraticPoly::QuadraticPoly(Int a, Int b, Int c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0) {
    throw std::invalid_argument("leading coefficient must be nonzero");
  }
}

namespace {

void append_term(std::string& out, const Int& coeff, const char* power,
                 bool first) {
  if (coeff == 0) return;
  const bool negative = coeff < 0;
  Int magnitude = abs(coeff);
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (magnitude != 1 || *power == '\0') out += magnitude.get_str();
  out += power;
}

}  // namespace

std::string QuadraticPoly::to_string() const {
  std::string out;
  append_term(out, a_, "n^2", true);
  append_term(out, b_, "n", false);
  append_term(out, c_, "", false);
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadraticPoly& f) {
  return os << f.to_string();
}

}  // namespace quadval
