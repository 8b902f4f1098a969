#include "coxinv/exact_scalar.hpp"

#include <sstream>

namespace coxinv {

namespace {

int rsign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

int ExactScalar::sign() const {
  const int sa = rsign(a_);
  const int sb = rsign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // opposite signs: compare a^2 with 5 b^2
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * 5;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  const Rational a = a_ * o.a_ + b_ * o.b_ * 5;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

std::string to_string(const ExactScalar& x) {
  std::ostringstream os;
  os << x.rational_part();
  if (x.sqrt5_part() != Rational(0)) os << (x.sqrt5_part() < 0 ? " - " : " + ") << abs(x.sqrt5_part()) << "*sqrt5";
  return os.str();
}

}  // namespace coxinv
