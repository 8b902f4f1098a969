#pragma once

// Elements a + b*sqrt(5) of Q(sqrt 5) with exact rational parts.

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace coxinv {

using Rational = boost::rational<std::int64_t>;

class ExactScalar {
public:
  ExactScalar() = default;
  ExactScalar(std::int64_t a) : a_(a) {}  // NOLINT: integers embed implicitly
  ExactScalar(Rational a, Rational b = 0) : a_(a), b_(b) {}

  // The golden ratio (1 + sqrt 5) / 2.
  static ExactScalar phi() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return a_ == Rational(0) && b_ == Rational(0); }
  // Sign of the real number a + b*sqrt5: -1, 0 or 1.
  int sign() const;

  ExactScalar operator-() const { return {-a_, -b_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

private:
  Rational a_{0};
  Rational b_{0};
};

// Strict ordering on (a, b) pairs, for use as a map key; not the real order.
inline bool lex_less(const ExactScalar& x, const ExactScalar& y) {
  return x.rational_part() != y.rational_part() ? x.rational_part() < y.rational_part()
                                               : x.sqrt5_part() < y.sqrt5_part();
}

std::string to_string(const ExactScalar& x);

}  // namespace coxinv
