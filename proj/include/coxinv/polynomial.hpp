#pragma once

// Dense univariate polynomials in t with arbitrary-precision integer
// coefficients. Every length polynomial in the library is an IntPoly.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace coxinv {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly one() { return IntPoly{1}; }
  static IntPoly monomial(std::size_t exponent, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  // Smallest exponent with a nonzero coefficient; -1 for zero.
  std::ptrdiff_t low_degree() const;

  // Coefficient of t^i; zero past the stored range.
  const BigInt& operator[](std::size_t i) const;

  std::span<const BigInt> coeffs() const { return coeffs_; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);

private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const BigInt& factor);

// t^k * a(t)
IntPoly shift(const IntPoly& a, std::size_t k);

// t + t^3 + ... + t^(2k-1); zero for k = 0.
IntPoly odd_geometric(std::size_t k);

// a(t) * odd_geometric(k) as a running window sum, O(deg a) instead of O(k deg a).
IntPoly mul_odd_geometric(const IntPoly& a, std::size_t k);

BigInt evaluate_at_one(const IntPoly& a);

// Coefficient i of the result is coefficient (top_degree - i) of a.
// Throws std::invalid_argument when top_degree < degree(a).
IntPoly reverse(const IntPoly& a, std::size_t top_degree);

// Divides every coefficient by d; throws std::domain_error if one is not divisible.
IntPoly divide_exact(const IntPoly& a, const BigInt& d);

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return sub(a, b); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

// "1 + 2t + t^3"; "0" for the zero polynomial.
std::string to_string(const IntPoly& p);

// {"variable":"t","coeffs":["c0","c1",...]} with decimal-string coefficients.
nlohmann::json to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

}  // namespace coxinv
