#include "coxinv/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxinv {

namespace {

const BigInt kZero{0};

}  // namespace

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(std::size_t exponent, BigInt coeff) {
  if (coeff == 0) return {};
  std::vector<BigInt> c(exponent + 1);
  c[exponent] = std::move(coeff);
  return IntPoly(std::move(c));
}

std::ptrdiff_t IntPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

const BigInt& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  r += b;
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  r -= b;
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly& a, const BigInt& factor) {
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= factor;
  return IntPoly(std::move(out));
}

IntPoly shift(const IntPoly& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<BigInt> out(k + a.coeffs().size());
  std::copy(a.coeffs().begin(), a.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPoly(std::move(out));
}

IntPoly odd_geometric(std::size_t k) {
  if (k == 0) return {};
  std::vector<BigInt> out(2 * k);
  for (std::size_t i = 0; i < k; ++i) out[2 * i + 1] = 1;
  return IntPoly(std::move(out));
}

IntPoly mul_odd_geometric(const IntPoly& a, std::size_t k) {
  if (a.is_zero() || k == 0) return {};
  // out[d] = sum_{i=0}^{k-1} a[d - 1 - 2i], i.e. a sliding sum along one parity class.
  auto ac = a.coeffs();
  const std::size_t n = ac.size();
  std::vector<BigInt> out(n + 2 * k - 1);
  for (std::size_t d = 1; d < out.size(); ++d) {
    BigInt acc = d >= 3 ? out[d - 2] : BigInt{0};
    const std::size_t enter = d - 1;
    if (enter < n) acc += ac[enter];
    if (d >= 2 * k + 1) {
      const std::size_t leave = d - 1 - 2 * k;
      if (leave < n) acc -= ac[leave];
    }
    out[d] = std::move(acc);
  }
  return IntPoly(std::move(out));
}

BigInt evaluate_at_one(const IntPoly& a) {
  BigInt s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

IntPoly reverse(const IntPoly& a, std::size_t top_degree) {
  if (a.degree() > static_cast<std::ptrdiff_t>(top_degree))
    throw std::invalid_argument("reverse: bound " + std::to_string(top_degree) +
                                " is below the degree " + std::to_string(a.degree()));
  if (a.is_zero()) return {};
  std::vector<BigInt> out(top_degree + 1);
  auto ac = a.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) out[top_degree - i] = ac[i];
  return IntPoly(std::move(out));
}

IntPoly divide_exact(const IntPoly& a, const BigInt& d) {
  if (d == 0) throw std::domain_error("divide_exact: division by zero");
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) {
    if (c % d != 0) throw std::domain_error("divide_exact: coefficient not divisible");
    c /= d;
  }
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt mag = c[i] < 0 ? BigInt(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) os << "-";
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"variable", "t"}, {"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("variable", "") != "t" || !j.contains("coeffs") ||
      !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON must be {\"variable\":\"t\",\"coeffs\":[...]}");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else if (c.is_number_integer())
      coeffs.emplace_back(c.get<long long>());
    else
      throw std::invalid_argument("polynomial coefficient must be a decimal string");
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace coxinv
