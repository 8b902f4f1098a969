#include <doctest.h>

#include <random>

#include "coxinv/polynomial.hpp"

using namespace coxinv;

namespace {

IntPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 6), coeff(-9, 9);
  std::vector<BigInt> c(len(rng));
  for (auto& x : c) x = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("addition") {
  CHECK(IntPoly{1, 1} + IntPoly{0, 1} == IntPoly{1, 2});
  CHECK(IntPoly{0, 1, 0, 1} + IntPoly{} == IntPoly{0, 1, 0, 1});
  CHECK(IntPoly{0, 1, 0, 1} + IntPoly{0, 1, 0, 1} == IntPoly{0, 2, 0, 2});
  CHECK((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(IntPoly{1, 1} * IntPoly{1, 0} == IntPoly{1, 1});
  CHECK(IntPoly{0, 0, 1} * IntPoly{1, 0, 1, 0, 1} == IntPoly{0, 0, 1, 0, 1, 0, 1});
  CHECK(IntPoly{1, 1} * IntPoly{1, 1} == IntPoly{1, 2, 1});
  CHECK((IntPoly{1, 1} * IntPoly{}).is_zero());
}

TEST_CASE("shift") {
  CHECK(shift(IntPoly::one(), 4) == IntPoly::monomial(4));
  CHECK(shift(IntPoly{0, 1, 0, 1}, 2) == IntPoly{0, 0, 0, 1, 0, 1});
  CHECK(shift(IntPoly{}, 7).is_zero());
}

TEST_CASE("odd geometric blocks") {
  CHECK(odd_geometric(1) == IntPoly{0, 1});
  CHECK(odd_geometric(3) == IntPoly{0, 1, 0, 1, 0, 1});
  CHECK(odd_geometric(0).is_zero());
  const IntPoly t2_minus_1{-1, 0, 1};
  for (std::size_t k = 1; k <= 50; ++k) {
    CHECK(evaluate_at_one(odd_geometric(k)) == BigInt(k));
    CHECK(odd_geometric(k) * t2_minus_1 == IntPoly::monomial(2 * k + 1) - IntPoly{0, 1});
  }
}

TEST_CASE("windowed product equals plain product") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = random_poly(rng);
    const std::size_t k = rng() % 9;
    CHECK(mul_odd_geometric(a, k) == a * odd_geometric(k));
  }
}

TEST_CASE("evaluation at one") {
  CHECK(evaluate_at_one(IntPoly{1, 2, 0, 1}) == 4);
  CHECK(evaluate_at_one(IntPoly{}) == 0);
  CHECK(evaluate_at_one(IntPoly::monomial(4)) == 1);
}

TEST_CASE("reversal") {
  CHECK(reverse(IntPoly{0, 1, 0, 1}, 4) == IntPoly{0, 1, 0, 1});
  CHECK(reverse(IntPoly{1, 2}, 2) == IntPoly{0, 2, 1});
  CHECK_THROWS_AS(reverse(IntPoly{1, 2, 3}, 1), std::invalid_argument);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly p = random_poly(rng);
    const std::size_t d = static_cast<std::size_t>(std::max<std::ptrdiff_t>(p.degree(), 0)) + rng() % 4;
    CHECK(reverse(reverse(p, d), d) == p);
  }
}

TEST_CASE("ring laws on random inputs and normalization") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (const IntPoly& r : {a + b, a - b, a * b, shift(a, 3), scale(a, 0)}) {
      if (!r.is_zero()) CHECK(r.coeffs().back() != 0);
    }
  }
}

TEST_CASE("big coefficients stay exact") {
  IntPoly p{1, 1};
  for (int i = 0; i < 7; ++i) p = p * p;  // (1 + t)^128
  CHECK(evaluate_at_one(p) == (BigInt(1) << 128));
  CHECK(p[64] == BigInt("23951146041928082866135587776380551750"));
}

TEST_CASE("exact division") {
  CHECK(divide_exact(IntPoly{2, 4}, 2) == IntPoly{1, 2});
  CHECK_THROWS_AS(divide_exact(IntPoly{2, 3}, 2), std::domain_error);
}

TEST_CASE("text and json") {
  CHECK(to_string(IntPoly{1, 2, 0, 1}) == "1 + 2t + t^3");
  CHECK(to_string(IntPoly{}) == "0");
  const IntPoly big_p = IntPoly::monomial(3, BigInt("123456789012345678901234567890"));
  const auto j = to_json(big_p);
  CHECK(j["variable"] == "t");
  CHECK(j["coeffs"][3] == "123456789012345678901234567890");
  CHECK(poly_from_json(j) == big_p);
}
