#include <doctest.h>

#include "coxinv/analysis.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/recurrence.hpp"
#include "support.hpp"

using namespace coxinv;
using testsupport::big;

TEST_CASE("class structure") {
  const auto four = dihedral_classes(4);
  REQUIRE(four.classes.size() == 3);
  CHECK(four.classes[0].poly == IntPoly{0, 1, 0, 1});
  CHECK(four.classes[1].poly == IntPoly{0, 1, 0, 1});
  CHECK(four.classes[2].poly == IntPoly::monomial(4));
  const auto three = dihedral_classes(3);
  REQUIRE(three.classes.size() == 1);
  CHECK(three.classes[0].poly == IntPoly{0, 2, 0, 1});
  CHECK(dihedral_classes(5).classes[0].poly == IntPoly{0, 2, 0, 2, 0, 1});
  CHECK_THROWS_AS(dihedral_classes(2), std::invalid_argument);
  for (int n = 3; n <= 40; ++n) CHECK(dihedral_classes(n).classes.size() == (n % 2 ? 1u : 3u));
}

TEST_CASE("aggregates") {
  CHECK(dihedral_involution_poly(4) == IntPoly{1, 2, 0, 2, 1});
  CHECK(dihedral_involution_poly(3) == IntPoly{1, 2, 0, 1});
  CHECK(dihedral_involution_poly(6) == IntPoly{1, 2, 0, 2, 0, 2, 1});
  // I2(3) is W(A_2) and I2(4) is W(B_2)
  CHECK(dihedral_involution_poly(3) == involution_poly(CoxeterType::A(2)));
  CHECK(dihedral_involution_poly(4) == involution_poly(CoxeterType::B(2)));
  const auto pp = parity_profiles(dihedral_involution_poly(4));
  CHECK(pp.odd.values == big({2, 2}));
  CHECK(pp.even.values == big({1, 0, 1}));
}

TEST_CASE("closed form equals breadth-first oracle") {
  for (int n = 3; n <= 200; ++n) {
    const IntPoly oracle = dihedral_bfs_oracle(n);
    CHECK(dihedral_involution_poly(n) == oracle);
    CHECK(evaluate_at_one(oracle) == (n % 2 ? n + 1 : n + 2));
    CHECK(oracle.degree() == n);
    CHECK(oracle[n] == 1);
  }
  CHECK_THROWS_AS(dihedral_bfs_oracle(10001), std::invalid_argument);
}

TEST_CASE("literal aggregate formula") {
  for (int n = 4; n <= 100; n += 2) CHECK(*dihedral_literal_formula(n) == dihedral_involution_poly(n));
  for (int n = 3; n <= 99; n += 2) CHECK_FALSE(dihedral_literal_formula(n));
  CHECK(dihedral_errata_note().find("not a polynomial") != std::string::npos);
}
