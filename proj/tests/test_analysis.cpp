#include <doctest.h>

#include <random>

#include "coxinv/analysis.hpp"
#include "coxinv/recurrence.hpp"
#include "support.hpp"

using namespace coxinv;
using testsupport::big;

TEST_CASE("unimodality") {
  CHECK(is_unimodal(big({1, 2, 3, 2})));
  CHECK(is_unimodal(big({})));
  CHECK(is_unimodal(big({5})));
  CHECK(is_unimodal(big({3, 3, 3})));
  CHECK_FALSE(is_unimodal(big({1, 0, 1})));
  CHECK_FALSE(is_unimodal(big({1, 10, 20, 27, 35, 41, 49, 51, 55, 54, 55, 51, 49, 41, 35, 27, 20, 10, 1})));
}

TEST_CASE("log-concavity") {
  CHECK_FALSE(is_log_concave(big({2, 2, 4, 2, 2})));
  CHECK(is_log_concave(big({1, 2, 2, 1})));
  CHECK(is_log_concave(big({1, 4, 6, 4, 1})));
  CHECK(is_log_concave(big({})));
  CHECK(is_palindromic(big({1, 2, 1})));
  CHECK_FALSE(is_palindromic(big({1, 2})));
}

TEST_CASE("log-concave positive sequences are unimodal") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> len(1, 12), val(1, 30), root(1, 9);
  int concave = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<BigInt> x(len(rng));
    for (auto& v : x) v = val(rng);
    if (is_log_concave(x)) {
      ++concave;
      CHECK(is_unimodal(x));
    }
    // products of (1 + a t) have real roots, hence log-concave coefficients
    IntPoly p = IntPoly::one();
    for (int k = len(rng); k > 0; --k) p = p * IntPoly{1, root(rng)};
    const std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    CHECK(is_log_concave(c));
    CHECK(is_unimodal(c));
  }
  CHECK(concave > 100);
}

TEST_CASE("parity profiles") {
  const ParityProfiles b2 = parity_profiles(IntPoly{1, 2, 0, 2, 1});
  CHECK(b2.odd == Profile{1, 2, big({2, 2})});
  CHECK(b2.even == Profile{0, 2, big({1, 0, 1})});
  const ParityProfiles mono = parity_profiles(IntPoly::monomial(7));
  CHECK(mono.odd.values == big({1}));
  CHECK(mono.odd.start == 7);
  CHECK(mono.even.values.empty());
  const ParityProfiles zero = parity_profiles(IntPoly{});
  CHECK(zero.odd.values.empty());
  CHECK(zero.even.values.empty());
  CHECK(full_profile(IntPoly{0, 0, 3, 0, 1}) == Profile{2, 1, big({3, 0, 1})});
  CHECK(format_values(big({1, 0, 1})) == "[1,0,1]");
}

TEST_CASE("interleave inverts the parity split") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 20), val(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<BigInt> c(len(rng));
    for (auto& v : c) v = val(rng);
    const IntPoly p(c);
    CHECK(interleave(parity_profiles(p)) == p);
  }
}

TEST_CASE("B6 even profile") {
  const ParityProfiles pp = parity_profiles(involution_poly(CoxeterType::B(6)));
  CHECK(pp.even.values == big({1, 10, 20, 27, 35, 41, 49, 51, 55, 54, 55, 51, 49, 41, 35, 27, 20, 10, 1}));
  CHECK_FALSE(is_unimodal(pp.even));
  CHECK(is_unimodal(pp.odd));
}

TEST_CASE("fixed-point-free products") {
  for (int n = 2; n <= 12; n += 2) {
    for (Family f : {Family::A, Family::B}) {
      const ParityProfiles pp = parity_profiles(fpf_product_poly(f, n));
      const Profile& p = pp.odd.values.empty() ? pp.even : pp.odd;
      CHECK(is_log_concave(p));
      CHECK(is_palindromic(p.values));
      CHECK(is_unimodal(p));
    }
  }
  const ParityProfiles d4 = parity_profiles(fpf_product_poly(Family::D, 4));
  CHECK(d4.even.values == big({2, 2, 4, 2, 2}));
  CHECK_FALSE(is_log_concave(d4.even));
  CHECK(is_unimodal(d4.even));
}

TEST_CASE("scan") {
  ScanScope small;
  small.max_a = 6;
  small.max_b = 6;
  small.max_d = 7;
  small.max_dihedral = 8;
  small.exceptional = false;
  const ScanReport r = scan_counterexamples(small);
  CHECK(r.matches());
  CHECK(r.expected == std::set<std::string>{"B6 aggregate even", "I2(4) aggregate even", "I2(6) aggregate even",
                                            "I2(8) aggregate even"});
  REQUIRE(r.failures.size() == 4);
  CHECK(r.failures[0].key == "B6 aggregate even");
  CHECK(r.to_json()["matches"] == true);

  const ScanReport full = scan_counterexamples();
  CHECK(full.extra.empty());
  CHECK(full.missing == std::vector<std::string>{"E8 aggregate even"});
  CHECK(full.profiles_scanned > 400);
}
