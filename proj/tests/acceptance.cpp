// One line per acceptance criterion. Exit status is nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "coxinv/analysis.hpp"
#include "coxinv/classical_oracle.hpp"
#include "coxinv/coxeter_engine.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/exceptional_data.hpp"
#include "coxinv/recurrence.hpp"
#include "support.hpp"

using namespace coxinv;

namespace {

constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kEngineSeconds = 600.0;
constexpr double kScanSeconds = 600.0;
constexpr double kRankFiftySeconds = 10.0;
constexpr int kRandomPairs = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

std::vector<ClassRecord> sorted(std::vector<ClassRecord> v) {
  std::sort(v.begin(), v.end(), class_order);
  return v;
}

Outcome worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const IntPoly rec = class_poly_A(5, 2);
  const IntPoly oracle = oracle_class_poly(Family::A, 5, {2, 0});
  const double s = seconds_since(t0);
  o.require(rec[6] == 4, "coefficient of t^6 is " + rec[6].str());
  o.require(rec == oracle, "oracle gives " + to_string(oracle));
  o.require(s < kWorkedExampleSeconds, "took " + secs(s));
  o.detail = o.pass ? to_string(rec) + " in " + secs(s) : o.detail;
  return o;
}

Outcome base_cases() {
  Outcome o;
  const IntPoly t{0, 1};
  const std::vector<std::pair<std::string, std::pair<IntPoly, IntPoly>>> quoted{
      {"L_{2,1}", {class_poly_A(2, 1), t}},
      {"L_{1,0,1}", {class_poly_B(1, 0, 1), t}},
      {"L_{2,1,0}", {class_poly_B(2, 1, 0), IntPoly{0, 1, 0, 1}}},
      {"L_{2,0,1}", {class_poly_B(2, 0, 1), IntPoly{0, 1, 0, 1}}},
      {"L_{2,0,2}", {class_poly_B(2, 0, 2), IntPoly::monomial(4)}},
      {"D_{2,1,0}", {d_poly(2, 1, 0), IntPoly{0, 2}}},
      {"D_{2,0,1}", {d_poly(2, 0, 1), IntPoly{1, 0, 1}}},
      {"D_{2,0,2}", {d_poly(2, 0, 2), IntPoly::monomial(2)}},
      {"L_W(A2)", {involution_poly(CoxeterType::A(2)), IntPoly{1, 2, 0, 1}}},
      {"L_W(B2)", {involution_poly(CoxeterType::B(2)), IntPoly{1, 2, 0, 2, 1}}},
      {"L_W(D2)", {involution_poly(CoxeterType::D(2)), IntPoly{1, 2}}},
      {"L_(B\\D)2", {b_minus_d_poly(2), IntPoly{1, 0, 1}}},
  };
  for (const auto& [name, pair] : quoted)
    o.require(pair.first == pair.second,
              name + " computed " + to_string(pair.first) + ", quoted " + to_string(pair.second));
  if (o.pass) o.detail = "12 base polynomials";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  int compared = 0;
  for (int n = 2; n <= 8; ++n)
    for (const auto& [type, poly] : oracle_class_table(Family::A, n)) {
      ++compared;
      o.require(class_poly_A(n, type.m) == poly, "A letters " + std::to_string(n) + " m=" + std::to_string(type.m));
    }
  for (int n = 1; n <= 6; ++n)
    for (const auto& [type, poly] : oracle_class_table(Family::B, n)) {
      ++compared;
      o.require(class_poly_B(n, type.m, type.e) == poly,
                "B" + std::to_string(n) + " (" + std::to_string(type.m) + "," + std::to_string(type.e) + ")");
    }
  for (int n = 2; n <= 7; ++n)
    for (const auto& [type, poly] : oracle_class_table(Family::D, n)) {
      ++compared;
      o.require(class_poly_D(n, type.m, type.e).poly == poly,
                "D" + std::to_string(n) + " (" + std::to_string(type.m) + "," + std::to_string(type.e) + ")");
    }
  for (int n = 1; n <= 6; ++n)
    for (const auto& [type, poly] : oracle_lambda_table(n)) {
      ++compared;
      o.require(d_poly(n, type.m, type.e) == poly,
                "d_poly " + std::to_string(n) + " (" + std::to_string(type.m) + "," + std::to_string(type.e) + ")");
    }
  const double s = seconds_since(t0);
  o.require(s < kOracleSeconds, "took " + secs(s));
  if (o.pass) o.detail = std::to_string(compared) + " class polynomials in " + secs(s);
  return o;
}

Outcome reduction_suite() {
  Outcome o;
  int involutions = 0;
  for (int n = 2; n <= 6; ++n)
    for_each_involution(Family::B, n, [&](const SignedPerm& x) {
      ++involutions;
      const ReductionReport r = check_reduction(x);
      if (!r.all_hold()) o.require(false, "reduction fails at " + to_cycle_string(x));
    });
  const auto b3 = testsupport::all_signed_perms(3);
  int pairs = 0;
  for (const auto& g : b3)
    for (const auto& h : b3) {
      ++pairs;
      if (!check_ngh(g, h)) o.require(false, "length identity fails at " + to_cycle_string(g) + ", " + to_cycle_string(h));
    }
  const auto b5 = testsupport::all_signed_perms(5);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, b5.size() - 1);
  for (int k = 0; k < kRandomPairs; ++k) {
    ++pairs;
    const auto& g = b5[pick(rng)];
    const auto& h = b5[pick(rng)];
    if (!check_ngh(g, h)) o.require(false, "length identity fails at " + to_cycle_string(g) + ", " + to_cycle_string(h));
  }
  if (o.pass) o.detail = std::to_string(involutions) + " involutions, " + std::to_string(pairs) + " pairs";
  return o;
}

Outcome b6_profile() {
  Outcome o;
  const ParityProfiles pp = parity_profiles(involution_poly(CoxeterType::B(6)));
  const auto expected = testsupport::big({1, 10, 20, 27, 35, 41, 49, 51, 55, 54, 55, 51, 49, 41, 35, 27, 20, 10, 1});
  o.require(pp.even.values == expected, "even profile " + format_values(pp.even.values));
  o.require(!is_unimodal(pp.even), "reported unimodal");
  if (o.pass) o.detail = format_values(pp.even.values);
  return o;
}

Outcome product_formulas() {
  Outcome o;
  for (int n = 2; n <= 10; n += 2) {
    const std::string k = std::to_string(n);
    const IntPoly a = fpf_product_poly(Family::A, n);
    const IntPoly b = fpf_product_poly(Family::B, n);
    const IntPoly d = fpf_product_poly(Family::D, n);
    o.require(a == class_poly_A(n, n / 2), "A on " + k + " letters");
    o.require(b == class_poly_B(n, n / 2, 0), "B" + k);
    o.require(d == class_poly_D(n, n / 2, 0).poly, "D" + k);
    for (const auto& [fam, p] : {std::pair{"A", &a}, std::pair{"B", &b}}) {
      const Profile prof = parity_profiles(*p).odd.values.empty() ? parity_profiles(*p).even : parity_profiles(*p).odd;
      o.require(is_log_concave(prof), std::string(fam) + k + " not log-concave");
      o.require(is_palindromic(prof.values), std::string(fam) + k + " not symmetric");
    }
  }
  const Profile d4 = parity_profiles(fpf_product_poly(Family::D, 4)).even;
  o.require(d4.values == testsupport::big({2, 2, 4, 2, 2}), "D4 profile " + format_values(d4.values));
  o.require(!is_log_concave(d4), "D4 reported log-concave");
  if (o.pass) o.detail = "n = 2..10; D4 " + format_values(d4.values);
  return o;
}

Outcome engine_tables(bool allow_large) {
  Outcome o;
  std::vector<CoxeterType> groups{CoxeterType::E6(), CoxeterType::F4(), CoxeterType::H3(), CoxeterType::H4()};
  const auto t0 = Clock::now();
  auto compare = [&](CoxeterType g) {
    const RootSystem rs = build_root_system(g);
    InvolutionCensus census = involution_classes(rs, EngineLimits{allow_large});
    const auto reference = embedded_table(g).records();
    assign_labels(census.classes, reference);
    o.require(sorted(census.classes) == sorted(reference), name(g) + " differs");
  };
  for (const auto g : groups) compare(g);
  const double s = seconds_since(t0);
  o.require(s < kEngineSeconds, "took " + secs(s));
  std::string e7 = "E7 not run (pass --allow-large)";
  if (allow_large) {
    const auto t1 = Clock::now();
    compare(CoxeterType::E7());
    e7 = "E7 in " + secs(seconds_since(t1));
  }
  if (o.pass) o.detail = "E6 F4 H3 H4 in " + secs(s) + "; " + e7;
  return o;
}

Outcome e8_consistency() {
  Outcome o;
  int checks = 0;
  for (const auto& c : consistency_report(CoxeterType::E8())) {
    ++checks;
    o.require(c.pass, c.check + (c.detail.empty() ? "" : " [" + c.detail + "]"));
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome dihedral() {
  Outcome o;
  for (int n = 3; n <= 200; ++n)
    o.require(dihedral_involution_poly(n) == dihedral_bfs_oracle(n), "I2(" + std::to_string(n) + ")");
  const ParityProfiles pp = parity_profiles(dihedral_involution_poly(4));
  o.require(pp.odd.values == testsupport::big({2, 2}), "odd " + format_values(pp.odd.values));
  o.require(pp.even.values == testsupport::big({1, 0, 1}), "even " + format_values(pp.even.values));
  const auto notes = errata_notes();
  const bool noted = std::find(notes.begin(), notes.end(), dihedral_errata_note()) != notes.end();
  o.require(noted, "odd-n note missing from the errata");
  if (o.pass) o.detail = "n = 3..200; I2(4) odd [2,2] even [1,0,1]";
  return o;
}

Outcome involution_counts() {
  Outcome o;
  std::vector<BigInt> count{0, 1, 2};
  for (int n = 3; n <= 14; ++n) {
    const BigInt got = evaluate_at_one(involution_poly(CoxeterType::A(n - 1)));
    const BigInt want = count[n - 1] + (n - 1) * count[n - 2];
    o.require(got == want, "I(" + std::to_string(n) + ") = " + got.str());
    count.push_back(got);
  }
  for (int n = 1; n <= 10; ++n) {
    const auto deg = involution_poly(CoxeterType::B(n)).degree();
    o.require(deg == n * n, "deg L_W(B" + std::to_string(n) + ") = " + std::to_string(deg));
  }
  if (o.pass) o.detail = "I(14) = " + count.back().str();
  return o;
}

Outcome conjecture_scan() {
  Outcome o;
  const auto t0 = Clock::now();
  const ScanReport r = scan_counterexamples();
  const double s = seconds_since(t0);
  for (const auto& m : r.missing) o.require(false, "missing " + m);
  for (const auto& e : r.extra) o.require(false, "extra " + e);
  o.require(s < kScanSeconds, "took " + secs(s));
  if (o.pass) o.detail = std::to_string(r.failures.size()) + " failures in " + secs(s);
  return o;
}

Outcome rank_fifty() {
  Outcome o;
  const auto t0 = Clock::now();
  const IntPoly p = involution_poly(CoxeterType::B(50));
  const double s = seconds_since(t0);
  o.require(p.degree() == 2500, "degree " + std::to_string(p.degree()));
  o.require(s < kRankFiftySeconds, "took " + secs(s));
  if (o.pass)
    o.detail = secs(s) + " with cross-check; brute force stops at rank " +
               std::to_string(oracle_rank_guard(Family::B));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool allow_large = std::getenv("COXINV_ALLOW_LARGE") != nullptr;
  for (int i = 1; i < argc; ++i)
    if (std::string_view(argv[i]) == "--allow-large") allow_large = true;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example class_poly_A(5,2)", worked_example},
      {"quoted base polynomials", base_cases},
      {"recurrences equal brute force", oracle_equivalence},
      {"reduction identities", reduction_suite},
      {"B6 even profile is not unimodal", b6_profile},
      {"fixed-point-free product formulas", product_formulas},
      {"exceptional tables from the engine", [&] { return engine_tables(allow_large); }},
      {"E8 table consistency", e8_consistency},
      {"dihedral closed forms", dihedral},
      {"involution counts", involution_counts},
      {"non-unimodal scan", conjecture_scan},
      {"B50 aggregate", rank_fifty},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first
              << "  (" << o.detail << ")" << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
