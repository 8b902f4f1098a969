#include "coxinv/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "coxinv/analysis.hpp"
#include "coxinv/classical_oracle.hpp"
#include "coxinv/coxeter_engine.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/exceptional_data.hpp"
#include "coxinv/recurrence.hpp"

namespace coxinv {

namespace {

using Cases = std::vector<CaseResult>;

std::string mekey(int n, int m, int e) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(e) + ")";
}

void compare_polys(Cases& out, const std::string& suite, const std::string& name, const IntPoly& got,
                   const IntPoly& want) {
  out.push_back({suite, name, got == want, got == want ? "" : "got " + to_string(got) + ", expected " + to_string(want)});
}

Cases classical() {
  Cases out;
  const std::string s = "classical";
  for (int n = 1; n <= 8; ++n) {
    const auto table = oracle_class_table(Family::A, n);
    for (int m = 0; 2 * m <= n; ++m) {
      auto it = table.find(CycleType{m, 0});
      compare_polys(out, s, "A letters=" + std::to_string(n) + " m=" + std::to_string(m), class_poly_A(n, m),
                    it == table.end() ? IntPoly{} : it->second);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto table = oracle_class_table(Family::B, n);
    for (int m = 0; 2 * m <= n; ++m)
      for (int e = 0; 2 * m + e <= n; ++e) {
        auto it = table.find(CycleType{m, e});
        compare_polys(out, s, "B " + mekey(n, m, e), class_poly_B(n, m, e),
                      it == table.end() ? IntPoly{} : it->second);
      }
  }
  for (int n = 2; n <= 7; ++n) {
    const auto table = oracle_class_table(Family::D, n);
    for (int m = 0; 2 * m <= n; ++m)
      for (int e = 0; 2 * m + e <= n; ++e) {
        auto it = table.find(CycleType{m, e});
        compare_polys(out, s, "D " + mekey(n, m, e), class_poly_D(n, m, e).poly,
                      it == table.end() ? IntPoly{} : it->second);
      }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto table = oracle_lambda_table(n);
    for (int m = 0; 2 * m <= n; ++m)
      for (int e = 0; 2 * m + e <= n; ++e) {
        auto it = table.find(CycleType{m, e});
        compare_polys(out, s, "d_poly " + mekey(n, m, e), d_poly(n, m, e),
                      it == table.end() ? IntPoly{} : it->second);
      }
  }
  return out;
}

Cases reduction() {
  Cases out;
  const std::string s = "reduction";
  for (int n = 2; n <= 6; ++n) {
    std::size_t total = 0, failed = 0;
    std::string first;
    for_each_involution(Family::B, n, [&](const SignedPerm& x) {
      ++total;
      const auto rep = check_reduction(x);
      if (!rep.all_hold()) {
        if (failed++ == 0) first = to_json(rep).dump();
      }
    });
    out.push_back({s, "reduction identities, all involutions of W(B" + std::to_string(n) + ")", failed == 0,
                   std::to_string(total) + " involutions, " + std::to_string(failed) + " failures" +
                       (first.empty() ? "" : ", first: " + first)});
  }
  {
    // every pair in rank 3
    std::vector<SignedPerm> elems;
    std::vector<int> p{1, 2, 3};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        std::vector<int> im(p);
        for (int i = 0; i < 3; ++i)
          if (signs >> i & 1) im[i] = -im[i];
        elems.emplace_back(im);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t failed = 0;
    for (const auto& g : elems)
      for (const auto& h : elems) failed += check_ngh(g, h) ? 0 : 1;
    out.push_back({s, "root-set product identity, all pairs in rank 3", failed == 0,
                   std::to_string(elems.size() * elems.size()) + " pairs, " + std::to_string(failed) + " failures"});
  }
  {
    std::mt19937 rng(20240611);
    auto random_elem = [&](int n) {
      std::vector<int> im(n);
      for (int i = 0; i < n; ++i) im[i] = i + 1;
      std::shuffle(im.begin(), im.end(), rng);
      for (int& v : im)
        if (rng() & 1) v = -v;
      return SignedPerm(im);
    };
    std::size_t failed = 0;
    for (int k = 0; k < 1000; ++k) failed += check_ngh(random_elem(5), random_elem(5)) ? 0 : 1;
    out.push_back({s, "root-set product identity, 1000 random pairs in rank 5", failed == 0,
                   std::to_string(failed) + " failures"});
  }
  return out;
}

Cases recurrence() {
  Cases out;
  const std::string s = "recurrence";
  for (Family f : {Family::A, Family::B, Family::D}) {
    for (int n = 1; n <= 12; ++n) {
      const CoxeterType t{f, n};
      compare_polys(out, s, "aggregate recurrence = class sum, " + name(t), involution_poly_by_recurrence(t),
                    involution_poly_by_class_sum(t));
    }
  }
  for (int n = 1; n <= 12; ++n)
    compare_polys(out, s, "B\\D companion, rank " + std::to_string(n), b_minus_d_by_recurrence(n),
                  b_minus_d_by_class_sum(n));
  {
    BigInt older = 1, prev = 2;
    bool ok = evaluate_at_one(involution_poly(CoxeterType::A(1))) == 2;
    for (int n = 3; n <= 14; ++n) {
      const BigInt want = prev + (n - 1) * older;
      ok = ok && evaluate_at_one(involution_poly(CoxeterType::A(n - 1))) == want;
      older = prev;
      prev = want;
    }
    out.push_back({s, "involution counts of symmetric groups up to 14 letters", ok, ""});
  }
  {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) ok = ok && involution_poly(CoxeterType::B(n)).degree() == n * n;
    out.push_back({s, "top degree of the B_n aggregate is n^2, n <= 10", ok, ""});
  }
  for (int n = 2; n <= 10; n += 2) {
    compare_polys(out, s, "fixed-point-free product, A letters=" + std::to_string(n), fpf_product_poly(Family::A, n),
                  class_poly_A(n, n / 2));
    compare_polys(out, s, "fixed-point-free product, B" + std::to_string(n), fpf_product_poly(Family::B, n),
                  class_poly_B(n, n / 2, 0));
    compare_polys(out, s, "fixed-point-free product, D" + std::to_string(n), fpf_product_poly(Family::D, n),
                  class_poly_D(n, n / 2, 0).poly);
  }
  return out;
}

Cases dihedral() {
  Cases out;
  const std::string s = "dihedral";
  std::size_t failed = 0;
  std::string first;
  for (int n = 3; n <= 200; ++n) {
    if (dihedral_involution_poly(n) != dihedral_bfs_oracle(n) && failed++ == 0) first = "I2(" + std::to_string(n) + ")";
  }
  out.push_back({s, "closed form = breadth-first oracle, 3 <= n <= 200", failed == 0,
                 failed ? std::to_string(failed) + " failures, first " + first : ""});
  const auto pp = parity_profiles(dihedral_involution_poly(4));
  out.push_back({s, "I2(4) odd profile [2,2]", pp.odd.values == to_bigints({2, 2}), format_values(pp.odd.values)});
  out.push_back({s, "I2(4) even profile [1,0,1]", pp.even.values == to_bigints({1, 0, 1}), format_values(pp.even.values)});
  return out;
}

Cases exceptional(const VerifyOptions& options) {
  Cases out;
  const std::string s = "exceptional";
  std::vector<CoxeterType> groups{CoxeterType::H3(), CoxeterType::F4(), CoxeterType::H4(), CoxeterType::E6()};
  if (options.allow_large) groups.push_back(CoxeterType::E7());
  for (const CoxeterType g : groups) {
    const RootSystem rs = build_root_system(g);
    InvolutionCensus census = involution_classes(rs, EngineLimits{options.allow_large});
    auto reference = embedded_table(g).records();
    assign_labels(census.classes, reference);
    std::sort(reference.begin(), reference.end(), class_order);
    auto engine = census.classes;
    std::sort(engine.begin(), engine.end(), class_order);
    std::string detail;
    if (engine != reference) {
      detail = "engine " + classes_to_json(g, engine).dump() + " vs embedded " + classes_to_json(g, reference).dump();
    }
    out.push_back({s, "engine classes = embedded table, " + name(g), engine == reference, detail});
  }
  for (const CoxeterType g : exceptional_groups()) {
    for (const auto& c : consistency_report(g))
      out.push_back({s, c.group + " data: " + c.check, c.pass, c.detail});
  }
  return out;
}

Cases analysis() {
  Cases out;
  const std::string s = "analysis";
  const auto even = parity_profiles(involution_poly(CoxeterType::B(6))).even;
  const auto want =
      to_bigints({1, 10, 20, 27, 35, 41, 49, 51, 55, 54, 55, 51, 49, 41, 35, 27, 20, 10, 1});
  out.push_back({s, "B6 even profile", even.values == want, format_values(even.values)});
  out.push_back({s, "B6 even profile is not unimodal", !is_unimodal(even), ""});
  const auto d4 = parity_profiles(fpf_product_poly(Family::D, 4)).even;
  out.push_back({s, "D4 fixed-point-free profile [2,2,4,2,2] is not log-concave",
                 d4.values == to_bigints({2, 2, 4, 2, 2}) && !is_log_concave(d4),
                 format_values(d4.values)});
  const ScanReport report = scan_counterexamples();
  std::vector<std::string> parts;
  for (const auto& k : report.missing) parts.push_back("missing " + k);
  for (const auto& k : report.extra) parts.push_back("extra " + k);
  std::string detail;
  for (const auto& p : parts) detail += (detail.empty() ? "" : "; ") + p;
  out.push_back({s, "non-unimodal scan matches the known list", report.matches(), detail});
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classical", "reduction", "recurrence", "dihedral",
                                              "exceptional", "analysis", "all"};
  return names;
}

std::vector<CaseResult> run_suite(const std::string& suite, VerifyOptions options) {
  if (suite == "classical") return classical();
  if (suite == "reduction") return reduction();
  if (suite == "recurrence") return recurrence();
  if (suite == "dihedral") return dihedral();
  if (suite == "exceptional") return exceptional(options);
  if (suite == "analysis") return analysis();
  if (suite == "all") {
    Cases out;
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      auto part = run_suite(name, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace coxinv
