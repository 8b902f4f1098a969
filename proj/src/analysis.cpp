#include "coxinv/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "coxinv/dihedral.hpp"
#include "coxinv/exceptional_data.hpp"
#include "coxinv/recurrence.hpp"

namespace coxinv {

bool is_unimodal(const std::vector<BigInt>& x) {
  std::size_t i = 0;
  while (i + 1 < x.size() && x[i] <= x[i + 1]) ++i;
  while (i + 1 < x.size() && x[i] >= x[i + 1]) ++i;
  return i + 1 >= x.size();
}

bool is_unimodal(const Profile& p) { return is_unimodal(p.values); }

bool is_log_concave(const std::vector<BigInt>& x) {
  for (std::size_t i = 1; i + 1 < x.size(); ++i)
    if (x[i] * x[i] < x[i - 1] * x[i + 1]) return false;
  return true;
}

bool is_log_concave(const Profile& p) { return is_log_concave(p.values); }

bool is_palindromic(const std::vector<BigInt>& x) { return std::equal(x.begin(), x.end(), x.rbegin()); }

namespace {

Profile trimmed(const IntPoly& poly, int parity, int step) {
  Profile p;
  p.step = step;
  const auto c = poly.coeffs();
  std::ptrdiff_t lo = -1, hi = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((step == 2 && static_cast<int>(i % 2) != parity) || c[i] == 0) continue;
    if (lo < 0) lo = static_cast<std::ptrdiff_t>(i);
    hi = static_cast<std::ptrdiff_t>(i);
  }
  if (lo < 0) return p;
  p.start = static_cast<int>(lo);
  for (std::ptrdiff_t i = lo; i <= hi; i += step) p.values.push_back(c[i]);
  return p;
}

}  // namespace

ParityProfiles parity_profiles(const IntPoly& poly) { return {trimmed(poly, 1, 2), trimmed(poly, 0, 2)}; }

Profile full_profile(const IntPoly& poly) { return trimmed(poly, 0, 1); }

IntPoly interleave(const ParityProfiles& profiles) {
  IntPoly out;
  for (const Profile* p : {&profiles.odd, &profiles.even}) {
    for (std::size_t i = 0; i < p->values.size(); ++i)
      out += IntPoly::monomial(static_cast<std::size_t>(p->start) + p->step * i, p->values[i]);
  }
  return out;
}

std::vector<BigInt> to_bigints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

std::string format_values(const std::vector<BigInt>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::set<std::string> known_failures(const ScanScope& scope) {
  std::set<std::string> out;
  if (scope.max_b >= 6) out.insert("B6 aggregate even");
  if (scope.max_d >= 8) {
    out.insert("D8 class (m=1,e=2)");
    out.insert("D8 class (m=1,e=4)");
  }
  for (int m = 4; m <= scope.max_dihedral; m += 2) out.insert(name(CoxeterType::I2(m)) + " aggregate even");
  if (scope.exceptional) {
    for (const char* k : {"E8 aggregate even", "F4 aggregate even", "H4 aggregate even", "E6 class A1^2",
                          "E8 class A1^2", "E8 class D6", "F4 class A1^2", "F4 class B2", "H4 class A1^2"})
      out.insert(k);
  }
  return out;
}

ScanReport scan_counterexamples(const ScanScope& scope) {
  ScanReport report;
  report.expected = known_failures(scope);
  std::set<std::string> seen_failures;

  auto examine = [&](const std::string& key, const IntPoly& poly, bool is_class) {
    const ParityProfiles pp = parity_profiles(poly);
    for (const auto& [parity, prof] : {std::pair{"odd", &pp.odd}, std::pair{"even", &pp.even}}) {
      if (prof->values.empty()) continue;
      ++report.profiles_scanned;
      if (is_unimodal(*prof)) continue;
      const std::string full_key = is_class ? key : key + " " + parity;
      if (seen_failures.insert(full_key).second) report.failures.push_back({full_key, parity, *prof});
    }
  };
  auto mkey = [](int m) { return " class (m=" + std::to_string(m) + ")"; };
  auto mekey = [](int m, int e) { return " class (m=" + std::to_string(m) + ",e=" + std::to_string(e) + ")"; };

  for (int n = 1; n <= scope.max_a; ++n) {
    const std::string g = name(CoxeterType::A(n));
    for (int m = 1; 2 * m <= n + 1; ++m) examine(g + mkey(m), class_poly_A(n + 1, m), true);
    examine(g + " aggregate", involution_poly(CoxeterType::A(n)), false);
  }
  for (int n = 3; n <= scope.max_b; ++n) {
    const std::string g = name(CoxeterType::B(n));
    for (int m = 0; 2 * m <= n; ++m)
      for (int e = 0; 2 * m + e <= n; ++e)
        if (m + e > 0) examine(g + mekey(m, e), class_poly_B(n, m, e), true);
    examine(g + " aggregate", involution_poly(CoxeterType::B(n)), false);
  }
  for (int n = 4; n <= scope.max_d; ++n) {
    const std::string g = name(CoxeterType::D(n));
    for (int m = 0; 2 * m <= n; ++m)
      for (int e = 0; 2 * m + e <= n; e += 2)
        if (m + e > 0) examine(g + mekey(m, e), class_poly_D(n, m, e).per_class(), true);
    examine(g + " aggregate", involution_poly(CoxeterType::D(n)), false);
  }
  for (int m = 3; m <= scope.max_dihedral; ++m) {
    const std::string g = name(CoxeterType::I2(m));
    for (const auto& c : dihedral_classes(m).classes) examine(g + " class " + c.label, c.poly, true);
    examine(g + " aggregate", dihedral_involution_poly(m), false);
  }
  if (scope.exceptional) {
    for (const CoxeterType grp : exceptional_groups()) {
      const std::string g = name(grp);
      for (const auto& c : embedded_table(grp).classes)
        examine(g + " class " + c.record.label, class_to_polynomial(c.record), true);
      const ParityPolys agg = aggregate_from_classes(grp);
      examine(g + " aggregate", agg.odd + agg.even, false);
    }
  }

  std::sort(report.failures.begin(), report.failures.end(),
            [](const ScanEntry& a, const ScanEntry& b) { return a.key < b.key; });
  for (const auto& k : report.expected)
    if (!seen_failures.count(k)) report.missing.push_back(k);
  for (const auto& k : seen_failures)
    if (!report.expected.count(k)) report.extra.push_back(k);
  return report;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) {
    std::vector<std::string> vals;
    for (const auto& v : f.profile.values) vals.push_back(v.str());
    fails.push_back({{"key", f.key}, {"parity", f.parity}, {"start", f.profile.start}, {"profile", vals}});
  }
  return {{"profiles_scanned", profiles_scanned},
          {"failures", fails},
          {"expected", std::vector<std::string>(expected.begin(), expected.end())},
          {"missing", missing},
          {"extra", extra},
          {"matches", matches()}};
}

std::string ScanReport::to_text() const {
  std::ostringstream os;
  os << "profiles scanned: " << profiles_scanned << "\n";
  os << "non-unimodal profiles:\n";
  for (const auto& f : failures) {
    os << "  " << f.key << " [" << f.parity << ", from t^" << f.profile.start << "] " << format_values(f.profile.values)
       << (expected.count(f.key) ? "" : "  (not in the known list)") << "\n";
  }
  os << "missing from scan:";
  if (missing.empty()) os << " none";
  for (const auto& k : missing) os << "\n  " << k;
  os << "\nunexpected:";
  if (extra.empty()) os << " none";
  for (const auto& k : extra) os << "\n  " << k;
  os << "\n" << (matches() ? "scan matches the known list" : "scan differs from the known list") << "\n";
  return os.str();
}

}  // namespace coxinv
