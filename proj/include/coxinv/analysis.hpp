#pragma once

// Unimodality and log-concavity of coefficient sequences, and the scan for
// involution length profiles that fail to be unimodal.

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxinv/polynomial.hpp"

namespace coxinv {

// values[i] is the coefficient of t^(start + step * i).
struct Profile {
  int start = 0;
  int step = 1;
  std::vector<BigInt> values;

  friend bool operator==(const Profile&, const Profile&) = default;
};

// x_1 <= ... <= x_j >= ... >= x_N for some j. Internal zeros count, so
// [1,0,1] is not unimodal.
bool is_unimodal(const std::vector<BigInt>& x);
bool is_unimodal(const Profile& p);

// x_i^2 >= x_{i-1} x_{i+1} at every interior index.
bool is_log_concave(const std::vector<BigInt>& x);
bool is_log_concave(const Profile& p);

bool is_palindromic(const std::vector<BigInt>& x);

struct ParityProfiles {
  Profile odd;
  Profile even;
};

// Splits by exponent parity (step 2) and trims zeros at both ends.
ParityProfiles parity_profiles(const IntPoly& poly);

// Every coefficient from the lowest to the highest nonzero one (step 1).
Profile full_profile(const IntPoly& poly);

// Inverse of parity_profiles.
IntPoly interleave(const ParityProfiles& profiles);

std::vector<BigInt> to_bigints(const std::vector<std::int64_t>& v);
std::string format_values(const std::vector<BigInt>& v);  // "[1,0,1]"

struct ScanScope {
  int max_a = 10;        // A_1 .. A_max_a
  int max_b = 10;        // B_3 .. B_max_b
  int max_d = 10;        // D_4 .. D_max_d
  int max_dihedral = 20; // I2(3) .. I2(max_dihedral); B_2 is I2(4)
  bool exceptional = true;
};

struct ScanEntry {
  std::string key;     // "B6 aggregate even", "D8 class (m=1,e=2)", "E6 class A1^2"
  std::string parity;  // "odd" or "even"
  Profile profile;
};

struct ScanReport {
  std::vector<ScanEntry> failures;  // sorted by key
  std::set<std::string> expected;
  std::vector<std::string> missing;  // expected but unimodal or out of scope
  std::vector<std::string> extra;    // non-unimodal but not expected
  std::size_t profiles_scanned = 0;

  bool matches() const { return missing.empty() && extra.empty(); }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// The known non-unimodal profiles, keyed as in ScanEntry, restricted to a scope.
std::set<std::string> known_failures(const ScanScope& scope);

ScanReport scan_counterexamples(const ScanScope& scope = {});

}  // namespace coxinv
