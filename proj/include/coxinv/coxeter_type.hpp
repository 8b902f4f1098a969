#pragma once

#include <string>
#include <string_view>

namespace coxinv {

enum class Family { A, B, D, I2, E, F, H };

// Tagged irreducible finite Coxeter group descriptor. For I2 the parameter
// is the dihedral order parameter m (group order 2m); otherwise it is the rank.
struct CoxeterType {
  Family family = Family::A;
  int n = 1;

  static CoxeterType A(int n) { return {Family::A, n}; }
  static CoxeterType B(int n) { return {Family::B, n}; }
  static CoxeterType D(int n) { return {Family::D, n}; }
  static CoxeterType I2(int m) { return {Family::I2, m}; }
  static CoxeterType E6() { return {Family::E, 6}; }
  static CoxeterType E7() { return {Family::E, 7}; }
  static CoxeterType E8() { return {Family::E, 8}; }
  static CoxeterType F4() { return {Family::F, 4}; }
  static CoxeterType H3() { return {Family::H, 3}; }
  static CoxeterType H4() { return {Family::H, 4}; }

  bool is_classical() const { return family == Family::A || family == Family::B || family == Family::D; }
  bool is_exceptional() const {
    return family == Family::E || family == Family::F || family == Family::H;
  }

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
  friend auto operator<=>(const CoxeterType&, const CoxeterType&) = default;
};

// "A5", "B6", "D8", "I2(5)", "E6", "F4", "H3".
std::string name(const CoxeterType& t);

// Parses the names produced by name(), plus "I5" as a synonym for "I2(5)".
// Throws std::invalid_argument for anything that is not a finite Coxeter type.
CoxeterType parse_coxeter_type(std::string_view text);

// Single-letter family selector ("A", "B", "D") combined with a rank.
CoxeterType classical_type(std::string_view family, int n);

const char* family_letter(Family f);

}  // namespace coxinv
