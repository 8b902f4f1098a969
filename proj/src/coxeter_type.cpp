#include "coxinv/coxeter_type.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace coxinv {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::H: return "H";
  }
  return "?";
}

std::string name(const CoxeterType& t) {
  if (t.family == Family::I2) return "I2(" + std::to_string(t.n) + ")";
  return family_letter(t.family) + std::to_string(t.n);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("unrecognized Coxeter type '" + std::string(whole) + "'");
  return v;
}

void validate(const CoxeterType& t, std::string_view whole) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.n >= 1; break;
    case Family::B: ok = t.n >= 1; break;
    case Family::D: ok = t.n >= 1; break;
    case Family::I2: ok = t.n >= 3; break;
    case Family::E: ok = t.n >= 6 && t.n <= 8; break;
    case Family::F: ok = t.n == 4; break;
    case Family::H: ok = t.n == 3 || t.n == 4; break;
  }
  if (!ok) throw std::invalid_argument("no finite Coxeter group of type '" + std::string(whole) + "'");
}

}  // namespace

CoxeterType parse_coxeter_type(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Coxeter type");
  const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string_view rest = text.substr(1);
  CoxeterType t;
  switch (head) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'H': t.family = Family::H; break;
    case 'I':
      t.family = Family::I2;
      if (rest.size() > 3 && rest.substr(0, 2) == "2(" && rest.back() == ')')
        rest = rest.substr(2, rest.size() - 3);
      break;
    default: throw std::invalid_argument("unrecognized Coxeter type '" + std::string(text) + "'");
  }
  t.n = parse_int(rest, text);
  validate(t, text);
  return t;
}

CoxeterType classical_type(std::string_view family, int n) {
  CoxeterType t;
  if (family == "A" || family == "a")
    t.family = Family::A;
  else if (family == "B" || family == "b")
    t.family = Family::B;
  else if (family == "D" || family == "d")
    t.family = Family::D;
  else
    throw std::invalid_argument("expected a classical family A, B or D, got '" + std::string(family) + "'");
  t.n = n;
  if (n < 1) throw std::invalid_argument("rank must be positive");
  return t;
}

}  // namespace coxinv
