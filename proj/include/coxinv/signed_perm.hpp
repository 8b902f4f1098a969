#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxinv {

// Element of W(B_n) as a signed permutation of {+-1, ..., +-n}.
// images()[i] holds w(i+1); w(-i) = -w(i) is implied.
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);
  SignedPerm(std::initializer_list<int> images) : SignedPerm(std::vector<int>(images)) {}

  static SignedPerm identity(int n);

  // Product of disjoint signed cycles in rank n. A cycle {e1*a1, ..., ek*ak}
  // sends a_i to e_i * a_{i+1} (indices mod k), so {+r, +s} is (+r +s),
  // {-r, -s} is (-r -s) and {-r} is a negative 1-cycle.
  static SignedPerm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  // w(i) for a signed letter i != 0.
  int operator()(int i) const { return i > 0 ? images_[i - 1] : -images_[-i - 1]; }

  bool is_identity() const;
  bool is_involution() const;
  // No minus signs anywhere: an element of W(A_{n-1}).
  bool is_unsigned() const;
  // Even number of minus signs: an element of W(D_n).
  bool is_positive() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

private:
  std::vector<int> images_;
};

// (a * b)(i) = a(b(i)). Throws std::invalid_argument on rank mismatch.
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& w);
// c * y * c^-1
SignedPerm conjugate(const SignedPerm& y, const SignedPerm& c);

// Disjoint signed-cycle notation, e.g. "(-1)(-2)(+3 +4)"; "()" for the identity.
std::string to_cycle_string(const SignedPerm& w);

}  // namespace coxinv
