#pragma once

// Polynomial-time recurrences for involution length polynomials of types
// A, B and D, both per cycle type and summed over the whole group.
//
// Conventions: class_poly_A and fpf_product_poly(A, n) take the number of
// letters n (group W(A_{n-1})); involution_poly(A(n)) takes the rank n.
// Keys with negative m or e, or with more cycles than letters, give zero.

#include <compare>
#include <cstddef>
#include <optional>

#include "coxinv/coxeter_type.hpp"
#include "coxinv/polynomial.hpp"

namespace coxinv {

enum class RecurrenceFamily { AClass, BClass, DPoly, ATotal, BTotal, DTotal, BminusDTotal, FpfProduct };

struct RecurrenceKey {
  RecurrenceFamily family = RecurrenceFamily::AClass;
  int n = 0;
  std::optional<int> m;
  std::optional<int> e;
  std::optional<Family> fpf_family;  // only for FpfProduct

  friend bool operator==(const RecurrenceKey&, const RecurrenceKey&) = default;
  friend auto operator<=>(const RecurrenceKey&, const RecurrenceKey&) = default;
};

// Throws std::invalid_argument when the optional fields do not match the family.
void validate(const RecurrenceKey& key);

// Involutions of W(A_{n-1}) with m transpositions.
IntPoly class_poly_A(int n, int m);

// Involutions of W(B_n) with m transpositions and e negative 1-cycles.
IntPoly class_poly_B(int n, int m, int e);

// Sum of t^|Lambda(x)| over W(B_n)-involutions of type (m, e); e of either parity.
IntPoly d_poly(int n, int m, int e);

struct DClassPoly {
  IntPoly poly;
  // True when n = 2m and e = 0: poly is the union of two conjugacy classes
  // of equal length polynomial.
  bool split = false;
  IntPoly per_class() const;
};

// Involutions of W(D_n) of type (m, e); zero for odd e.
DClassPoly class_poly_D(int n, int m, int e);

struct RecurrenceOptions {
  // Recompute by summing class polynomials and compare against the aggregate
  // recurrence; std::logic_error on disagreement.
  bool cross_check = true;
};

// Full involution length polynomial of W(A_n), W(B_n) or W(D_n), identity included.
IntPoly involution_poly(CoxeterType type, RecurrenceOptions options = {});

// Sum of t^|Lambda(x)| over the involutions of W(B_n) outside W(D_n).
IntPoly b_minus_d_poly(int n, RecurrenceOptions options = {});

// The two independent computations behind involution_poly, exposed for tests.
IntPoly involution_poly_by_recurrence(CoxeterType type);
IntPoly involution_poly_by_class_sum(CoxeterType type);
IntPoly b_minus_d_by_recurrence(int n);
IntPoly b_minus_d_by_class_sum(int n);

// Closed-form product for the fixed-point-free class (n = 2m, e = 0).
// For D this is the union of the two classes. Throws std::invalid_argument
// for odd or nonpositive n, or a non-classical family.
IntPoly fpf_product_poly(Family family, int n);

std::size_t recurrence_cache_size();
void clear_recurrence_cache();

}  // namespace coxinv
