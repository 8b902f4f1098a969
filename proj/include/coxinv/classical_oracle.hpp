#pragma once

// Brute-force ground truth for the classical Weyl groups, viewed inside
// W(B_n) as signed permutations. Lengths are counted on roots directly,
// involutions are generated one signed cycle at a time.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "coxinv/budget.hpp"
#include "coxinv/coxeter_type.hpp"
#include "coxinv/polynomial.hpp"
#include "coxinv/signed_perm.hpp"

namespace coxinv {

// m transpositions (+i +j) or (-i -j) and e negative 1-cycles.
struct CycleType {
  int m = 0;
  int e = 0;
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

// A long positive root e_j + sign * e_i with i < j.
struct LongRoot {
  int j = 0;
  int i = 0;
  int sign = 1;
  friend bool operator==(const LongRoot&, const LongRoot&) = default;
  friend auto operator<=>(const LongRoot&, const LongRoot&) = default;
};

// Long positive roots sent negative, in (j, i, sign) order.
std::vector<LongRoot> lambda_set(const SignedPerm& w);
int lambda_size(const SignedPerm& w);
// Number of short roots e_i sent negative, i.e. the number of i with w(i) < 0.
int sigma_size(const SignedPerm& w);

// Coxeter length of w in W(B_n), W(D_n) or W(A_{n-1}) (family of `family`).
// Throws std::invalid_argument when w is not in the requested group.
int length(const SignedPerm& w, Family family);

// nullopt when w is not an involution.
std::optional<CycleType> cycle_type(const SignedPerm& w);

struct EnumerationLimits {
  bool allow_large = false;
};

// Rank guard for the brute-force oracles: 9 letters for A, rank 7 for B/D.
int oracle_rank_guard(Family family);

// Calls visit once per involution (identity included). For Family::A, n is
// the number of letters, so the group is W(A_{n-1}). Family::D yields only
// positive elements, Family::A only unsigned ones.
// Throws BudgetExceeded above the guard unless limits.allow_large.
void for_each_involution(Family family, int n, const std::function<void(const SignedPerm&)>& visit,
                         EnumerationLimits limits = {});

std::vector<SignedPerm> enumerate_involutions(Family family, int n, EnumerationLimits limits = {});

// Number of involutions of W(B_n) with cycle type (m, e): n! / (m! e! (n-2m-e)!).
// Each of the n!/(2^m m! ...) pairings carries 2^m sign choices.
BigInt involution_count_B(int n, int m, int e);

// Every class polynomial of the group at once, keyed by cycle type.
std::map<CycleType, IntPoly> oracle_class_table(Family family, int n, EnumerationLimits limits = {});

// Sum of t^length over involutions of the given cycle type. e must be 0 for A.
IntPoly oracle_class_poly(Family family, int n, CycleType type, EnumerationLimits limits = {});

// Sum of t^|Lambda(x)| over W(B_n)-involutions of type (m, e), any parity of e.
std::map<CycleType, IntPoly> oracle_lambda_table(int n, EnumerationLimits limits = {});
IntPoly oracle_lambda_poly(int n, CycleType type, EnumerationLimits limits = {});

enum class TauKind { PlusFixed, MinusFixed, PlusTransposition, MinusTransposition };

const char* tau_kind_name(TauKind k);

// Decomposition of an involution x around the cycle tau containing n:
// y = x tau, and for transpositions z = c_r y c_r^-1 with c_r = (+n +n-1 ... +r).
struct ReductionReport {
  SignedPerm x;
  TauKind tau_kind = TauKind::PlusFixed;
  int r = 0;  // partner of n when tau is a transposition, else 0
  SignedPerm y;
  std::optional<int> delta;      // Delta_r(y)
  std::optional<SignedPerm> z;   // compressed involution

  int lambda_x = 0, sigma_x = 0, lambda_y = 0, sigma_y = 0;
  std::optional<int> lambda_z, sigma_z;

  bool lambda_branch_holds = false;   // |Lambda(x)| in terms of |Lambda(y)|
  bool sigma_branch_holds = false;    // |Sigma(x)| in terms of |Sigma(y)|
  bool compression_holds = true;      // |Lambda(z)| = |Lambda(y)| - 2 Delta, |Sigma(z)| = |Sigma(y)|
  bool corollary_holds = true;        // |Lambda(x)|, |Sigma(x)| in terms of z
  bool z_fixes_top_two = true;        // z lives in W(B_{n-2})

  bool all_hold() const {
    return lambda_branch_holds && sigma_branch_holds && compression_holds && corollary_holds &&
           z_fixes_top_two;
  }
};

int delta_r(const SignedPerm& y, int r);

// Throws std::invalid_argument for a non-involution.
ReductionReport check_reduction(const SignedPerm& x);

nlohmann::json to_json(const ReductionReport& report);

// |Lambda(gh)| = |Lambda(g)| + |Lambda(h)| - 2 |Lambda(g) n Lambda(h^-1)|, evaluated on root sets.
// Throws std::invalid_argument on rank mismatch.
bool check_ngh(const SignedPerm& g, const SignedPerm& h);

}  // namespace coxinv
