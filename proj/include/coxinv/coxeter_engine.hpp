#pragma once

// Exhaustive computations in the finite exceptional Coxeter groups. An
// element is identified by the images of the simple roots; a full root
// permutation is carried only while an element is being processed.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "coxinv/budget.hpp"
#include "coxinv/class_record.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

struct GroupElement {
  std::array<RootIndex, 8> simple_images{};
  int rank = 0;
  int length = 0;

  std::uint64_t key() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Full action of an element on root indices.
using RootPerm = std::vector<RootIndex>;

struct ElementView {
  const RootPerm& perm;
  int length;
  GroupElement element(int rank) const;
};

struct EngineLimits {
  bool allow_large = false;  // admits W(E7)
};

// Known orders of the exceptional groups.
std::uint64_t group_order(CoxeterType type);

// Largest group order enumerate_group accepts under the given limits.
std::uint64_t enumeration_budget(const EngineLimits& limits);

// Throws BudgetExceeded when the group order exceeds the budget.
void check_budget(const RootSystem& rs, const EngineLimits& limits);

// Visits every element once, in order of nondecreasing length.
void enumerate_group(const RootSystem& rs, const std::function<void(const ElementView&)>& visit,
                     EngineLimits limits = {});

// Number of positive roots sent negative.
int length_of(const RootSystem& rs, const RootPerm& perm);
RootPerm identity_perm(const RootSystem& rs);
// (a * b)(r) = a(b(r))
RootPerm compose(const RootPerm& a, const RootPerm& b);
RootPerm perm_of_word(const RootSystem& rs, std::span<const int> word);
bool is_involution(const RootSystem& rs, const RootPerm& perm);
std::uint64_t simple_key(const RootSystem& rs, const RootPerm& perm);

struct InvolutionCensus {
  std::vector<ClassRecord> classes;       // sorted by class_order, labels empty until assigned
  std::vector<RootPerm> representatives;  // a minimal-length member of each class
  std::map<std::uint64_t, int> class_of;  // simple_key -> class index, every involution
  std::uint64_t group_order = 0;
  std::uint64_t involution_count = 0;     // identity excluded
};

// Conjugation orbits of the non-identity involutions.
InvolutionCensus involution_classes(const RootSystem& rs, EngineLimits limits = {});

// Gives each class the label of an equal-shaped reference record, each
// reference used at most once; "unidentified" when none is left.
void assign_labels(std::vector<ClassRecord>& classes, const std::vector<ClassRecord>& reference);

struct LongestElement {
  RootPerm perm;
  int length = 0;
  bool central = false;  // acts as -1 on the roots
};

LongestElement longest_element(const RootSystem& rs);

// Longest element of the parabolic subgroup generated by the given simple
// reflections (0-based).
RootPerm parabolic_longest(const RootSystem& rs, std::span<const int> generators);

// Conjugacy class of a single involution, found by breadth-first conjugation
// under the simple reflections; no group enumeration. Throws BudgetExceeded
// once the class passes max_size elements.
ClassRecord conjugacy_class_record(const RootSystem& rs, const RootPerm& involution, std::uint64_t max_size);

// The class w0 X when w0 is central: equal size, lengths l(w0) - l(x). Located
// among `all` by profile reversal; nullopt if w0 is not central or nothing matches.
std::optional<ClassRecord> longest_element_reflection(const RootSystem& rs, const ClassRecord& rec,
                                                      const std::vector<ClassRecord>& all);

// Same question answered by multiplying a representative by w0 and looking
// up the class of the product.
std::optional<int> longest_element_partner(const RootSystem& rs, const InvolutionCensus& census, int class_index);

}  // namespace coxinv
