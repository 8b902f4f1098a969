#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxinv/polynomial.hpp"

namespace coxinv {

// One involution conjugacy class: a label, its size, the minimal length of
// its members and the length profile with parity zeros suppressed.
struct ClassRecord {
  std::string label;
  std::int64_t size = 0;
  int min_length = 0;
  std::vector<std::int64_t> profile;

  int max_length() const { return min_length + 2 * (static_cast<int>(profile.size()) - 1); }

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

// Equality of everything but the label.
bool same_shape(const ClassRecord& a, const ClassRecord& b);

// Coefficient of t^(min_length + 2i) is profile[i].
IntPoly class_to_polynomial(const ClassRecord& rec);

// {"label","size","min_length","profile"}; the group is added by callers that need it.
nlohmann::json to_json(const ClassRecord& rec);

// Ordering used for every class listing: (min_length, size, profile, label).
bool class_order(const ClassRecord& a, const ClassRecord& b);

}  // namespace coxinv
