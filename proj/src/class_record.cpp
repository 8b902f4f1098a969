#include "coxinv/class_record.hpp"

#include <tuple>

namespace coxinv {

bool same_shape(const ClassRecord& a, const ClassRecord& b) {
  return a.size == b.size && a.min_length == b.min_length && a.profile == b.profile;
}

IntPoly class_to_polynomial(const ClassRecord& rec) {
  if (rec.profile.empty()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(rec.max_length()) + 1);
  for (std::size_t i = 0; i < rec.profile.size(); ++i) c[rec.min_length + 2 * i] = rec.profile[i];
  return IntPoly(std::move(c));
}

nlohmann::json to_json(const ClassRecord& rec) {
  return {{"label", rec.label}, {"size", rec.size}, {"min_length", rec.min_length}, {"profile", rec.profile}};
}

bool class_order(const ClassRecord& a, const ClassRecord& b) {
  return std::tie(a.min_length, a.size, a.profile, a.label) < std::tie(b.min_length, b.size, b.profile, b.label);
}

}  // namespace coxinv
