#pragma once

#include <cstdint>
#include <vector>

#include "coxinv/coxeter_type.hpp"
#include "coxinv/exact_scalar.hpp"

namespace coxinv {

using RootIndex = std::uint8_t;
using RootVector = std::vector<ExactScalar>;

// Roots are stored by their coordinates in the basis of simple roots.
// Indices 0..positive_count-1 are the positive roots in breadth-first order
// from the simple roots (so the simple roots come first); index
// i + positive_count holds the negative of root i.
struct RootSystem {
  CoxeterType type;
  int rank = 0;
  std::vector<RootVector> roots;
  int positive_count = 0;
  std::vector<int> simple_indices;
  // reflection_tables[g][r] = index of s_g(root r)
  std::vector<std::vector<RootIndex>> reflection_tables;

  int root_count() const { return static_cast<int>(roots.size()); }
  bool is_positive(int r) const { return r < positive_count; }
  int negate(int r) const { return r < positive_count ? r + positive_count : r - positive_count; }
};

// Generalized Cartan matrix: s_i(alpha_j) = alpha_j - C[i][j] alpha_i.
std::vector<std::vector<ExactScalar>> cartan_matrix(CoxeterType type);

// E6, E7, E8, F4, H3 or H4; throws std::invalid_argument otherwise.
RootSystem build_root_system(CoxeterType type);

}  // namespace coxinv
