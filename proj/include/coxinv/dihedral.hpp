#pragma once

// Involutions of the dihedral group I2(n) of order 2n: closed forms and a
// breadth-first word-length oracle.

#include <optional>
#include <string>
#include <vector>

#include "coxinv/polynomial.hpp"

namespace coxinv {

struct DihedralClass {
  std::string label;
  IntPoly poly;
};

struct DihedralClassSet {
  int n = 0;
  std::vector<DihedralClass> classes;
};

// Even n: two reflection classes and the central involution; odd n: one
// reflection class. Throws std::invalid_argument for n < 3.
DihedralClassSet dihedral_classes(int n);

// 1 plus every class polynomial.
IntPoly dihedral_involution_poly(int n);

// 1 + t^n + 2t(1 - t^n)/(1 - t^2) expanded, when that is a polynomial
// (even n); nullopt for odd n.
std::optional<IntPoly> dihedral_literal_formula(int n);

// Text printed by --show-errata for odd n.
std::string dihedral_errata_note();

// Enumerates all 2n elements by breadth-first search from the identity over
// the two generating reflections. Throws std::invalid_argument for n < 3 or
// n > 10000.
IntPoly dihedral_bfs_oracle(int n);

}  // namespace coxinv
