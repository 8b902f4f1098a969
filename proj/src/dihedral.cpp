#include "coxinv/dihedral.hpp"

#include <deque>
#include <stdexcept>

namespace coxinv {

namespace {

void require_order(int n) {
  if (n < 3) throw std::invalid_argument("I2(n) needs n >= 3, got " + std::to_string(n));
}

}  // namespace

DihedralClassSet dihedral_classes(int n) {
  require_order(n);
  DihedralClassSet set;
  set.n = n;
  if (n % 2 == 0) {
    const IntPoly reflections = odd_geometric(static_cast<std::size_t>(n / 2));
    set.classes.push_back({"reflections through s", reflections});
    set.classes.push_back({"reflections through t", reflections});
    set.classes.push_back({"central", IntPoly::monomial(static_cast<std::size_t>(n))});
  } else {
    IntPoly reflections = scale(odd_geometric(static_cast<std::size_t>((n - 1) / 2)), 2);
    reflections += IntPoly::monomial(static_cast<std::size_t>(n));
    set.classes.push_back({"reflections", std::move(reflections)});
  }
  return set;
}

IntPoly dihedral_involution_poly(int n) {
  IntPoly total = IntPoly::one();
  for (const auto& c : dihedral_classes(n).classes) total += c.poly;
  return total;
}

std::optional<IntPoly> dihedral_literal_formula(int n) {
  require_order(n);
  // 2t(1 - t^n)/(1 - t^2) is a polynomial only when t^2 - 1 divides t^n - 1
  if (n % 2 != 0) return std::nullopt;
  return IntPoly::one() + IntPoly::monomial(static_cast<std::size_t>(n)) +
         scale(odd_geometric(static_cast<std::size_t>(n / 2)), 2);
}

std::string dihedral_errata_note() {
  return "I2(n), odd n: the displayed aggregate 1 + t^n + 2t(1 - t^n)/(1 - t^2) is not a polynomial. "
         "The reflections have lengths 1,1,3,3,...,n-2,n-2,n, so the aggregate used here is "
         "1 + t^n + 2t(1 - t^(n-1))/(1 - t^2) = 1 + 2(t + t^3 + ... + t^(n-2)) + t^n, "
         "confirmed by breadth-first enumeration.";
}

IntPoly dihedral_bfs_oracle(int n) {
  require_order(n);
  if (n > 10000) throw std::invalid_argument("dihedral_bfs_oracle: n above 10000");
  // (k, f) is rho^k sigma^f; sigma rho sigma = rho^-1
  const int order = 2 * n;
  auto index = [n](int k, int f) { return f * n + ((k % n) + n) % n; };
  auto multiply = [n](int a, int b) {
    const int ka = a % n, fa = a / n, kb = b % n, fb = b / n;
    const int k = fa == 0 ? ka + kb : ka - kb;
    return (fa ^ fb) * n + ((k % n) + n) % n;
  };
  const int gens[2] = {index(0, 1), index(1, 1)};
  std::vector<int> dist(static_cast<std::size_t>(order), -1);
  std::deque<int> queue{index(0, 0)};
  dist[index(0, 0)] = 0;
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    for (int g : gens) {
      const int v = multiply(w, g);
      if (dist[v] < 0) {
        dist[v] = dist[w] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<BigInt> coeffs;
  for (int w = 0; w < order; ++w) {
    if (multiply(w, w) != index(0, 0)) continue;
    if (coeffs.size() <= static_cast<std::size_t>(dist[w])) coeffs.resize(dist[w] + 1);
    coeffs[dist[w]] += 1;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace coxinv
