#include "coxinv/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace coxinv {

namespace {

using Matrix = std::vector<std::vector<ExactScalar>>;

Matrix from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  Matrix c(rank, std::vector<ExactScalar>(rank));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) {
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  }
  return c;
}

struct VectorLess {
  bool operator()(const RootVector& x, const RootVector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), lex_less);
  }
};

bool is_positive_vector(const RootVector& v) {
  for (const auto& x : v)
    if (x.sign() < 0) return false;
  return true;
}

RootVector reflect(const Matrix& c, int i, const RootVector& v) {
  ExactScalar pairing;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += v[j] * c[i][j];
  RootVector out = v;
  out[i] -= pairing;
  return out;
}

}  // namespace

Matrix cartan_matrix(CoxeterType type) {
  switch (type.family) {
    case Family::E: {
      std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (type.n >= 7) edges.emplace_back(6, 7);
      if (type.n == 8) edges.emplace_back(7, 8);
      return from_edges(type.n, edges);
    }
    case Family::F: {
      Matrix c = from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -2;
      return c;
    }
    case Family::H: {
      std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}};
      if (type.n == 4) edges.emplace_back(3, 4);
      Matrix c = from_edges(type.n, edges);
      c[0][1] = -ExactScalar::phi();
      c[1][0] = -ExactScalar::phi();
      return c;
    }
    default: break;
  }
  throw std::invalid_argument("no exceptional root system for " + name(type));
}

RootSystem build_root_system(CoxeterType type) {
  if (!type.is_exceptional()) throw std::invalid_argument("build_root_system: exceptional types only, got " + name(type));
  const Matrix c = cartan_matrix(type);
  const int rank = type.n;

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  std::map<RootVector, int, VectorLess> index;
  std::deque<int> queue;
  for (int i = 0; i < rank; ++i) {
    RootVector v(rank);
    v[i] = 1;
    index.emplace(v, i);
    rs.roots.push_back(std::move(v));
    rs.simple_indices.push_back(i);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      RootVector v = reflect(c, i, rs.roots[r]);
      if (!is_positive_vector(v) || index.count(v)) continue;
      index.emplace(v, static_cast<int>(rs.roots.size()));
      rs.roots.push_back(std::move(v));
      queue.push_back(static_cast<int>(rs.roots.size()) - 1);
    }
  }
  rs.positive_count = static_cast<int>(rs.roots.size());
  if (2 * rs.positive_count > 256) throw std::logic_error("root indices do not fit in RootIndex");
  for (int r = 0; r < rs.positive_count; ++r) {
    RootVector v = rs.roots[r];
    for (auto& x : v) x = -x;
    index.emplace(v, static_cast<int>(rs.roots.size()));
    rs.roots.push_back(std::move(v));
  }

  rs.reflection_tables.assign(rank, std::vector<RootIndex>(rs.roots.size()));
  for (int i = 0; i < rank; ++i) {
    for (int r = 0; r < rs.root_count(); ++r) {
      auto it = index.find(reflect(c, i, rs.roots[r]));
      if (it == index.end()) throw std::logic_error("root set not closed under reflection in " + name(type));
      rs.reflection_tables[i][r] = static_cast<RootIndex>(it->second);
    }
  }
  return rs;
}

}  // namespace coxinv
