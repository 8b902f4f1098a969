#pragma once

// Test-only oracles that share no code with the library's enumerators.

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "coxinv/coxeter_type.hpp"
#include "coxinv/polynomial.hpp"
#include "coxinv/signed_perm.hpp"

namespace testsupport {

using coxinv::BigInt;
using coxinv::Family;
using coxinv::IntPoly;
using coxinv::SignedPerm;

// Every element of W(B_n), by filtering nothing.
inline std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> im(p);
      for (int i = 0; i < n; ++i)
        if (signs >> i & 1) im[i] = -im[i];
      out.emplace_back(im);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool in_group(const SignedPerm& w, Family f) {
  int minus = 0;
  for (int v : w.images()) minus += v < 0;
  if (f == Family::A) return minus == 0;
  if (f == Family::D) return minus % 2 == 0;
  return true;
}

inline bool squares_to_one(const SignedPerm& w) {
  for (int i = 1; i <= w.rank(); ++i)
    if (w(w(i)) != i) return false;
  return true;
}

// Standard Coxeter generators acting on positions: s_i swaps letters i, i+1;
// for B, s_0 negates letter 1; for D, s_0 sends 1 -> -2, 2 -> -1.
inline std::vector<SignedPerm> generators(Family f, int n) {
  std::vector<SignedPerm> gens;
  auto base = [n] {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return im;
  };
  for (int i = 1; i < n; ++i) {
    auto im = base();
    std::swap(im[i - 1], im[i]);
    gens.emplace_back(im);
  }
  if (f == Family::B) {
    auto im = base();
    im[0] = -1;
    gens.emplace_back(im);
  } else if (f == Family::D && n >= 2) {
    auto im = base();
    im[0] = -2;
    im[1] = -1;
    gens.emplace_back(im);
  }
  return gens;
}

// Word length of every element, by breadth-first search in the Cayley graph.
inline std::map<SignedPerm, int> cayley_lengths(Family f, int n) {
  const auto gens = generators(f, n);
  std::map<SignedPerm, int> dist;
  std::deque<SignedPerm> queue;
  const auto id = SignedPerm::identity(n);
  dist[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    const SignedPerm w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> im(n);
      for (int i = 1; i <= n; ++i) im[i - 1] = w(g(i));
      SignedPerm v(im);
      if (dist.emplace(v, dist[w] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

inline IntPoly poly_from_lengths(const std::vector<int>& lengths) {
  std::vector<BigInt> c;
  for (int l : lengths) {
    if (c.size() <= static_cast<std::size_t>(l)) c.resize(l + 1);
    c[l] += 1;
  }
  return IntPoly(std::move(c));
}

inline std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace testsupport
