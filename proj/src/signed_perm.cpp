#include "coxinv/signed_perm.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace coxinv {

SignedPerm::SignedPerm(std::vector<int> images) : images_(std::move(images)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw std::invalid_argument("signed permutation images must be a signed rearrangement of 1..n");
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return SignedPerm(std::move(im));
}

SignedPerm SignedPerm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cyc : cycles) {
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int a = std::abs(cyc[i]);
      if (a < 1 || a > n || used[a]) throw std::invalid_argument("cycles must be disjoint letters in 1..n");
      used[a] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const int a = std::abs(cyc[i]);
      const int next = std::abs(cyc[(i + 1) % k]);
      im[a - 1] = cyc[i] < 0 ? -next : next;
    }
  }
  return SignedPerm(std::move(im));
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

bool SignedPerm::is_involution() const {
  for (int i = 1; i <= rank(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

bool SignedPerm::is_unsigned() const {
  for (int v : images_)
    if (v < 0) return false;
  return true;
}

bool SignedPerm::is_positive() const {
  int minus = 0;
  for (int v : images_) minus += v < 0 ? 1 : 0;
  return minus % 2 == 0;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> im(static_cast<std::size_t>(a.rank()));
  for (int i = 1; i <= a.rank(); ++i) im[i - 1] = a(b(i));
  return SignedPerm(std::move(im));
}

SignedPerm inverse(const SignedPerm& w) {
  std::vector<int> im(static_cast<std::size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    im[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPerm(std::move(im));
}

SignedPerm conjugate(const SignedPerm& y, const SignedPerm& c) {
  return compose(compose(c, y), inverse(c));
}

std::string to_cycle_string(const SignedPerm& w) {
  const int n = w.rank();
  std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
  std::ostringstream os;
  for (int start = 1; start <= n; ++start) {
    if (done[start]) continue;
    if (w(start) == start) {
      done[start] = true;
      continue;
    }
    os << "(";
    int a = start;
    bool first = true;
    while (!done[a]) {
      done[a] = true;
      const int img = w(a);
      if (!first) os << " ";
      os << (img < 0 ? "-" : "+") << a;
      first = false;
      a = std::abs(img);
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace coxinv
