#include "coxinv/coxeter_engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace coxinv {

std::uint64_t GroupElement::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < rank; ++i) k |= static_cast<std::uint64_t>(simple_images[i]) << (8 * i);
  return k;
}

GroupElement ElementView::element(int rank) const {
  GroupElement g;
  g.rank = rank;
  g.length = length;
  for (int i = 0; i < rank; ++i) g.simple_images[i] = perm[i];
  return g;
}

std::uint64_t group_order(CoxeterType type) {
  switch (type.family) {
    case Family::E:
      return type.n == 6 ? 51840ULL : type.n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::H: return type.n == 3 ? 120 : 14400;
    default: throw std::invalid_argument("group_order: exceptional types only, got " + name(type));
  }
}

std::uint64_t enumeration_budget(const EngineLimits& limits) { return limits.allow_large ? 3'000'000 : 60'000; }

void check_budget(const RootSystem& rs, const EngineLimits& limits) {
  const std::uint64_t order = group_order(rs.type);
  if (order > enumeration_budget(limits)) {
    std::string msg = "enumerating W(" + name(rs.type) + ") (" + std::to_string(order) + " elements) exceeds the budget";
    if (rs.type.family == Family::E && rs.type.n == 8)
      msg += "; W(E8) is never enumerated, its class data comes from the embedded tables";
    else
      msg += "; pass --allow-large to permit it";
    throw BudgetExceeded(msg);
  }
}

RootPerm identity_perm(const RootSystem& rs) {
  RootPerm p(rs.roots.size());
  std::iota(p.begin(), p.end(), RootIndex{0});
  return p;
}

int length_of(const RootSystem& rs, const RootPerm& perm) {
  int len = 0;
  for (int r = 0; r < rs.positive_count; ++r) len += rs.is_positive(perm[r]) ? 0 : 1;
  return len;
}

RootPerm compose(const RootPerm& a, const RootPerm& b) {
  RootPerm out(b.size());
  for (std::size_t r = 0; r < b.size(); ++r) out[r] = a[b[r]];
  return out;
}

RootPerm perm_of_word(const RootSystem& rs, std::span<const int> word) {
  RootPerm p = identity_perm(rs);
  for (int g : word) p = compose(p, rs.reflection_tables.at(g));
  return p;
}

bool is_involution(const RootSystem& rs, const RootPerm& perm) {
  for (int i = 0; i < rs.rank; ++i)
    if (perm[perm[i]] != i) return false;
  return true;
}

std::uint64_t simple_key(const RootSystem& rs, const RootPerm& perm) {
  std::uint64_t k = 0;
  for (int i = 0; i < rs.rank; ++i) k |= static_cast<std::uint64_t>(perm[i]) << (8 * i);
  return k;
}

void enumerate_group(const RootSystem& rs, const std::function<void(const ElementView&)>& visit,
                     EngineLimits limits) {
  check_budget(rs, limits);
  const std::size_t roots = rs.roots.size();
  std::vector<RootPerm> layer{identity_perm(rs)};
  std::vector<int> where(static_cast<std::size_t>(rs.rank));
  std::uint64_t visited = 0;
  for (int len = 0; !layer.empty(); ++len) {
    for (const auto& p : layer) visit(ElementView{p, len});
    visited += layer.size();
    // s_i w is longer than w exactly when w^-1(alpha_i) is positive; every
    // element of the next layer arises this way, possibly more than once.
    std::vector<RootPerm> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : layer) {
      for (std::size_t r = 0; r < roots; ++r)
        if (p[r] < rs.rank) where[p[r]] = static_cast<int>(r);
      for (int i = 0; i < rs.rank; ++i) {
        if (!rs.is_positive(where[i])) continue;
        const auto& table = rs.reflection_tables[i];
        RootPerm q(roots);
        for (std::size_t r = 0; r < roots; ++r) q[r] = table[p[r]];
        if (seen.insert(simple_key(rs, q)).second) next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  if (visited != group_order(rs.type))
    throw std::logic_error("enumeration of W(" + name(rs.type) + ") found " + std::to_string(visited) + " elements");
}

InvolutionCensus involution_classes(const RootSystem& rs, EngineLimits limits) {
  InvolutionCensus census;
  std::vector<RootPerm> involutions;
  std::vector<int> lengths;
  std::map<std::uint64_t, int> index;
  enumerate_group(
      rs,
      [&](const ElementView& v) {
        ++census.group_order;
        if (v.length == 0 || !is_involution(rs, v.perm)) return;
        index.emplace(simple_key(rs, v.perm), static_cast<int>(involutions.size()));
        involutions.push_back(v.perm);
        lengths.push_back(v.length);
      },
      limits);
  census.involution_count = involutions.size();

  const std::size_t roots = rs.roots.size();
  std::vector<int> orbit_of(involutions.size(), -1);
  std::vector<std::vector<int>> members;
  for (std::size_t start = 0; start < involutions.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int orbit = static_cast<int>(members.size());
    members.emplace_back();
    std::deque<int> queue{static_cast<int>(start)};
    orbit_of[start] = orbit;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      members[orbit].push_back(x);
      const auto& p = involutions[x];
      for (int i = 0; i < rs.rank; ++i) {
        const auto& t = rs.reflection_tables[i];
        RootPerm q(roots);
        for (std::size_t r = 0; r < roots; ++r) q[r] = t[p[t[r]]];
        const int y = index.at(simple_key(rs, q));
        if (orbit_of[y] < 0) {
          orbit_of[y] = orbit;
          queue.push_back(y);
        }
      }
    }
  }

  struct Orbit {
    ClassRecord rec;
    int representative;
    int id;
  };
  std::vector<Orbit> orbits;
  for (std::size_t o = 0; o < members.size(); ++o) {
    int lo = lengths[members[o].front()], hi = lo, rep = members[o].front();
    for (int x : members[o]) {
      if (lengths[x] < lo) {
        lo = lengths[x];
        rep = x;
      }
      hi = std::max(hi, lengths[x]);
    }
    ClassRecord rec;
    rec.size = static_cast<std::int64_t>(members[o].size());
    rec.min_length = lo;
    rec.profile.assign(static_cast<std::size_t>((hi - lo) / 2) + 1, 0);
    for (int x : members[o]) {
      if ((lengths[x] - lo) % 2 != 0)
        throw std::logic_error("class of W(" + name(rs.type) + ") mixes length parities");
      rec.profile[(lengths[x] - lo) / 2] += 1;
    }
    orbits.push_back({std::move(rec), rep, static_cast<int>(o)});
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) { return class_order(a.rec, b.rec); });

  std::vector<int> renumber(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    renumber[orbits[k].id] = static_cast<int>(k);
    census.classes.push_back(orbits[k].rec);
    census.representatives.push_back(involutions[orbits[k].representative]);
  }
  for (const auto& [key, x] : index) census.class_of.emplace(key, renumber[orbit_of[x]]);
  return census;
}

void assign_labels(std::vector<ClassRecord>& classes, const std::vector<ClassRecord>& reference) {
  std::vector<bool> used(reference.size(), false);
  for (auto& c : classes) {
    c.label = "unidentified";
    for (std::size_t k = 0; k < reference.size(); ++k) {
      if (!used[k] && same_shape(c, reference[k])) {
        used[k] = true;
        c.label = reference[k].label;
        break;
      }
    }
  }
}

RootPerm parabolic_longest(const RootSystem& rs, std::span<const int> generators) {
  RootPerm w = identity_perm(rs);
  // l(w s_i) > l(w) exactly when w(alpha_i) is positive
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : generators) {
      if (rs.is_positive(w[i])) {
        w = compose(w, rs.reflection_tables.at(i));
        grew = true;
        break;
      }
    }
  }
  return w;
}

ClassRecord conjugacy_class_record(const RootSystem& rs, const RootPerm& involution, std::uint64_t max_size) {
  if (!is_involution(rs, involution)) throw std::invalid_argument("conjugacy_class_record: not an involution");
  const std::size_t roots = rs.roots.size();
  std::unordered_set<std::uint64_t> seen{simple_key(rs, involution)};
  std::deque<RootPerm> queue{involution};
  std::map<int, std::int64_t> lengths;
  while (!queue.empty()) {
    const RootPerm p = std::move(queue.front());
    queue.pop_front();
    ++lengths[length_of(rs, p)];
    for (int i = 0; i < rs.rank; ++i) {
      const auto& t = rs.reflection_tables[i];
      RootPerm q(roots);
      for (std::size_t r = 0; r < roots; ++r) q[r] = t[p[t[r]]];
      if (!seen.insert(simple_key(rs, q)).second) continue;
      if (seen.size() > max_size)
        throw BudgetExceeded("conjugacy class in W(" + name(rs.type) + ") exceeds " + std::to_string(max_size));
      queue.push_back(std::move(q));
    }
  }
  ClassRecord rec;
  rec.size = static_cast<std::int64_t>(seen.size());
  rec.min_length = lengths.begin()->first;
  rec.profile.assign(static_cast<std::size_t>((lengths.rbegin()->first - rec.min_length) / 2) + 1, 0);
  for (auto [len, count] : lengths) {
    if ((len - rec.min_length) % 2 != 0) throw std::logic_error("conjugacy class mixes length parities");
    rec.profile[(len - rec.min_length) / 2] = count;
  }
  return rec;
}

LongestElement longest_element(const RootSystem& rs) {
  LongestElement w0;
  std::vector<int> all(static_cast<std::size_t>(rs.rank));
  std::iota(all.begin(), all.end(), 0);
  w0.perm = parabolic_longest(rs, all);
  w0.length = length_of(rs, w0.perm);
  w0.central = true;
  for (int r = 0; r < rs.root_count(); ++r)
    if (w0.perm[r] != rs.negate(r)) w0.central = false;
  return w0;
}

std::optional<ClassRecord> longest_element_reflection(const RootSystem& rs, const ClassRecord& rec,
                                                      const std::vector<ClassRecord>& all) {
  const LongestElement w0 = longest_element(rs);
  if (!w0.central) return std::nullopt;
  ClassRecord target;
  target.size = rec.size;
  target.min_length = w0.length - rec.max_length();
  target.profile.assign(rec.profile.rbegin(), rec.profile.rend());
  for (const auto& c : all)
    if (same_shape(c, target)) return c;
  return std::nullopt;
}

std::optional<int> longest_element_partner(const RootSystem& rs, const InvolutionCensus& census, int class_index) {
  const LongestElement w0 = longest_element(rs);
  if (!w0.central) return std::nullopt;
  const RootPerm product = compose(w0.perm, census.representatives.at(class_index));
  if (!is_involution(rs, product)) return std::nullopt;
  auto it = census.class_of.find(simple_key(rs, product));
  if (it == census.class_of.end()) return std::nullopt;
  return it->second;
}

}  // namespace coxinv
