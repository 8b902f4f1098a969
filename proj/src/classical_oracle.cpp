#include "coxinv/classical_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace coxinv {

namespace {

int sgn(int v) { return v < 0 ? -1 : 1; }

// Whether w sends e_j + sign*e_i (i < j) to a negative root.
bool sends_negative(const SignedPerm& w, int j, int i, int sign) {
  const int wj = w(j);
  const int wi = w(i);
  // w(e_j) = sgn(wj) e_|wj|, w(e_i) = sgn(wi) e_|wi|; the image is negative iff
  // the coefficient on the larger index is negative.
  if (std::abs(wj) > std::abs(wi)) return wj < 0;
  return sign * sgn(wi) < 0;
}

constexpr std::uint64_t kMaterializeCap = 20'000'000;

}  // namespace

std::vector<LongRoot> lambda_set(const SignedPerm& w) {
  std::vector<LongRoot> out;
  for (int j = 2; j <= w.rank(); ++j)
    for (int i = 1; i < j; ++i)
      for (int sign : {-1, 1})
        if (sends_negative(w, j, i, sign)) out.push_back({j, i, sign});
  return out;
}

int lambda_size(const SignedPerm& w) {
  int count = 0;
  for (int j = 2; j <= w.rank(); ++j)
    for (int i = 1; i < j; ++i)
      count += static_cast<int>(sends_negative(w, j, i, -1)) + static_cast<int>(sends_negative(w, j, i, 1));
  return count;
}

int sigma_size(const SignedPerm& w) {
  return static_cast<int>(std::count_if(w.images().begin(), w.images().end(), [](int v) { return v < 0; }));
}

int length(const SignedPerm& w, Family family) {
  switch (family) {
    case Family::B: return lambda_size(w) + sigma_size(w);
    case Family::D:
      if (!w.is_positive()) throw std::invalid_argument("element " + to_cycle_string(w) + " is not in W(D_n)");
      return lambda_size(w);
    case Family::A:
      if (!w.is_unsigned()) throw std::invalid_argument("element " + to_cycle_string(w) + " is not in W(A_{n-1})");
      return lambda_size(w);
    default: throw std::invalid_argument("length: only families A, B and D are signed permutations");
  }
}

std::optional<CycleType> cycle_type(const SignedPerm& w) {
  if (!w.is_involution()) return std::nullopt;
  CycleType t;
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    if (v == -i)
      ++t.e;
    else if (std::abs(v) != i)
      ++t.m;
  }
  t.m /= 2;
  return t;
}

int oracle_rank_guard(Family family) {
  switch (family) {
    case Family::A: return 9;
    case Family::B:
    case Family::D: return 7;
    default: throw std::invalid_argument("oracle guard: classical families only");
  }
}

namespace {

void place_cycles(Family family, std::vector<int>& images, int top,
                  const std::function<void(const SignedPerm&)>& visit) {
  // top is the largest letter that may still be unassigned
  while (top >= 1 && images[top - 1] != 0) --top;
  if (top == 0) {
    if (family == Family::D) {
      int minus = 0;
      for (int v : images) minus += v < 0 ? 1 : 0;
      if (minus % 2 != 0) return;
    }
    visit(SignedPerm(images));
    return;
  }
  const bool signed_group = family != Family::A;

  images[top - 1] = top;
  place_cycles(family, images, top - 1, visit);
  if (signed_group) {
    images[top - 1] = -top;
    place_cycles(family, images, top - 1, visit);
  }
  for (int r = top - 1; r >= 1; --r) {
    if (images[r - 1] != 0) continue;
    images[top - 1] = r;
    images[r - 1] = top;
    place_cycles(family, images, top - 1, visit);
    if (signed_group) {
      images[top - 1] = -r;
      images[r - 1] = -top;
      place_cycles(family, images, top - 1, visit);
    }
    images[r - 1] = 0;
  }
  images[top - 1] = 0;
}

void check_family_and_guard(Family family, int n, const EnumerationLimits& limits) {
  if (!(family == Family::A || family == Family::B || family == Family::D))
    throw std::invalid_argument("involution enumeration: classical families only");
  if (n < 1) throw std::invalid_argument("involution enumeration: n must be positive");
  const int guard = oracle_rank_guard(family);
  if (n > guard && !limits.allow_large)
    throw BudgetExceeded(std::string("brute-force oracle for type ") + family_letter(family) + " is limited to n <= " +
                         std::to_string(guard) + " (requested " + std::to_string(n) + "); pass allow_large to override");
}

}  // namespace

void for_each_involution(Family family, int n, const std::function<void(const SignedPerm&)>& visit,
                         EnumerationLimits limits) {
  check_family_and_guard(family, n, limits);
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  place_cycles(family, images, n, visit);
}

BigInt involution_count_B(int n, int m, int e) {
  if (m < 0 || e < 0 || 2 * m + e > n) return 0;
  auto fact = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  BigInt denom = fact(m) * fact(e) * fact(n - 2 * m - e);
  return fact(n) / denom;
}

std::vector<SignedPerm> enumerate_involutions(Family family, int n, EnumerationLimits limits) {
  check_family_and_guard(family, n, limits);
  BigInt estimate = 0;
  for (int m = 0; 2 * m <= n; ++m)
    for (int e = 0; 2 * m + e <= n; ++e) estimate += involution_count_B(n, m, e);
  if (estimate > kMaterializeCap)
    throw BudgetExceeded("materializing " + estimate.str() + " involutions exceeds the memory cap; use for_each_involution");
  std::vector<SignedPerm> out;
  for_each_involution(family, n, [&](const SignedPerm& w) { out.push_back(w); }, limits);
  return out;
}

namespace {

std::map<CycleType, std::vector<BigInt>> accumulate(Family family, int n, EnumerationLimits limits,
                                                     bool lambda_only) {
  std::map<CycleType, std::vector<BigInt>> hist;
  for_each_involution(
      family, n,
      [&](const SignedPerm& w) {
        const auto t = *cycle_type(w);
        const int len = lambda_only ? lambda_size(w) : length(w, family);
        auto& h = hist[t];
        if (h.size() <= static_cast<std::size_t>(len)) h.resize(len + 1);
        h[len] += 1;
      },
      limits);
  return hist;
}

std::map<CycleType, IntPoly> to_polys(std::map<CycleType, std::vector<BigInt>> hist) {
  std::map<CycleType, IntPoly> out;
  for (auto& [t, h] : hist) out.emplace(t, IntPoly(std::move(h)));
  return out;
}

}  // namespace

std::map<CycleType, IntPoly> oracle_class_table(Family family, int n, EnumerationLimits limits) {
  return to_polys(accumulate(family, n, limits, false));
}

IntPoly oracle_class_poly(Family family, int n, CycleType type, EnumerationLimits limits) {
  if (family == Family::A && type.e != 0)
    throw std::invalid_argument("type A involutions have no negative 1-cycles");
  auto table = oracle_class_table(family, n, limits);
  auto it = table.find(type);
  return it == table.end() ? IntPoly{} : it->second;
}

std::map<CycleType, IntPoly> oracle_lambda_table(int n, EnumerationLimits limits) {
  return to_polys(accumulate(Family::B, n, limits, true));
}

IntPoly oracle_lambda_poly(int n, CycleType type, EnumerationLimits limits) {
  auto table = oracle_lambda_table(n, limits);
  auto it = table.find(type);
  return it == table.end() ? IntPoly{} : it->second;
}

const char* tau_kind_name(TauKind k) {
  switch (k) {
    case TauKind::PlusFixed: return "(+n)";
    case TauKind::MinusFixed: return "(-n)";
    case TauKind::PlusTransposition: return "(+r +n)";
    case TauKind::MinusTransposition: return "(-r -n)";
  }
  return "?";
}

int delta_r(const SignedPerm& y, int r) {
  int below = 0;
  int negative_above = 0;
  for (int k = 1; k <= y.rank(); ++k) {
    const int v = y(k);
    const int a = std::abs(v);
    if (a < r && r < k) ++below;
    if (v < 0 && r < k && r < a) ++negative_above;
  }
  return below + negative_above;
}

ReductionReport check_reduction(const SignedPerm& x) {
  if (!x.is_involution()) throw std::invalid_argument("check_reduction: " + to_cycle_string(x) + " is not an involution");
  const int n = x.rank();
  ReductionReport rep;
  rep.x = x;
  const int xn = x(n);
  SignedPerm tau;
  if (xn == n) {
    rep.tau_kind = TauKind::PlusFixed;
    tau = SignedPerm::identity(n);
  } else if (xn == -n) {
    rep.tau_kind = TauKind::MinusFixed;
    tau = SignedPerm::from_cycles(n, {{-n}});
  } else if (xn > 0) {
    rep.tau_kind = TauKind::PlusTransposition;
    rep.r = xn;
    tau = SignedPerm::from_cycles(n, {{xn, n}});
  } else {
    rep.tau_kind = TauKind::MinusTransposition;
    rep.r = -xn;
    tau = SignedPerm::from_cycles(n, {{xn, -n}});
  }
  rep.y = compose(x, tau);
  rep.lambda_x = lambda_size(x);
  rep.sigma_x = sigma_size(x);
  rep.lambda_y = lambda_size(rep.y);
  rep.sigma_y = sigma_size(rep.y);

  const int r = rep.r;
  switch (rep.tau_kind) {
    case TauKind::PlusFixed:
      rep.lambda_branch_holds = rep.lambda_x == rep.lambda_y;
      rep.sigma_branch_holds = rep.sigma_x == rep.sigma_y;
      return rep;
    case TauKind::MinusFixed:
      rep.lambda_branch_holds = rep.lambda_x == 2 * (n - 1) + rep.lambda_y;
      rep.sigma_branch_holds = rep.sigma_x == rep.sigma_y + 1;
      return rep;
    default: break;
  }

  const int delta = delta_r(rep.y, r);
  rep.delta = delta;
  std::vector<int> c_cycle;
  for (int k = n; k >= r; --k) c_cycle.push_back(k);
  const SignedPerm c = SignedPerm::from_cycles(n, {c_cycle});
  const SignedPerm z = conjugate(rep.y, c);
  rep.z = z;
  rep.lambda_z = lambda_size(z);
  rep.sigma_z = sigma_size(z);
  rep.z_fixes_top_two = z(n) == n && (n < 2 || z(n - 1) == n - 1) && rep.y(r) == r;
  rep.compression_holds = *rep.lambda_z == rep.lambda_y - 2 * delta && *rep.sigma_z == rep.sigma_y;

  if (rep.tau_kind == TauKind::PlusTransposition) {
    rep.lambda_branch_holds = rep.lambda_x == 2 * (n - r) - 1 + rep.lambda_y - 2 * delta;
    rep.sigma_branch_holds = rep.sigma_x == rep.sigma_y;
    rep.corollary_holds = rep.lambda_x == *rep.lambda_z + 2 * (n - r) - 1 && rep.sigma_x == *rep.sigma_z;
  } else {
    rep.lambda_branch_holds = rep.lambda_x == 2 * (n + r) - 5 + rep.lambda_y - 2 * delta;
    rep.sigma_branch_holds = rep.sigma_x == rep.sigma_y + 2;
    rep.corollary_holds = rep.lambda_x == *rep.lambda_z + 2 * (n + r) - 5 && rep.sigma_x == *rep.sigma_z + 2;
  }
  return rep;
}

nlohmann::json to_json(const ReductionReport& rep) {
  nlohmann::json j{
      {"x", to_cycle_string(rep.x)},
      {"tau", tau_kind_name(rep.tau_kind)},
      {"y", to_cycle_string(rep.y)},
      {"lambda_x", rep.lambda_x},
      {"sigma_x", rep.sigma_x},
      {"lambda_y", rep.lambda_y},
      {"sigma_y", rep.sigma_y},
      {"lambda_branch_holds", rep.lambda_branch_holds},
      {"sigma_branch_holds", rep.sigma_branch_holds},
      {"compression_holds", rep.compression_holds},
      {"corollary_holds", rep.corollary_holds},
      {"z_fixes_top_two", rep.z_fixes_top_two},
      {"all_hold", rep.all_hold()},
  };
  if (rep.r != 0) j["r"] = rep.r;
  if (rep.delta) j["delta"] = *rep.delta;
  if (rep.z) {
    j["z"] = to_cycle_string(*rep.z);
    j["lambda_z"] = *rep.lambda_z;
    j["sigma_z"] = *rep.sigma_z;
  }
  return j;
}

bool check_ngh(const SignedPerm& g, const SignedPerm& h) {
  if (g.rank() != h.rank()) throw std::invalid_argument("check_ngh: rank mismatch");
  const auto lg = lambda_set(g);
  const auto lh = lambda_set(h);
  const auto lhinv = lambda_set(inverse(h));
  std::vector<LongRoot> common;
  std::set_intersection(lg.begin(), lg.end(), lhinv.begin(), lhinv.end(), std::back_inserter(common));
  const auto lgh = lambda_set(compose(g, h));
  return lgh.size() + 2 * common.size() == lg.size() + lh.size();
}

}  // namespace coxinv
