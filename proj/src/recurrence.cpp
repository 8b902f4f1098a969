#include "coxinv/recurrence.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxinv {

namespace {

std::mutex cache_mutex;
std::map<RecurrenceKey, IntPoly>& cache() {
  static std::map<RecurrenceKey, IntPoly> table;
  return table;
}

IntPoly memoized(const RecurrenceKey& key, const std::function<IntPoly()>& compute) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  IntPoly value = compute();
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache().emplace(key, std::move(value)).first->second;
}

void require_rank(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive, got " + std::to_string(n));
}

// Layer k of a two-parameter family, indexed [m][e] up to the requested bounds.
using Layer = std::vector<std::vector<IntPoly>>;

Layer empty_layer(int max_m, int max_e) {
  return Layer(static_cast<std::size_t>(max_m) + 1, std::vector<IntPoly>(static_cast<std::size_t>(max_e) + 1));
}

const IntPoly& at(const Layer& layer, int m, int e) {
  static const IntPoly zero;
  if (m < 0 || e < 0) return zero;
  return layer[m][e];
}

enum class Signed { B, D };

Layer base_layer(Signed kind, int k, int max_m, int max_e) {
  Layer layer = empty_layer(max_m, max_e);
  auto put = [&](int m, int e, IntPoly p) {
    if (m <= max_m && e <= max_e) layer[m][e] = std::move(p);
  };
  put(0, 0, IntPoly::one());
  if (k == 1) {
    put(0, 1, kind == Signed::B ? IntPoly{0, 1} : IntPoly{1});
  } else if (k == 2) {
    if (kind == Signed::B) {
      put(1, 0, IntPoly{0, 1, 0, 1});
      put(0, 1, IntPoly{0, 1, 0, 1});
      put(0, 2, IntPoly{0, 0, 0, 0, 1});
    } else {
      put(1, 0, IntPoly{0, 2});
      put(0, 1, IntPoly{1, 0, 1});
      put(0, 2, IntPoly{0, 0, 1});
    }
  }
  return layer;
}

// Runs the B (or D) recurrence up to rank n and hands every entry of the
// final layer to the caller. Only two earlier layers are kept alive.
Layer fill_signed(Signed kind, int n, int max_m, int max_e) {
  if (n <= 2) return base_layer(kind, n, max_m, max_e);
  Layer older = base_layer(kind, 1, max_m, max_e);
  Layer prev = base_layer(kind, 2, max_m, max_e);
  for (int k = 3; k <= n; ++k) {
    Layer cur = empty_layer(max_m, max_e);
    for (int m = 0; m <= max_m && 2 * m <= k; ++m) {
      for (int e = 0; e <= max_e && 2 * m + e <= k; ++e) {
        IntPoly p = at(prev, m, e);
        if (kind == Signed::B) {
          p += shift(at(prev, m, e - 1), static_cast<std::size_t>(2 * k - 1));
          p += mul_odd_geometric(at(older, m - 1, e), static_cast<std::size_t>(2 * k - 2));
        } else {
          p += shift(at(prev, m, e - 1), static_cast<std::size_t>(2 * k - 2));
          IntPoly x = mul_odd_geometric(at(older, m - 1, e), static_cast<std::size_t>(k - 1));
          p += shift(x, static_cast<std::size_t>(2 * k - 4));
          p += x;
        }
        cur[m][e] = std::move(p);
      }
    }
    older = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// Type A on n letters, m up to max_m.
std::vector<IntPoly> fill_A(int n, int max_m) {
  auto base = [&](int k) {
    std::vector<IntPoly> layer(static_cast<std::size_t>(max_m) + 1);
    layer[0] = IntPoly::one();
    if (k == 2 && max_m >= 1) layer[1] = IntPoly{0, 1};
    return layer;
  };
  if (n <= 2) return base(n);
  std::vector<IntPoly> older = base(1);
  std::vector<IntPoly> prev = base(2);
  for (int k = 3; k <= n; ++k) {
    std::vector<IntPoly> cur(static_cast<std::size_t>(max_m) + 1);
    for (int m = 0; m <= max_m && 2 * m <= k; ++m) {
      cur[m] = prev[m];
      if (m >= 1) cur[m] += mul_odd_geometric(older[m - 1], static_cast<std::size_t>(k - 1));
    }
    older = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// Lambda-length sums over the involutions of W(B_n) inside W(D_n) and outside
// it; the two halves evolve together.
std::pair<IntPoly, IntPoly> d_halves(int n) {
  IntPoly pos_older = IntPoly{1}, neg_older = IntPoly{1};
  if (n == 1) return {pos_older, neg_older};
  IntPoly pos_prev = IntPoly{1, 2, 1}, neg_prev = IntPoly{1, 0, 1};
  for (int k = 3; k <= n; ++k) {
    const auto step = [&](const IntPoly& same_prev, const IntPoly& other_prev, const IntPoly& same_older) {
      IntPoly x = mul_odd_geometric(same_older, static_cast<std::size_t>(k - 1));
      return same_prev + shift(other_prev, static_cast<std::size_t>(2 * k - 2)) + x +
             shift(x, static_cast<std::size_t>(2 * k - 4));
    };
    IntPoly pos = step(pos_prev, neg_prev, pos_older);
    IntPoly neg = step(neg_prev, pos_prev, neg_older);
    pos_older = std::move(pos_prev);
    neg_older = std::move(neg_prev);
    pos_prev = std::move(pos);
    neg_prev = std::move(neg);
  }
  return {std::move(pos_prev), std::move(neg_prev)};
}

}  // namespace

void validate(const RecurrenceKey& key) {
  auto bad = [&](const char* why) { throw std::invalid_argument(std::string("malformed recurrence key: ") + why); };
  const bool has_m = key.m.has_value();
  const bool has_e = key.e.has_value();
  switch (key.family) {
    case RecurrenceFamily::AClass:
      if (!has_m || has_e || key.fpf_family) bad("A-class needs m only");
      break;
    case RecurrenceFamily::BClass:
    case RecurrenceFamily::DPoly:
      if (!has_m || !has_e || key.fpf_family) bad("B-class and D-poly need m and e");
      break;
    case RecurrenceFamily::FpfProduct:
      if (has_m || has_e || !key.fpf_family) bad("fpf-product needs a family and no m, e");
      break;
    default:
      if (has_m || has_e || key.fpf_family) bad("totals take no m, e");
  }
}

IntPoly class_poly_A(int n, int m) {
  require_rank(n, "class_poly_A");
  if (m < 0 || 2 * m > n) return {};
  return memoized({RecurrenceFamily::AClass, n, m, std::nullopt, std::nullopt},
                  [&] { return fill_A(n, m)[m]; });
}

IntPoly class_poly_B(int n, int m, int e) {
  require_rank(n, "class_poly_B");
  if (m < 0 || e < 0 || 2 * m + e > n) return {};
  return memoized({RecurrenceFamily::BClass, n, m, e, std::nullopt},
                  [&] { return fill_signed(Signed::B, n, m, e)[m][e]; });
}

IntPoly d_poly(int n, int m, int e) {
  require_rank(n, "d_poly");
  if (m < 0 || e < 0 || 2 * m + e > n) return {};
  return memoized({RecurrenceFamily::DPoly, n, m, e, std::nullopt},
                  [&] { return fill_signed(Signed::D, n, m, e)[m][e]; });
}

IntPoly DClassPoly::per_class() const { return split ? divide_exact(poly, 2) : poly; }

DClassPoly class_poly_D(int n, int m, int e) {
  DClassPoly out;
  if (e % 2 != 0) {
    require_rank(n, "class_poly_D");
    return out;
  }
  out.poly = d_poly(n, m, e);
  out.split = n == 2 * m && e == 0;
  return out;
}

IntPoly involution_poly_by_recurrence(CoxeterType type) {
  const int n = type.n;
  require_rank(n, "involution_poly");
  switch (type.family) {
    case Family::A: {
      IntPoly older = IntPoly{1, 1};
      if (n == 1) return older;
      IntPoly prev = IntPoly{1, 2, 0, 1};
      for (int k = 3; k <= n; ++k) {
        IntPoly cur = prev + mul_odd_geometric(older, static_cast<std::size_t>(k));
        older = std::move(prev);
        prev = std::move(cur);
      }
      return prev;
    }
    case Family::B: {
      IntPoly older = IntPoly{1, 1};
      if (n == 1) return older;
      IntPoly prev = IntPoly{1, 2, 0, 2, 1};
      for (int k = 3; k <= n; ++k) {
        IntPoly cur = prev + shift(prev, static_cast<std::size_t>(2 * k - 1)) +
                      mul_odd_geometric(older, static_cast<std::size_t>(2 * k - 2));
        older = std::move(prev);
        prev = std::move(cur);
      }
      return prev;
    }
    case Family::D: return d_halves(n).first;
    default: throw std::invalid_argument("involution_poly: classical families only, got " + name(type));
  }
}

IntPoly b_minus_d_by_recurrence(int n) {
  require_rank(n, "b_minus_d_poly");
  return d_halves(n).second;
}

IntPoly involution_poly_by_class_sum(CoxeterType type) {
  const int n = type.n;
  require_rank(n, "involution_poly");
  IntPoly total;
  switch (type.family) {
    case Family::A: {
      const auto layer = fill_A(n + 1, (n + 1) / 2);
      for (const auto& p : layer) total += p;
      return total;
    }
    case Family::B:
    case Family::D: {
      const auto layer = fill_signed(type.family == Family::B ? Signed::B : Signed::D, n, n / 2, n);
      for (int m = 0; 2 * m <= n; ++m)
        for (int e = 0; 2 * m + e <= n; ++e)
          if (type.family == Family::B || e % 2 == 0) total += layer[m][e];
      return total;
    }
    default: throw std::invalid_argument("involution_poly: classical families only, got " + name(type));
  }
}

IntPoly b_minus_d_by_class_sum(int n) {
  require_rank(n, "b_minus_d_poly");
  const auto layer = fill_signed(Signed::D, n, n / 2, n);
  IntPoly total;
  for (int m = 0; 2 * m <= n; ++m)
    for (int e = 1; 2 * m + e <= n; e += 2) total += layer[m][e];
  return total;
}

namespace {

RecurrenceFamily total_family(Family f) {
  switch (f) {
    case Family::A: return RecurrenceFamily::ATotal;
    case Family::B: return RecurrenceFamily::BTotal;
    case Family::D: return RecurrenceFamily::DTotal;
    default: throw std::invalid_argument("involution_poly: classical families only");
  }
}

IntPoly checked(IntPoly by_recurrence, const std::function<IntPoly()>& by_sum, const std::string& what) {
  if (by_sum() != by_recurrence)
    throw std::logic_error("internal defect: class sum and aggregate recurrence disagree for " + what);
  return by_recurrence;
}

}  // namespace

IntPoly involution_poly(CoxeterType type, RecurrenceOptions options) {
  const RecurrenceFamily fam = total_family(type.family);
  require_rank(type.n, "involution_poly");
  const RecurrenceKey key{fam, type.n, std::nullopt, std::nullopt, std::nullopt};
  // Unchecked values never enter the cache, so a cache hit is always verified
  // unless verification was switched off for every earlier call too.
  if (!options.cross_check) return involution_poly_by_recurrence(type);
  return memoized(key, [&] {
    return checked(involution_poly_by_recurrence(type), [&] { return involution_poly_by_class_sum(type); },
                   name(type));
  });
}

IntPoly b_minus_d_poly(int n, RecurrenceOptions options) {
  require_rank(n, "b_minus_d_poly");
  if (!options.cross_check) return b_minus_d_by_recurrence(n);
  const RecurrenceKey key{RecurrenceFamily::BminusDTotal, n, std::nullopt, std::nullopt, std::nullopt};
  return memoized(key, [&] {
    return checked(b_minus_d_by_recurrence(n), [&] { return b_minus_d_by_class_sum(n); },
                   "B\\D companion of rank " + std::to_string(n));
  });
}

IntPoly fpf_product_poly(Family family, int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("fpf_product_poly: n must be even and at least 2, got " + std::to_string(n));
  if (!(family == Family::A || family == Family::B || family == Family::D))
    throw std::invalid_argument("fpf_product_poly: classical families only");
  const RecurrenceKey key{RecurrenceFamily::FpfProduct, n, std::nullopt, std::nullopt, family};
  return memoized(key, [&] {
    // each factor is a geometric sum in s = t^2
    auto geometric_in_s = [](int top) {
      std::vector<BigInt> c(static_cast<std::size_t>(2 * top) + 1);
      for (int i = 0; i <= top; ++i) c[2 * i] = 1;
      return IntPoly(std::move(c));
    };
    IntPoly product = IntPoly::monomial(static_cast<std::size_t>(n / 2));
    for (int k = 1; k <= n / 2; ++k) {
      IntPoly q;
      switch (family) {
        case Family::A: q = geometric_in_s(2 * k - 2); break;
        case Family::B: q = geometric_in_s(4 * k - 3); break;
        default: {
          IntPoly g = geometric_in_s(2 * k - 2);
          q = g + shift(g, static_cast<std::size_t>(4 * k - 4));
        }
      }
      product = product * q;
    }
    return product;
  });
}

std::size_t recurrence_cache_size() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache().size();
}

void clear_recurrence_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache().clear();
}

}  // namespace coxinv
