#include "coxinv/exceptional_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "coxinv/dihedral.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

namespace {

std::mutex data_mutex;
std::optional<std::filesystem::path> override_dir;
std::optional<std::vector<EmbeddedTable>> loaded;

nlohmann::json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open data file " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed data file " + file.string() + ": " + e.what());
  }
}

std::int64_t sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

IntPoly row_to_poly(const std::vector<std::int64_t>& row, int start) {
  std::vector<BigInt> c;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::size_t k = static_cast<std::size_t>(start) + 2 * i;
    if (c.size() <= k) c.resize(k + 1);
    c[k] = row[i];
  }
  return IntPoly(std::move(c));
}

bool has_central_longest_element(CoxeterType g) { return !(g.family == Family::E && g.n == 6); }

}  // namespace

std::vector<ClassRecord> EmbeddedTable::records() const {
  std::vector<ClassRecord> out;
  for (const auto& c : classes) out.push_back(c.record);
  return out;
}

void set_data_directory(const std::filesystem::path& dir) {
  std::lock_guard<std::mutex> lock(data_mutex);
  override_dir = dir;
  loaded.reset();
}

std::filesystem::path data_directory() {
  if (override_dir) return *override_dir;
  if (const char* env = std::getenv("COXINV_DATA_DIR"); env && *env) return env;
  return COXINV_DATA_DIR;
}

std::vector<EmbeddedTable> load_tables(const std::filesystem::path& dir) {
  std::vector<EmbeddedTable> tables;
  auto table_for = [&](CoxeterType g) -> EmbeddedTable& {
    for (auto& t : tables)
      if (t.group == g) return t;
    tables.push_back(EmbeddedTable{g, {}, {}, {}});
    return tables.back();
  };

  const auto class_rows = read_json(dir / "exceptional_classes.json");
  try {
    for (const auto& row : class_rows) {
      const CoxeterType g = parse_coxeter_type(row.at("group").get<std::string>());
      EmbeddedClass c;
      c.record.label = row.at("label").get<std::string>();
      c.record.size = row.at("size").get<std::int64_t>();
      c.record.min_length = row.at("min_length").get<int>();
      if (row.contains("printed_min_length")) c.printed_min_length = row["printed_min_length"].get<int>();
      if (row.contains("profile")) {
        c.record.profile = row["profile"].get<std::vector<std::int64_t>>();
      } else {
        const auto& ref = row.at("reverse_of");
        c.reverse_of = ReverseRef{ref.at("label").get<std::string>(), ref.at("size").get<std::int64_t>()};
      }
      table_for(g).classes.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed class row: ") + e.what());
  }

  for (auto& t : tables) {
    for (auto& c : t.classes) {
      if (!c.reverse_of) continue;
      auto it = std::find_if(t.classes.begin(), t.classes.end(), [&](const EmbeddedClass& o) {
        return !o.reverse_of && o.record.label == c.reverse_of->label && o.record.size == c.reverse_of->size;
      });
      if (it == t.classes.end())
        throw std::runtime_error("dangling reverse reference " + c.reverse_of->label + " in " + name(t.group));
      c.record.profile.assign(it->record.profile.rbegin(), it->record.profile.rend());
    }
    for (const auto& c : t.classes)
      if (sum(c.record.profile) != c.record.size)
        throw std::runtime_error(name(t.group) + " class " + c.record.label + ": profile sums to " +
                                 std::to_string(sum(c.record.profile)) + ", size is " + std::to_string(c.record.size));
  }

  const auto aggregate_rows = read_json(dir / "exceptional_aggregates.json");
  try {
    for (const auto& row : aggregate_rows) {
      EmbeddedTable& t = table_for(parse_coxeter_type(row.at("group").get<std::string>()));
      t.odd_profile = row.at("odd_profile").get<std::vector<std::int64_t>>();
      t.even_profile = row.at("even_profile").get<std::vector<std::int64_t>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed aggregate row: ") + e.what());
  }
  return tables;
}

const std::vector<EmbeddedTable>& embedded_tables() {
  std::lock_guard<std::mutex> lock(data_mutex);
  if (!loaded) loaded = load_tables(data_directory());
  return *loaded;
}

const EmbeddedTable& embedded_table(CoxeterType group) {
  for (const auto& t : embedded_tables())
    if (t.group == group) return t;
  throw MissingData("no embedded table for " + name(group));
}

ClassRecord get_class(CoxeterType group, const std::string& label, std::int64_t size) {
  for (const auto& c : embedded_table(group).classes)
    if (c.record.label == label && c.record.size == size) return c.record;
  throw MissingData("no class " + label + " of size " + std::to_string(size) + " in " + name(group));
}

ParityPolys aggregate_from_classes(CoxeterType group) {
  IntPoly total = IntPoly::one();
  for (const auto& c : embedded_table(group).classes) total += class_to_polynomial(c.record);
  std::vector<BigInt> odd, even;
  const auto coeffs = total.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto& dst = i % 2 ? odd : even;
    dst.resize(i + 1);
    dst[i] = coeffs[i];
  }
  return {IntPoly(std::move(odd)), IntPoly(std::move(even))};
}

ParityPolys stored_aggregates(CoxeterType group) {
  const auto& t = embedded_table(group);
  return {row_to_poly(t.odd_profile, 1), row_to_poly(t.even_profile, 0)};
}

ParityPolys aggregate_profiles(CoxeterType group) {
  ParityPolys from_classes = aggregate_from_classes(group);
  const ParityPolys stored = stored_aggregates(group);
  if (from_classes.odd != stored.odd)
    throw TableMismatch(name(group) + " odd aggregate: class sum " + to_string(from_classes.odd) +
                        " differs from the stored row");
  if (from_classes.even != stored.even)
    throw TableMismatch(name(group) + " even aggregate: class sum differs from the stored row (class sum at 1: " +
                        evaluate_at_one(from_classes.even).str() + ", stored row at 1: " +
                        evaluate_at_one(stored.even).str() + ")");
  return from_classes;
}

std::vector<ConsistencyCheck> consistency_report(CoxeterType group) {
  const auto& t = embedded_table(group);
  const std::string g = name(group);
  std::vector<ConsistencyCheck> out;

  for (const auto& c : t.classes) {
    const auto s = sum(c.record.profile);
    out.push_back({g, "profile sum " + c.record.label + " (" + std::to_string(c.record.size) + ")",
                   s == c.record.size, "sum " + std::to_string(s)});
  }

  if (has_central_longest_element(group)) {
    const int top = build_root_system(group).positive_count;
    for (const auto& c : t.classes) {
      const auto& r = c.record;
      if (c.reverse_of) {
        const ClassRecord partner = get_class(group, c.reverse_of->label, c.reverse_of->size);
        std::vector<std::int64_t> back(partner.profile.rbegin(), partner.profile.rend());
        const bool ok = r.size == partner.size && r.profile == back && r.min_length + partner.max_length() == top;
        out.push_back({g, "reverse pair " + r.label + " / " + partner.label, ok,
                       "min " + std::to_string(r.min_length) + " + partner max " +
                           std::to_string(partner.max_length()) + " vs " + std::to_string(top)});
        continue;
      }
      const bool referenced = std::any_of(t.classes.begin(), t.classes.end(), [&](const EmbeddedClass& o) {
        return o.reverse_of && o.reverse_of->label == r.label && o.reverse_of->size == r.size;
      });
      if (referenced) continue;
      if (r.size == 1) {
        out.push_back({g, "central class " + r.label, r.min_length == top && r.profile.size() == 1,
                       "min " + std::to_string(r.min_length) + " vs " + std::to_string(top)});
        continue;
      }
      std::vector<std::int64_t> back(r.profile.rbegin(), r.profile.rend());
      out.push_back({g, "self-paired " + r.label, back == r.profile && r.min_length + r.max_length() == top,
                     "palindromic " + std::string(back == r.profile ? "yes" : "no")});
    }
  }

  const ParityPolys from_classes = aggregate_from_classes(group);
  const ParityPolys stored = stored_aggregates(group);
  out.push_back({g, "odd aggregate row", from_classes.odd == stored.odd,
                 "class sum " + evaluate_at_one(from_classes.odd).str() + ", row " + evaluate_at_one(stored.odd).str()});
  out.push_back({g, "even aggregate row", from_classes.even == stored.even,
                 "class sum " + evaluate_at_one(from_classes.even).str() + ", row " +
                     evaluate_at_one(stored.even).str()});
  return out;
}

std::vector<std::string> errata_notes() {
  return {
      "d_poly: the base value D_{1,0,1} is 1, not t; W(B_1) has no long roots, so (-1) has |Lambda| = 0.",
      "W(D_2): the involution length polynomial is 1 + 2t + t^2 (Klein four-group: lengths 0, 1, 1, 2), not 1 + 2t.",
      "H4: the central involution is the longest element, of length 60; the source table lists minimal length 15.",
      "E8: the stored even aggregate row equals the class sum without the A1^4 class (size 113400); the row is "
      "kept as published and the class sum, which is unimodal, is used for analysis.",
      dihedral_errata_note(),
  };
}

nlohmann::json classes_to_json(CoxeterType group, const std::vector<ClassRecord>& classes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json j = to_json(c);
    j["group"] = name(group);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string classes_to_csv(const std::vector<ClassRecord>& classes) {
  std::ostringstream os;
  os << "class,size,min_length,profile\n";
  for (const auto& c : classes) {
    os << c.label << ',' << c.size << ',' << c.min_length << ",\"[";
    for (std::size_t i = 0; i < c.profile.size(); ++i) os << (i ? "," : "") << c.profile[i];
    os << "]\"\n";
  }
  return os.str();
}

const std::vector<CoxeterType>& exceptional_groups() {
  static const std::vector<CoxeterType> groups{CoxeterType::E6(), CoxeterType::E7(), CoxeterType::E8(),
                                               CoxeterType::F4(), CoxeterType::H3(), CoxeterType::H4()};
  return groups;
}

}  // namespace coxinv
