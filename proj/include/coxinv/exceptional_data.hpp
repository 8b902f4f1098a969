#pragma once

// Class and aggregate tables for E6, E7, E8, F4, H3 and H4, loaded from the
// JSON files in the data directory. W(E8) is known only through these.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxinv/class_record.hpp"
#include "coxinv/coxeter_type.hpp"
#include "coxinv/polynomial.hpp"

namespace coxinv {

class MissingData : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Class sums disagree with a stored aggregate row.
class TableMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ReverseRef {
  std::string label;
  std::int64_t size = 0;
};

struct EmbeddedClass {
  ClassRecord record;                        // profile already resolved
  std::optional<ReverseRef> reverse_of;      // how the file stated it
  std::optional<int> printed_min_length;     // set where the file records a corrected value
};

struct EmbeddedTable {
  CoxeterType group;
  std::vector<EmbeddedClass> classes;
  std::vector<std::int64_t> odd_profile;     // starts at length 1
  std::vector<std::int64_t> even_profile;    // starts at length 0

  std::vector<ClassRecord> records() const;
};

// Resolution order: set_data_directory, then $COXINV_DATA_DIR, then the
// directory configured at build time.
void set_data_directory(const std::filesystem::path& dir);
std::filesystem::path data_directory();

// Parses both files; throws std::runtime_error on malformed data, including
// profile sums that differ from sizes and dangling reverse references.
std::vector<EmbeddedTable> load_tables(const std::filesystem::path& dir);

// Loaded once from data_directory() and cached.
const std::vector<EmbeddedTable>& embedded_tables();
const EmbeddedTable& embedded_table(CoxeterType group);

// Throws MissingData for an unknown (group, label, size).
ClassRecord get_class(CoxeterType group, const std::string& label, std::int64_t size);

struct ParityPolys {
  IntPoly odd;
  IntPoly even;
};

// 1 + sum of the class polynomials, split by exponent parity. Never throws
// on disagreement with the stored aggregate rows.
ParityPolys aggregate_from_classes(CoxeterType group);

// Stored aggregate rows re-expanded to polynomials.
ParityPolys stored_aggregates(CoxeterType group);

// aggregate_from_classes, after checking it against the stored rows;
// throws TableMismatch on any difference.
ParityPolys aggregate_profiles(CoxeterType group);

struct ConsistencyCheck {
  std::string group;
  std::string check;
  bool pass = false;
  std::string detail;
};

// Profile sums, reverse pairs, palindromic self-paired classes and the
// aggregate rows, for one group.
std::vector<ConsistencyCheck> consistency_report(CoxeterType group);

// Known defects in the source tables and formulas, with what is used instead.
std::vector<std::string> errata_notes();

// [{"group","label","size","min_length","profile"}]
nlohmann::json classes_to_json(CoxeterType group, const std::vector<ClassRecord>& classes);
// class,size,min_length,profile
std::string classes_to_csv(const std::vector<ClassRecord>& classes);

const std::vector<CoxeterType>& exceptional_groups();

}  // namespace coxinv
