#include "coxinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "coxinv/analysis.hpp"
#include "coxinv/classical_oracle.hpp"
#include "coxinv/coxeter_engine.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/exceptional_data.hpp"
#include "coxinv/recurrence.hpp"
#include "coxinv/verify.hpp"

namespace coxinv {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CoxeterType resolve_group(const std::string& type, std::optional<int> n) {
  std::string t = type;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "A" || t == "B" || t == "D" || t == "I" || t == "I2") {
    if (!n) throw UsageError("--type " + type + " needs --n");
    if (t[0] == 'I') return parse_coxeter_type("I2(" + std::to_string(*n) + ")");
    return parse_coxeter_type(t + std::to_string(*n));
  }
  CoxeterType g = parse_coxeter_type(t);
  if (n && *n != g.n) throw UsageError("--n " + std::to_string(*n) + " contradicts --type " + type);
  return g;
}

void print_poly(std::ostream& out, const std::string& format, const IntPoly& p, nlohmann::json meta) {
  if (format == "json") {
    meta["polynomial"] = to_json(p);
    out << meta.dump(2) << "\n";
  } else if (format == "csv") {
    out << "exponent,coefficient\n";
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) out << i << ',' << c[i] << "\n";
  } else {
    out << to_string(p) << "\n";
  }
}

struct ClassQuery {
  std::string type;
  std::optional<int> n, m, e, size;
  std::string label;
};

// Class polynomial for the selector; `note` receives any extra remark.
IntPoly class_polynomial(const ClassQuery& q, bool per_class, std::string& note, nlohmann::json& meta) {
  const CoxeterType g = resolve_group(q.type, q.n);
  meta["group"] = name(g);
  if (g.is_classical()) {
    if (!q.m) throw UsageError("classical classes are selected by --m (and --e for B, D)");
    const int m = *q.m, e = q.e.value_or(0);
    meta["m"] = m;
    meta["e"] = e;
    switch (g.family) {
      case Family::A:
        if (e != 0) throw UsageError("type A classes have no negative 1-cycles");
        // here --n counts letters, one more than the rank
        if (g.n < 2) throw UsageError("type A classes need at least 2 letters");
        meta["group"] = name(CoxeterType::A(g.n - 1));
        meta["letters"] = g.n;
        return class_poly_A(g.n, m);
      case Family::B: return class_poly_B(g.n, m, e);
      default: {
        const DClassPoly d = class_poly_D(g.n, m, e);
        meta["split"] = d.split;
        if (d.split) {
          note = per_class ? "one of two classes with this cycle type" : "union of two classes; --per-class halves it";
          meta["per_class"] = per_class;
        }
        return per_class ? d.per_class() : d.poly;
      }
    }
  }
  if (g.family == Family::I2) {
    const auto set = dihedral_classes(g.n);
    for (const auto& c : set.classes)
      if (c.label == q.label) return c.poly;
    std::string labels;
    for (const auto& c : set.classes) labels += " '" + c.label + "'";
    throw UsageError("I2(" + std::to_string(g.n) + ") classes are" + labels);
  }
  if (q.label.empty()) throw UsageError("exceptional classes are selected by --label (and --size)");
  meta["label"] = q.label;
  for (const auto& c : embedded_table(g).classes) {
    if (c.record.label == q.label && (!q.size || *q.size == c.record.size)) {
      meta["size"] = c.record.size;
      return class_to_polynomial(c.record);
    }
  }
  throw UsageError("no class '" + q.label + "' in " + name(g));
}

IntPoly aggregate_polynomial(const CoxeterType& g, bool cross_check) {
  if (g.is_classical()) return involution_poly(g, RecurrenceOptions{cross_check});
  if (g.family == Family::I2) return dihedral_involution_poly(g.n);
  const ParityPolys p = aggregate_from_classes(g);
  return p.odd + p.even;
}

std::string profile_json_values(const Profile& p) {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : p.values) vals.push_back(v.str());
  return vals.dump();
}

nlohmann::json profile_json(const Profile& p) {
  return {{"start", p.start},
          {"step", p.step},
          {"values", nlohmann::json::parse(profile_json_values(p))},
          {"unimodal", is_unimodal(p)},
          {"log_concave", is_log_concave(p)}};
}

int cmd_tables(std::ostream& out, std::ostream& err, const std::string& group, const std::string& source, bool diff,
               const std::string& format, bool allow_large) {
  const CoxeterType g = parse_coxeter_type(group);
  if (!g.is_exceptional()) throw UsageError("tables covers E6, E7, E8, F4, H3, H4");
  auto embedded = embedded_table(g).records();
  std::sort(embedded.begin(), embedded.end(), class_order);
  std::vector<ClassRecord> engine;
  if (diff || source == "engine") {
    const RootSystem rs = build_root_system(g);
    InvolutionCensus census = involution_classes(rs, EngineLimits{allow_large});
    assign_labels(census.classes, embedded);
    engine = census.classes;
    std::sort(engine.begin(), engine.end(), class_order);
  }
  const auto& shown = source == "engine" ? engine : embedded;
  if (format == "json")
    out << classes_to_json(g, shown).dump(2) << "\n";
  else if (format == "csv")
    out << classes_to_csv(shown);
  else {
    out << name(g) << " (" << source << ")\n";
    for (const auto& c : shown) {
      std::vector<BigInt> vals(c.profile.begin(), c.profile.end());
      out << std::left << std::setw(14) << c.label << std::setw(8) << c.size << std::setw(6) << c.min_length
          << format_values(vals) << "\n";
    }
  }
  if (!diff) return 0;
  const std::string a = classes_to_json(g, engine).dump();
  const std::string b = classes_to_json(g, embedded).dump();
  if (a == b) {
    err << "engine and embedded tables agree for " << name(g) << "\n";
    return 0;
  }
  err << "engine and embedded tables differ for " << name(g) << "\n";
  for (const auto& c : engine)
    if (std::find(embedded.begin(), embedded.end(), c) == embedded.end())
      err << "  engine only:   " << to_json(c).dump() << "\n";
  for (const auto& c : embedded)
    if (std::find(engine.begin(), engine.end(), c) == engine.end())
      err << "  embedded only: " << to_json(c).dump() << "\n";
  return 1;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n-range expects LO..HI, got '" + text + "'");
  }
}

int cmd_bench(std::ostream& out, const std::string& type, const std::string& range, bool allow_large) {
  const auto [lo, hi] = parse_range(range);
  if (lo < 1 || hi < lo) throw UsageError("bad --n-range " + range);
  const CoxeterType probe = resolve_group(type, lo);
  if (!probe.is_classical()) throw UsageError("bench covers types A, B and D");
  const Family f = probe.family;
  using clock = std::chrono::steady_clock;
  out << std::left << std::setw(6) << "n" << std::setw(16) << "recurrence_ms" << std::setw(16) << "oracle_ms"
      << "classes_agree\n";
  for (int n = lo; n <= hi; ++n) {
    clear_recurrence_cache();
    // type A is benchmarked on n letters
    const auto t0 = clock::now();
    std::map<CycleType, IntPoly> fast;
    for (int m = 0; 2 * m <= n; ++m)
      for (int e = 0; 2 * m + e <= n; ++e) {
        if (f == Family::A && e > 0) break;
        IntPoly p = f == Family::A ? class_poly_A(n, m) : f == Family::B ? class_poly_B(n, m, e) : class_poly_D(n, m, e).poly;
        if (!p.is_zero()) fast.emplace(CycleType{m, e}, std::move(p));
      }
    const double rec_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    std::string oracle_ms = "refused", agree = "-";
    try {
      const auto t1 = clock::now();
      const auto slow = oracle_class_table(f, n, EnumerationLimits{allow_large});
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << std::chrono::duration<double, std::milli>(clock::now() - t1).count();
      oracle_ms = os.str();
      agree = slow == fast ? "yes" : "NO";
    } catch (const BudgetExceeded&) {
    }
    std::ostringstream rs;
    rs << std::fixed << std::setprecision(3) << rec_ms;
    out << std::setw(6) << n << std::setw(16) << rs.str() << std::setw(16) << oracle_ms << agree << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Length polynomials of involutions in finite Coxeter groups"};
  app.require_subcommand(0, 1);
  bool show_errata = false;
  std::string data_dir;
  app.add_flag("--show-errata", show_errata, "Print known corrections to the source formulas and tables");
  app.add_option("--data-dir", data_dir, "Directory holding the exceptional tables");

  std::string format = "text";
  const std::vector<std::string> formats{"text", "json", "csv"};

  ClassQuery cq;
  bool per_class = false;
  auto* class_cmd = app.add_subcommand("class-poly", "Length polynomial of one involution class");
  class_cmd->add_option("--type", cq.type, "A, B, D, I2 (with --n) or a group name such as E6")->required();
  class_cmd->add_option("--n", cq.n, "Rank; letters for type A; the order parameter for I2");
  class_cmd->add_option("--m", cq.m, "Transpositions");
  class_cmd->add_option("--e", cq.e, "Negative 1-cycles");
  class_cmd->add_option("--label", cq.label, "Class label for I2 and exceptional groups");
  class_cmd->add_option("--size", cq.size, "Class size, to separate classes sharing a label");
  class_cmd->add_flag("--per-class", per_class, "For a split D class, print one class instead of the union");
  class_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  std::string inv_type;
  std::optional<int> inv_n;
  bool no_cross_check = false;
  auto* inv_cmd = app.add_subcommand("involution-poly", "Length polynomial of all involutions, identity included");
  inv_cmd->add_option("--type", inv_type)->required();
  inv_cmd->add_option("--n", inv_n);
  inv_cmd->add_flag("--no-cross-check", no_cross_check, "Skip the class-sum recomputation");
  inv_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  ClassQuery pq;
  std::string parity = "both";
  bool full = false;
  auto* prof_cmd = app.add_subcommand("profile", "Parity profiles of an aggregate or a class");
  prof_cmd->add_option("--type", pq.type)->required();
  prof_cmd->add_option("--n", pq.n);
  prof_cmd->add_option("--m", pq.m);
  prof_cmd->add_option("--e", pq.e);
  prof_cmd->add_option("--label", pq.label);
  prof_cmd->add_option("--size", pq.size);
  prof_cmd->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even", "both"}));
  prof_cmd->add_flag("--full", full, "Keep the zeros between lengths of the same parity");
  prof_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string group, source = "embedded";
  bool diff = false, allow_large = false;
  auto* tables_cmd = app.add_subcommand("tables", "Involution classes of an exceptional group");
  tables_cmd->add_option("--group", group)->required();
  tables_cmd->add_option("--source", source)->check(CLI::IsMember({"engine", "embedded"}));
  tables_cmd->add_flag("--diff", diff, "Compare engine and embedded tables; exit 1 if they differ");
  tables_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  tables_cmd->add_flag("--allow-large", allow_large, "Permit enumerating W(E7)");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_flag("--allow-large", allow_large, "Include W(E7)");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string scan;
  auto* check_cmd = app.add_subcommand("check", "Scan for non-unimodal profiles");
  check_cmd->add_option("--scan", scan)->required()->check(CLI::IsMember({"paper"}));
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string bench_type = "B", n_range = "2..6";
  auto* bench_cmd = app.add_subcommand("bench", "Time the recurrences against brute force");
  bench_cmd->add_option("--type", bench_type);
  bench_cmd->add_option("--n-range", n_range);
  bench_cmd->add_flag("--allow-large", allow_large, "Run the brute-force oracle past its rank guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!data_dir.empty()) set_data_directory(data_dir);
    if (show_errata)
      for (const auto& note : errata_notes()) out << "erratum: " << note << "\n";

    if (*class_cmd) {
      std::string note;
      nlohmann::json meta;
      const IntPoly p = class_polynomial(cq, per_class, note, meta);
      print_poly(out, format, p, meta);
      if (!note.empty() && format == "text") err << "note: " << note << "\n";
      return 0;
    }
    if (*inv_cmd) {
      const CoxeterType g = resolve_group(inv_type, inv_n);
      const IntPoly p = aggregate_polynomial(g, !no_cross_check);
      nlohmann::json meta{{"group", name(g)}};
      if (g.family == Family::D) {
        const IntPoly companion = b_minus_d_poly(g.n, RecurrenceOptions{!no_cross_check});
        if (format == "json") {
          meta["companion_b_minus_d"] = to_json(companion);
          print_poly(out, format, p, meta);
        } else if (format == "csv") {
          print_poly(out, format, p, meta);
        } else {
          out << "L_W(D" << g.n << ") = " << to_string(p) << "\n";
          out << "L_(B\\D)" << g.n << " = " << to_string(companion) << "\n";
        }
        return 0;
      }
      print_poly(out, format, p, meta);
      if (g.family == Family::I2 && g.n % 2 == 1 && format == "text" && !show_errata)
        err << "note: odd n uses the corrected closed form; see --show-errata\n";
      return 0;
    }
    if (*prof_cmd) {
      std::string note;
      nlohmann::json meta;
      const bool is_class = pq.m || pq.e || !pq.label.empty();
      const CoxeterType g = resolve_group(pq.type, pq.n);
      const IntPoly p = is_class ? class_polynomial(pq, true, note, meta) : aggregate_polynomial(g, true);
      if (full) {
        const Profile fp = full_profile(p);
        if (format == "json")
          out << profile_json(fp).dump(2) << "\n";
        else
          out << format_values(fp.values) << "\n";
        return 0;
      }
      const ParityProfiles pp = parity_profiles(p);
      if (format == "json") {
        nlohmann::json j;
        if (parity != "even") j["odd"] = profile_json(pp.odd);
        if (parity != "odd") j["even"] = profile_json(pp.even);
        out << j.dump(2) << "\n";
      } else if (parity == "odd") {
        out << format_values(pp.odd.values) << "\n";
      } else if (parity == "even") {
        out << format_values(pp.even.values) << "\n";
      } else {
        out << "odd:  " << format_values(pp.odd.values) << "\n";
        out << "even: " << format_values(pp.even.values) << "\n";
      }
      return 0;
    }
    if (*tables_cmd) return cmd_tables(out, err, group, source, diff, format, allow_large);
    if (*verify_cmd) {
      const auto results = run_suite(suite, VerifyOptions{allow_large});
      bool ok = true;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) {
        ok = ok && r.pass;
        if (format == "json")
          arr.push_back({{"suite", r.suite}, {"case", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
          out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name << (r.detail.empty() ? "" : "  [" + r.detail + "]")
              << "\n";
      }
      if (format == "json") out << arr.dump(2) << "\n";
      else out << (ok ? "all cases passed" : "some cases failed") << "\n";
      return ok ? 0 : 1;
    }
    if (*check_cmd) {
      const ScanReport report = scan_counterexamples();
      out << (format == "json" ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.matches() ? 0 : 1;
    }
    if (*bench_cmd) return cmd_bench(out, bench_type, n_range, allow_large);
    if (!show_errata) out << app.help();
    return 0;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MissingData& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TableMismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coxinv
