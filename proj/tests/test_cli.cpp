#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxinv/cli.hpp"
#include "coxinv/exceptional_data.hpp"

namespace {

struct Result {
  int rc;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "coxinv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = coxinv::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("class polynomials") {
  const Result a = cli({"class-poly", "--type", "A", "--n", "5", "--m", "2"});
  CHECK(a.rc == 0);
  CHECK(a.out.find("4t^6") != std::string::npos);
  const Result b = cli({"class-poly", "--type", "B", "--n", "2", "--m", "1", "--e", "0", "--format", "json"});
  REQUIRE(b.rc == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["group"] == "B2");
  CHECK(j["polynomial"]["coeffs"] == nlohmann::json{"0", "1", "0", "1"});
  const Result h = cli({"class-poly", "--type", "H3", "--label", "A1"});
  CHECK(h.rc == 0);
  CHECK(h.out.rfind("3t + ", 0) == 0);
}

TEST_CASE("aggregates and profiles") {
  const Result d = cli({"involution-poly", "--type", "D", "--n", "2"});
  CHECK(d.rc == 0);
  CHECK(d.out == "L_W(D2) = 1 + 2t + t^2\nL_(B\\D)2 = 1 + t^2\n");
  const Result b6 = cli({"profile", "--type", "B", "--n", "6", "--parity", "even"});
  CHECK(b6.out == "[1,10,20,27,35,41,49,51,55,54,55,51,49,41,35,27,20,10,1]\n");
  const Result i4 = cli({"profile", "--type", "I2", "--n", "4"});
  CHECK(i4.out.find("[2,2]") != std::string::npos);
  CHECK(i4.out.find("[1,0,1]") != std::string::npos);
  const Result big = cli({"involution-poly", "--type", "B", "--n", "30", "--no-cross-check"});
  CHECK(big.rc == 0);
  CHECK(big.out.find("t^900") != std::string::npos);
}

TEST_CASE("exceptional tables") {
  const Result diff = cli({"tables", "--group", "H3", "--source", "engine", "--diff"});
  CHECK(diff.rc == 0);
  const Result csv = cli({"tables", "--group", "H3", "--format", "csv"});
  CHECK(csv.out == "class,size,min_length,profile\nA1,15,1,\"[3,3,3,2,2,1,1]\"\nA1^2,15,2,\"[1,1,2,2,3,3,3]\"\n"
                   "H3,1,15,\"[1]\"\n");
  const Result e8 = cli({"tables", "--group", "E8", "--source", "engine"});
  CHECK(e8.rc == 2);
  CHECK(e8.err.find("E8") != std::string::npos);
  const Result e7 = cli({"tables", "--group", "E7", "--source", "engine"});
  CHECK(e7.rc == 2);
}

TEST_CASE("a table that disagrees with the engine") {
  const auto original = coxinv::data_directory();
  const auto dir = std::filesystem::temp_directory_path() / "coxinv_cli_test";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(original / "exceptional_aggregates.json", dir / "exceptional_aggregates.json",
                             std::filesystem::copy_options::overwrite_existing);
  auto classes = nlohmann::json::parse(std::ifstream(original / "exceptional_classes.json"));
  for (auto& c : classes)
    if (c["group"] == "H3" && c["label"] == "A1") std::swap(c["profile"][0], c["profile"][3]);
  std::ofstream(dir / "exceptional_classes.json") << classes.dump();
  const Result r = cli({"--data-dir", dir.string(), "tables", "--group", "H3", "--source", "engine", "--diff"});
  CHECK(r.rc == 1);
  CHECK_FALSE(r.err.empty());
  coxinv::set_data_directory(original);
  std::filesystem::remove_all(dir);
  CHECK(cli({"tables", "--group", "H3", "--source", "engine", "--diff"}).rc == 0);
}

TEST_CASE("usage errors") {
  CHECK(cli({"class-poly", "--type", "Q", "--n", "2"}).rc == 2);
  CHECK(cli({"class-poly", "--type", "E6", "--label", "X"}).rc == 2);
  CHECK(cli({"class-poly", "--type", "B", "--n", "-1", "--m", "0", "--e", "0"}).rc == 2);
  CHECK(cli({"profile", "--type", "B", "--n", "3", "--parity", "sideways"}).rc == 2);
  CHECK(cli({"no-such-command"}).rc == 2);
  CHECK(cli({"bench", "--type", "B", "--n-range", "9..2"}).rc == 2);
}

TEST_CASE("errata and scan") {
  const Result e = cli({"--show-errata"});
  CHECK(e.rc == 0);
  CHECK(e.out.find("1 + 2t + t^2") != std::string::npos);
  CHECK(e.out.find("60") != std::string::npos);
  const Result scan = cli({"check", "--scan", "paper", "--format", "json"});
  CHECK(scan.rc == 1);
  const auto j = nlohmann::json::parse(scan.out);
  CHECK(j["missing"] == nlohmann::json{"E8 aggregate even"});
  CHECK(j["extra"].empty());
}

TEST_CASE("verify suites") {
  for (const std::string suite : {"classical", "reduction", "recurrence", "dihedral"}) {
    const Result r = cli({"verify", "--suite", suite});
    INFO(suite << "\n" << r.out << r.err);
    CHECK(r.rc == 0);
  }
  // each of these carries one known failure: the E8 even aggregate row
  for (const std::string suite : {"exceptional", "analysis"}) {
    const Result x = cli({"verify", "--suite", suite, "--format", "json"});
    CHECK(x.rc == 1);
    int failed = 0;
    for (const auto& c : nlohmann::json::parse(x.out)) failed += c["pass"] == false;
    CHECK(failed == 1);
  }
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"involution-poly", "--type", "D", "--n", "9"},
        std::vector<std::string>{"tables", "--group", "F4", "--source", "engine", "--format", "json"},
        std::vector<std::string>{"check", "--scan", "paper"}}) {
    const Result first = cli(args);
    const Result second = cli(args);
    CHECK(first.out == second.out);
    CHECK(first.rc == second.rc);
  }
}
