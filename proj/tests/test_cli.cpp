#include <doctest.h>

#include "arpt/corpus.hpp"
#include "arpt/report.hpp"
#include "cli.hpp"
#include "example.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace arpt;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("curve file parsing") {
  std::istringstream in(
      "# comment\n"
      "1302x 1 0 1 354 4684\n"
      "\n"
      "0 0 1 -1 0\n"
      "1 0 1\n"
      "bad 1 2 x 4 5\n"
      "lbl 1 2 3 4 5 6\n");
  CurveFile f = parse_curve_stream(in);
  REQUIRE(f.records.size() == 2);
  CHECK(f.records[0].label == std::string("1302x"));
  CHECK(f.records[0].a == std::array<Int, 5>{1, 0, 1, 354, 4684});
  CHECK(f.records[0].line == 2);
  CHECK_FALSE(f.records[1].label.has_value());
  CHECK(f.records[1].line == 4);
  REQUIRE(f.errors.size() == 3);
  CHECK(f.errors[0].line == 5);
  CHECK(f.errors[1].line == 6);
  CHECK(f.errors[2].line == 7);
  CHECK_THROWS(parse_curve_file("/nonexistent/curves.txt"));
}

TEST_CASE("batch scan isolates bad records and keeps input order") {
  std::istringstream in(
      "a 0 0 1 -1 0\n"
      "sing 0 0 0 0 0\n"
      "oops 1 2\n"
      "b 1 0 1 4 -6\n"
      "c 0 0 0 0 -1\n");
  BatchResult b = scan(parse_curve_stream(in), 2);
  REQUIRE(b.entries.size() == 5);
  CHECK(b.entries[0].label == "a");
  CHECK(b.entries[1].error.has_value());
  CHECK(b.entries[1].input_error);
  CHECK(b.entries[2].error.has_value());
  CHECK(b.entries[3].report->label == "b");
  CHECK(b.summary.total == 5);
  CHECK(b.summary.errors == 2);
  CHECK(b.summary.input_errors == 2);
  CHECK(b.summary.semistable == 2);
  CHECK(b.summary.mismatches == 0);
}

TEST_CASE("scan is order independent") {
  CurveFile file = parse_curve_file(ARPT_CORPUS);
  file.records.resize(std::min<std::size_t>(file.records.size(), 40));
  BatchResult forward = scan(file, 4);
  CurveFile rev = file;
  std::reverse(rev.records.begin(), rev.records.end());
  for (std::size_t i = 0; i < rev.records.size(); ++i) rev.records[i].line = static_cast<int>(i + 1);
  BatchResult backward = scan(rev, 1);
  std::map<std::string, std::string> a, b;
  for (const auto& e : forward.entries) a[e.label] = emit_json(*e.report);
  for (const auto& e : backward.entries) b[e.label] = emit_json(*e.report);
  CHECK(a == b);
  CHECK(forward.entries.front().label == backward.entries.back().label);
}

TEST_CASE("TSV and JSON batch outputs agree") {
  CurveFile file = parse_curve_file(ARPT_CORPUS);
  file.records.resize(std::min<std::size_t>(file.records.size(), 30));
  BatchResult batch = scan(file);
  auto j = nlohmann::json::parse(emit_batch_json(batch));
  std::istringstream tsv(emit_batch_tsv(batch));
  std::string line;
  std::getline(tsv, line);
  CHECK(line == tsv_header());
  std::size_t i = 0;
  while (std::getline(tsv, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, '\t');) cols.push_back(c);
    REQUIRE(cols.size() == 8);
    const auto& r = j["records"][i++]["report"];
    CHECK(cols[0] == r["label"].get<std::string>());
    CHECK(cols[1] == (r["semistable"].get<bool>() ? "true" : "false"));
    CHECK(cols[2] == r["rational_torsion"]["label"].get<std::string>());
    CHECK(cols[3] == r["quadratic_torsion"]["label"].get<std::string>());
    CHECK(cols[4] == (r["mu3_present"].get<bool>() ? "true" : "false"));
    CHECK(cols[5] == std::to_string(r["ar_points"].size()));
    long max_order = 0;
    for (const auto& a : r["ar_points"]) max_order = std::max(max_order, a["order"].get<long>());
    CHECK(cols[6] == std::to_string(max_order));
    CHECK(cols[7] == (r["predicted_equals_actual"].get<bool>() && r["violations"].empty() ? "true" : "false"));
  }
  CHECK(i == batch.entries.size());
  CHECK(j["summary"]["total"] == batch.summary.total);
}

TEST_CASE("command line") {
  std::string text;
  CHECK(run({"gm-check", "--max-order", "1000"}, &text) == 0);
  CHECK(text.find("all almost rational orders divide 6") != std::string::npos);

  CHECK(run({"classify", "--coeffs", "0,0,0,-1,0", "--json"}, &text) == 0);
  auto j = nlohmann::json::parse(text);
  CHECK(j["semistable"] == false);

  CHECK(run({"classify", "--coeffs", "1,0,1,-3321,-157604"}, &text) == 0);
  CHECK(text.find("predicted=actual yes") != std::string::npos);

  CHECK(run({}, &text) == 2);
  CHECK(run({"nonsense"}, &text) == 2);
  CHECK(run({"classify", "--coeffs", "1,2,3"}, &text) == 2);
  CHECK(run({"classify", "--coeffs", "0,0,0,0,0"}, &text) == 2);
  CHECK(run({"gm-check"}, &text) == 2);
  CHECK(run({"scan", "--input", "/nonexistent", "--output", "/tmp/x", "--format", "json"}, &text) == 2);
  CHECK(run({"scan", "--input", ARPT_CORPUS, "--output", "/tmp/x", "--format", "xml"}, &text) == 2);
  CHECK(run({"torsion", "--coeffs", "1,0,1,4,-6", "--d", "1"}, &text) == 2);
  CHECK(run({"torsion", "--coeffs", "1,0,1,4,-6", "--d", "0"}, &text) == 0);
  CHECK(text.find("Z/6") != std::string::npos);
  CHECK(run({"torsion", "--coeffs", "1,0,1,354,4684", "--d", "-3"}, &text) == 0);
  CHECK(text.find("Z/2xZ/6") != std::string::npos);
  CHECK(run({"--help"}, &text) == 0);
}

TEST_CASE("scan subcommand writes both formats") {
  auto in = temp_file("arpt_cli_in.txt");
  {
    std::ofstream f(in);
    f << "1302x 1 0 1 354 4684\niso 1 0 1 -3321 -157604\nbroken 1 2\n";
  }
  auto json_out = temp_file("arpt_cli_out.json"), tsv_out = temp_file("arpt_cli_out.tsv");
  std::string text;
  CHECK(run({"scan", "--input", in.string(), "--output", json_out.string(), "--format", "json"}, &text) == 0);
  CHECK(text.find("mismatches 0") != std::string::npos);
  CHECK(text.find(":3:") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(json_out));
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["summary"]["with_mu3"] == 1);
  CHECK(run({"scan", "--input", in.string(), "--output", tsv_out.string(), "--format", "tsv"}, &text) == 0);
  std::string tsv = slurp(tsv_out);
  CHECK(tsv.find("iso\ttrue\tZ/2\tZ/2xZ/6\ttrue\t10\t6\ttrue") != std::string::npos);
  std::filesystem::remove(in);
  std::filesystem::remove(json_out);
  std::filesystem::remove(tsv_out);
}

TEST_CASE("verify-example transcript") {
  cli::ExampleTranscript t = cli::verify_example();
  std::string text;
  int code = run({"verify-example"}, &text);
  CHECK(code == (t.all_ok() ? 0 : 1));
  for (const auto& f : t.facts) CHECK(text.find(f.fact) != std::string::npos);
  CHECK(t.facts.size() >= 15);
  for (const auto& d : t.diagnostics) CHECK(d.ok);
}
