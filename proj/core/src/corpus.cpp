#include "arpt/corpus.hpp"

#include "arpt/report.hpp"
#include "report_json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace arpt {

namespace {

bool parse_int(const std::string& tok, Int& out) { return out.set_str(tok, 10) == 0; }

std::string record_label(const CurveRecord& r) {
  if (r.label) return *r.label;
  std::string s;
  for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + r.a[i].get_str();
  return s;
}

}  // namespace

CurveFile parse_curve_stream(std::istream& in) {
  CurveFile out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    CurveRecord rec;
    rec.line = lineno;
    std::size_t first = 0;
    Int probe;
    if (toks.size() == 6 && !parse_int(toks[0], probe)) {
      rec.label = toks[0];
      first = 1;
    }
    if (toks.size() - first != 5) {
      out.errors.push_back({lineno, "expected five integer coefficients, found " + std::to_string(toks.size() - first) +
                                        " fields"});
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i) {
      if (!parse_int(toks[first + i], rec.a[i])) {
        out.errors.push_back({lineno, "not an integer: '" + toks[first + i] + "'"});
        ok = false;
      }
    }
    if (ok) out.records.push_back(std::move(rec));
  }
  return out;
}

CurveFile parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file '" + path + "'");
  return parse_curve_stream(in);
}

BatchResult scan(const CurveFile& file, unsigned threads) {
  BatchResult out;
  for (const auto& r : file.records) out.entries.push_back({record_label(r), r.line, std::nullopt, std::nullopt});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < file.records.size(); i = next++) {
      const CurveRecord& rec = file.records[i];
      BatchEntry& entry = out.entries[i];
      try {
        Curve e = curve_from_coeffs(Coefficients{Rat(rec.a[0]), Rat(rec.a[1]), Rat(rec.a[2]), Rat(rec.a[3]), Rat(rec.a[4])});
        entry.report = classify(e, entry.label);
      } catch (const singular_curve& ex) {
        entry.error = ex.what();
        entry.input_error = true;
      } catch (const std::exception& ex) {
        entry.error = ex.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, file.records.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& err : file.errors) out.entries.push_back({"", err.line, std::nullopt, err.message, true});
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const BatchEntry& x, const BatchEntry& y) { return x.line < y.line; });

  BatchSummary& s = out.summary;
  for (const auto& e : out.entries) {
    ++s.total;
    if (!e.report) {
      ++s.errors;
      s.input_errors += e.input_error;
      continue;
    }
    const ClassificationReport& r = *e.report;
    s.semistable += r.semistable;
    s.with_mu3 += r.mu3_present;
    s.with_nonrational_ar += std::any_of(r.ar_points.begin(), r.ar_points.end(),
                                         [](const ARPoint& a) { return !a.point.is_rational(); });
    s.mismatches += !r.consistent();
    s.order16_flags += r.order16_s_found;
  }
  return out;
}

std::string emit_batch_json(const BatchResult& batch, int indent) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& e : batch.entries) {
    if (e.report) {
      records.push_back({{"line", e.line}, {"report", detail::report_to_json(*e.report)}});
    } else {
      records.push_back({{"line", e.line}, {"label", e.label}, {"error", *e.error}});
    }
  }
  const BatchSummary& s = batch.summary;
  nlohmann::json summary{{"total", s.total},
                         {"semistable", s.semistable},
                         {"with_mu3", s.with_mu3},
                         {"with_nonrational_ar", s.with_nonrational_ar},
                         {"mismatches", s.mismatches},
                         {"errors", s.errors},
                         {"input_errors", s.input_errors},
                         {"order16_flags", s.order16_flags}};
  return nlohmann::json{{"records", records}, {"summary", summary}}.dump(indent);
}

std::string emit_batch_tsv(const BatchResult& batch) {
  std::string out = tsv_header() + "\n";
  for (const auto& e : batch.entries) {
    if (e.report) {
      out += tsv_row(*e.report) + "\n";
    } else {
      std::string msg = *e.error;
      std::replace(msg.begin(), msg.end(), '\t', ' ');
      out += "# line " + std::to_string(e.line) + ": " + msg + "\n";
    }
  }
  return out;
}

}  // namespace arpt
