#pragma once

#include "arpt/classifier.hpp"

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace arpt {

struct CurveRecord {
  std::optional<std::string> label;
  std::array<Int, 5> a;
  int line = 0;
  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

struct LineError {
  int line;
  std::string message;
};

struct CurveFile {
  std::vector<CurveRecord> records;
  std::vector<LineError> errors;
};

/// One record per nonempty line not starting with '#': an optional label
/// token followed by a1 a2 a3 a4 a6.  Malformed lines become LineErrors.
CurveFile parse_curve_stream(std::istream& in);
/// Throws std::runtime_error when the file cannot be opened.
CurveFile parse_curve_file(const std::string& path);

struct BatchEntry {
  std::string label;
  int line = 0;
  std::optional<ClassificationReport> report;
  std::optional<std::string> error;
  /// Malformed line or singular curve, as opposed to a failed computation.
  bool input_error = false;
};

struct BatchSummary {
  long total = 0;
  long semistable = 0;
  long with_mu3 = 0;
  long with_nonrational_ar = 0;
  long mismatches = 0;
  long errors = 0;
  long input_errors = 0;
  long order16_flags = 0;
};

struct BatchResult {
  /// Input order; parse errors appear at their line position.
  std::vector<BatchEntry> entries;
  BatchSummary summary;
};

/// Classifies every record, in parallel when threads > 1 (0 = hardware
/// concurrency).  Failures are isolated per record.
BatchResult scan(const CurveFile& file, unsigned threads = 0);

std::string emit_batch_json(const BatchResult& batch, int indent = 2);
std::string emit_batch_tsv(const BatchResult& batch);

}  // namespace arpt
