#pragma once

#include "folner/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace folner {

using Json = nlohmann::ordered_json;

/// One verification row. Rows with `asserted` set decide exit codes;
/// measured-only rows are informational and never fail a run.
struct CheckRow {
  std::string name;        // unique row id within the envelope
  std::string anchor;      // check-family tag (stable across runs)
  std::string hypothesis;  // "ok", "skipped: ...", or a diagnostic
  double measured = 0.0;
  double bound = 0.0;
  std::string measured_exact;  // rational form when the check is exact
  std::string bound_exact;
  bool asserted = false;
  bool pass = true;
  std::string note;
};

struct ReportEnvelope {
  Json config_echo;
  std::vector<CheckRow> rows;
  double elapsed_seconds = 0.0;

  CheckRow& add(CheckRow row);
  CheckRow& add_exact(const std::string& name, const std::string& anchor,
                      const Rational& measured, const Rational& bound, bool asserted,
                      const std::string& note = "");
  /// Row with pass <=> measured >= lower_bound (coverage-style checks).
  CheckRow& add_exact_ge(const std::string& name, const std::string& anchor,
                         const Rational& measured, const Rational& lower_bound, bool asserted,
                         const std::string& note = "");
  CheckRow& add_float(const std::string& name, const std::string& anchor, double measured,
                      double bound, bool asserted, const std::string& note = "");
  void merge(const ReportEnvelope& other, const std::string& prefix);

  std::size_t failed_asserted() const;
  bool all_asserted_pass() const { return failed_asserted() == 0; }

  /// Deterministic serialization; all timing data lives in one sub-object so
  /// byte-level comparison of two runs can drop it wholesale.
  Json to_json() const;
};

}  // namespace folner
