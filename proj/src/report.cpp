#include "folner/report.hpp"

namespace folner {

CheckRow& ReportEnvelope::add(CheckRow row) {
  rows.push_back(std::move(row));
  return rows.back();
}

CheckRow& ReportEnvelope::add_exact(const std::string& name, const std::string& anchor,
                                    const Rational& measured, const Rational& bound,
                                    bool asserted, const std::string& note) {
  CheckRow r;
  r.name = name;
  r.anchor = anchor;
  r.hypothesis = "ok";
  r.measured = rational_to_double(measured);
  r.bound = rational_to_double(bound);
  r.measured_exact = rational_to_string(measured);
  r.bound_exact = rational_to_string(bound);
  r.asserted = asserted;
  r.pass = measured <= bound;
  r.note = note;
  return add(std::move(r));
}

CheckRow& ReportEnvelope::add_exact_ge(const std::string& name, const std::string& anchor,
                                       const Rational& measured, const Rational& lower_bound,
                                       bool asserted, const std::string& note) {
  CheckRow& r = add_exact(name, anchor, measured, lower_bound, asserted, note);
  r.pass = measured >= lower_bound;
  if (!r.note.empty()) r.note += "; ";
  r.note += "pass iff measured >= bound";
  return r;
}

CheckRow& ReportEnvelope::add_float(const std::string& name, const std::string& anchor,
                                    double measured, double bound, bool asserted,
                                    const std::string& note) {
  CheckRow r;
  r.name = name;
  r.anchor = anchor;
  r.hypothesis = "ok";
  r.measured = measured;
  r.bound = bound;
  r.asserted = asserted;
  r.pass = measured <= bound;
  r.note = note;
  return add(std::move(r));
}

void ReportEnvelope::merge(const ReportEnvelope& other, const std::string& prefix) {
  for (CheckRow row : other.rows) {
    row.name = prefix + row.name;
    rows.push_back(std::move(row));
  }
}

std::size_t ReportEnvelope::failed_asserted() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.asserted && !r.pass) ++n;
  return n;
}

Json ReportEnvelope::to_json() const {
  Json j;
  j["config"] = config_echo;
  Json rows_json = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["name"] = r.name;
    row["anchor"] = r.anchor;
    row["hypothesis"] = r.hypothesis;
    row["measured"] = r.measured;
    row["bound"] = r.bound;
    if (!r.measured_exact.empty()) row["measured_exact"] = r.measured_exact;
    if (!r.bound_exact.empty()) row["bound_exact"] = r.bound_exact;
    row["asserted"] = r.asserted;
    row["pass"] = r.pass;
    if (!r.note.empty()) row["note"] = r.note;
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  j["summary"] = Json{{"rows", rows.size()}, {"failed_asserted", failed_asserted()}};
  j["timing"] = Json{{"elapsed_seconds", elapsed_seconds}};
  return j;
}

}  // namespace folner
