#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3cert/cli/config.hpp"
#include "k3cert/errors.hpp"

namespace k3cert::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

/// One record per step. Field order in JSON follows the declaration order.
struct Report {
  std::string step;
  bool pass = false;
  Json details = Json::object();
  std::vector<Check> checks;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> elapsed_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

inline Json to_json(const Report& r) {
  Json j;
  j["step"] = r.step;
  j["status"] = r.pass ? "pass" : "fail";
  j["details"] = r.details;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms ? Json(*r.elapsed_ms) : Json(nullptr);
  return j;
}

namespace detail {
inline bool parse_status(const Json& j) {
  const auto s = j.get<std::string>();
  if (s != "pass" && s != "fail") throw ParseError("report: status must be pass or fail");
  return s == "pass";
}
}  // namespace detail

inline Report report_from_json(const Json& j) {
  try {
    Report r;
    r.step = j.at("step").get<std::string>();
    r.pass = detail::parse_status(j.at("status"));
    r.details = j.at("details");
    for (const auto& cj : j.at("checks")) {
      r.checks.push_back({cj.at("name").get<std::string>(), detail::parse_status(cj.at("status")),
                          cj.at("detail").get<std::string>()});
    }
    r.trials = j.at("trials").get<std::uint64_t>();
    r.failures = j.at("failures").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

inline bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

/// Document schema:
///   {"schema": "k3cert-report/1", "status": "pass"|"fail", "reports": [Report...]}
inline Json to_json(const std::vector<Report>& reports) {
  Json doc;
  doc["schema"] = "k3cert-report/1";
  doc["status"] = all_pass(reports) ? "pass" : "fail";
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  doc["reports"] = std::move(list);
  return doc;
}

inline std::vector<Report> reports_from_json(const Json& doc) {
  try {
    if (doc.at("schema").get<std::string>() != "k3cert-report/1") throw ParseError("report: unknown schema");
    std::vector<Report> out;
    for (const auto& r : doc.at("reports")) out.push_back(report_from_json(r));
    if (detail::parse_status(doc.at("status")) != all_pass(out)) throw ParseError("report: inconsistent status");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

inline std::vector<Report> parse_reports(const std::string& text) {
  try {
    return reports_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

/// Text format: a header line per step followed by one line per assertion.
inline void emit_text(std::ostream& os, const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    os << (r.pass ? "PASS" : "FAIL") << ' ' << r.step << " trials=" << r.trials << " failures=" << r.failures
       << " seed=" << r.seed;
    if (r.elapsed_ms) os << " elapsed_ms=" << *r.elapsed_ms;
    os << '\n';
    for (const auto& c : r.checks) {
      os << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  os << (all_pass(reports) ? "PASS" : "FAIL") << ' ' << passed << '/' << reports.size() << " steps\n";
}

inline void emit(std::ostream& os, const std::vector<Report>& reports, Format format) {
  if (format == Format::Json) {
    os << to_json(reports).dump(2) << '\n';
  } else {
    emit_text(os, reports);
  }
}

}  // namespace k3cert::cli
