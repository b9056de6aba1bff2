#include "hjoints/report.hpp"

#include "hjoints/error.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace hjoints {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Unconverged:
      return "UNCONVERGED";
    case CheckStatus::Info:
      return "INFO";
  }
  return "INFO";
}

CheckStatus parse_status(std::string_view text) {
  if (text == "PASS") return CheckStatus::Pass;
  if (text == "FAIL") return CheckStatus::Fail;
  if (text == "UNCONVERGED") return CheckStatus::Unconverged;
  if (text == "INFO") return CheckStatus::Info;
  throw Error(ErrorCode::ParseError, "unknown status '" + std::string(text) + "'");
}

CheckRecord make_check(std::string name, double lhs, double rhs, double slack, double tolerance, std::string detail) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.status = slack >= -tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = std::move(detail);
  return r;
}

bool VerificationReport::failed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

std::string fnv_digest(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

nlohmann::json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error(ErrorCode::ParseError, "expected a number");
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["inputs_digest"] = report.inputs_digest;
  j["version"] = report.version;
  j["seeds"] = report.seeds;
  j["wall_time"] = report.wall_time;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json r;
    r["name"] = c.name;
    r["lhs"] = number_to_json(c.lhs);
    r["rhs"] = number_to_json(c.rhs);
    r["slack"] = number_to_json(c.slack);
    r["status"] = to_string(c.status);
    r["detail"] = c.detail;
    r["certificate"] = c.certificate;
    j["checks"].push_back(std::move(r));
  }
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport report;
    report.command = j.at("command").get<std::string>();
    report.inputs_digest = j.at("inputs_digest").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.seeds = j.at("seeds").get<std::map<std::string, std::uint64_t>>();
    report.wall_time = j.at("wall_time").get<double>();
    for (const auto& r : j.at("checks")) {
      CheckRecord c;
      c.name = r.at("name").get<std::string>();
      c.lhs = number_from_json(r.at("lhs"));
      c.rhs = number_from_json(r.at("rhs"));
      c.slack = number_from_json(r.at("slack"));
      c.status = parse_status(r.at("status").get<std::string>());
      c.detail = r.value("detail", "");
      c.certificate = r.value("certificate", nlohmann::json());
      report.checks.push_back(std::move(c));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream out;
  out << report.command << "  digest " << report.inputs_digest << "\n";
  for (const auto& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-44s lhs=%-14.8g rhs=%-14.8g slack=%.3g", to_string(c.status).c_str(),
                  c.name.c_str(), c.lhs, c.rhs, c.slack);
    out << line;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace hjoints
