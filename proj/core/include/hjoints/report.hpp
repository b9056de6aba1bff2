#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hjoints {

enum class CheckStatus { Pass, Fail, Unconverged, Info };

std::string to_string(CheckStatus status);
CheckStatus parse_status(std::string_view text);

struct CheckRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  CheckStatus status = CheckStatus::Info;
  std::string detail;
  nlohmann::json certificate;  // null when absent
};

// PASS when slack >= -tolerance, FAIL otherwise.
CheckRecord make_check(std::string name, double lhs, double rhs, double slack, double tolerance = 0.0,
                       std::string detail = {});

struct VerificationReport {
  std::string command;
  std::string inputs_digest;
  std::vector<CheckRecord> checks;
  std::map<std::string, std::uint64_t> seeds;
  std::string version;
  double wall_time = 0.0;

  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
  void add(CheckRecord record) { checks.push_back(std::move(record)); }
};

inline constexpr const char* kVersion = "0.1.0";

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv_digest(std::string_view bytes);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

// Fixed-width table for terminals.
std::string report_table(const VerificationReport& report);

// Doubles are written as JSON numbers when finite and as "inf", "-inf" or "nan" otherwise.
nlohmann::json number_to_json(double x);
double number_from_json(const nlohmann::json& j);

}  // namespace hjoints
