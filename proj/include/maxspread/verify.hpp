#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxspread/report.hpp"

namespace maxspread {

inline constexpr const char* kSuiteVersion = "1.0";
inline constexpr int kCheckCount = 12;

struct VerifyOptions {
  bool fast = false;
  std::uint64_t seed = 20240601;
};

enum class CheckStatus { Pass, Fail, Reported };
std::string_view to_string(CheckStatus s);

struct CheckRecord {
  int id = 0;
  std::string name;
  std::string claim;
  CheckStatus status = CheckStatus::Fail;
  Json measured = Json::object();
  Json tolerances = Json::object();
};

/// Runs check `id` (1..kCheckCount). Check failures are recorded in the
/// status; only infrastructure faults throw.
CheckRecord run_check(int id, const VerifyOptions& options);

struct VerificationReport {
  std::string suite_version = kSuiteVersion;
  VerifyOptions options;
  std::vector<CheckRecord> checks;
  int passed() const;
  int failed() const;
  int reported() const;
};

VerificationReport verify_suite(const VerifyOptions& options);
/// Grids and constants used by the suite for the given mode.
Json verify_environment(const VerifyOptions& options);
std::string to_json(const VerificationReport& report);

}  // namespace maxspread
