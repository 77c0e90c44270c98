#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "radial/scalar.hpp"

namespace radial {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// pass/fail are asserted outcomes; reported results document a measured
/// quantity and never fail a run.
enum class Status { Pass, Fail, Reported };

std::string to_string(Status s);

struct VerificationReport {
  std::string name;
  Json params = Json::object();
  Status status = Status::Pass;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::optional<double> ratio;
  std::optional<double> ms;

  bool failed() const { return status == Status::Fail; }
  /// Measured side data lives under params.observed.
  Json& observed() { return params["observed"]; }

  Json to_json() const;
  static VerificationReport from_json(const Json& j);
};

struct Totals {
  int pass = 0;
  int fail = 0;
  int reported = 0;
};

Totals tally(const std::vector<VerificationReport>& checks);

/// {schema_version, config, checks, totals}
Json make_document(const Json& config, const std::vector<VerificationReport>& checks);

/// Deterministic serialization (2-space indent, trailing newline).
std::string dump_document(const Json& doc);
void write_document(const std::filesystem::path& path, const Json& doc);

}  // namespace radial
