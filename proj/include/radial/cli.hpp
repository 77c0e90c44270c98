#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radial/report.hpp"
#include "radial/word.hpp"

namespace radial {

inline constexpr const char* kCapEnvVar = "RADIAL_ENUM_CAP";

struct RunConfig {
  int k = 2;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> length;
  std::optional<int> m;
  std::uint64_t cap = 0;
  std::vector<std::string> pool;  // word text; empty means the standard pool
  std::optional<std::filesystem::path> seed_file;
  std::optional<std::filesystem::path> out;
  unsigned jobs = 1;
  bool timings = false;

  Json to_json() const;
};

/// Cap from RADIAL_ENUM_CAP when set and valid, otherwise kDefaultWordCap.
std::uint64_t default_cap();

using CheckTask = std::function<VerificationReport()>;

/// Runs tasks on at most `jobs` threads; results come back in task order.
/// The first exception (in task order) is rethrown after all tasks finish.
std::vector<VerificationReport> run_tasks(const std::vector<CheckTask>& tasks, unsigned jobs,
                                          bool timings);

/// Exit codes: 0 no asserted failures, 1 asserted failures, 2 usage or
/// configuration errors (bad flags, budget cap, violated preconditions).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radial
