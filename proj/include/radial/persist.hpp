#pragma once

#include <filesystem>
#include <vector>

#include "radial/radial.hpp"
#include "radial/report.hpp"

namespace radial {

/// ν table as CSV:
///   # K=<k> max_n=<n>
///   n,sigma_class,tau_class,count
/// with letter classes written as space-separated letters ("a1 A2").
void persist_nu_table(const NuTable& table, const std::filesystem::path& path);

/// Throws std::runtime_error on malformed input or when the file's K differs
/// from `group`.
NuTable load_nu_table(const FreeGroup& group, const std::filesystem::path& path);

Json seeds_to_json(const FreeGroup& group, const std::vector<RadulescuSeed>& seeds);
std::vector<RadulescuSeed> seeds_from_json(const FreeGroup& group, const Json& j);

void save_seeds(const FreeGroup& group, const std::vector<RadulescuSeed>& seeds,
                const std::filesystem::path& path);
std::vector<RadulescuSeed> load_seeds(const FreeGroup& group, const std::filesystem::path& path);

}  // namespace radial
