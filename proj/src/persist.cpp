#include "radial/persist.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace radial {

void persist_nu_table(const NuTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "# K=" << table.k << " max_n=" << table.max_n << "\n";
  out << "n,sigma_class,tau_class,count\n";
  for (const auto& [key, count] : table.entries) {
    out << key.n << ',' << format_letter_set(LetterSet(key.sigma)) << ','
        << format_letter_set(LetterSet(key.tau)) << ',' << count.get_str() << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

NuTable load_nu_table(const FreeGroup& group, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  auto fail = [&](std::size_t line_no, const std::string& why) {
    return std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + why);
  };

  NuTable table;
  std::string line;
  if (!std::getline(in, line)) throw fail(1, "missing metadata line");
  {
    int k = 0;
    unsigned long max_n = 0;
    if (std::sscanf(line.c_str(), "# K=%d max_n=%lu", &k, &max_n) != 2) {
      throw fail(1, "malformed metadata line '" + line + "'");
    }
    if (k != group.k()) {
      throw fail(1, "table was computed for K=" + std::to_string(k) + " but the run uses K=" +
                        std::to_string(group.k()));
    }
    table.k = k;
    table.max_n = max_n;
  }
  if (!std::getline(in, line) || line != "n,sigma_class,tau_class,count") {
    throw fail(2, "missing header row n,sigma_class,tau_class,count");
  }

  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) throw fail(line_no, "expected 4 fields");
    try {
      NuTable::Key key;
      std::size_t used = 0;
      key.n = std::stoul(fields[0], &used);
      if (used != fields[0].size()) throw std::invalid_argument("n");
      const LetterSet sigma = parse_letter_set(group, fields[1]);
      const LetterSet tau = parse_letter_set(group, fields[2]);
      if (sigma.empty() || tau.empty()) throw std::invalid_argument("empty letter class");
      key.sigma = sigma.mask();
      key.tau = tau.mask();
      BigInt count;
      if (fields[3].empty() || count.set_str(fields[3], 10) != 0 || count < 0) {
        throw std::invalid_argument("count");
      }
      if (!table.entries.emplace(key, count).second) throw std::invalid_argument("duplicate row");
    } catch (const std::invalid_argument& e) {
      throw fail(line_no, std::string("malformed row: ") + e.what());
    }
  }
  return table;
}

Json seeds_to_json(const FreeGroup& group, const std::vector<RadulescuSeed>& seeds) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["K"] = group.k();
  j["seeds"] = Json::array();
  for (const auto& s : seeds) {
    j["seeds"].push_back({{"level", s.level},
                          {"kind", to_string(s.kind)},
                          {"sigma", s.sigma},
                          {"vector", serialize(s.vector, group.d())}});
  }
  return j;
}

std::vector<RadulescuSeed> seeds_from_json(const FreeGroup& group, const Json& j) {
  if (j.at("K").get<int>() != group.k()) {
    throw std::runtime_error("seed file was written for K=" + std::to_string(j.at("K").get<int>()));
  }
  std::vector<RadulescuSeed> out;
  for (const auto& s : j.at("seeds")) {
    RadulescuSeed seed;
    seed.level = s.at("level").get<std::size_t>();
    seed.kind = seed_kind_from_string(s.at("kind").get<std::string>());
    seed.sigma = s.at("sigma").get<int>();
    seed.vector = deserialize(
        group, s.at("vector").get<std::vector<std::pair<std::string, std::string>>>());
    if (!seed.vector.is_homogeneous(seed.level)) {
      throw std::runtime_error("seed vector is not homogeneous on level " +
                               std::to_string(seed.level));
    }
    out.push_back(std::move(seed));
  }
  return out;
}

void save_seeds(const FreeGroup& group, const std::vector<RadulescuSeed>& seeds,
                const std::filesystem::path& path) {
  write_document(path, seeds_to_json(group, seeds));
}

std::vector<RadulescuSeed> load_seeds(const FreeGroup& group, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return seeds_from_json(group, Json::parse(in));
}

}  // namespace radial
