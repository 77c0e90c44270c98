#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "radial/persist.hpp"

using namespace radial;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("radial_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("nu table round trip") {
  TempDir tmp;
  const FreeGroup g(2);
  const auto table = c1_scan(g, 4).table;
  persist_nu_table(table, tmp.path / "nu.csv");
  CHECK(load_nu_table(g, tmp.path / "nu.csv") == table);

  std::ifstream in(tmp.path / "nu.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "# K=2 max_n=4");
  std::getline(in, line);
  CHECK(line == "n,sigma_class,tau_class,count");
}

TEST_CASE("nu table errors") {
  TempDir tmp;
  const FreeGroup g(2);
  persist_nu_table(c1_scan(g, 2).table, tmp.path / "nu.csv");
  CHECK_THROWS_AS(load_nu_table(FreeGroup(3), tmp.path / "nu.csv"), std::runtime_error);

  write_text(tmp.path / "bad.csv", "# K=2 max_n=1\nn,sigma_class,tau_class,count\n1,a1,q7,1\n");
  CHECK_THROWS_AS(load_nu_table(g, tmp.path / "bad.csv"), std::runtime_error);
  write_text(tmp.path / "short.csv", "# K=2 max_n=1\nn,sigma_class,tau_class,count\n1,a1\n");
  CHECK_THROWS_AS(load_nu_table(g, tmp.path / "short.csv"), std::runtime_error);
  CHECK_THROWS_AS(load_nu_table(g, tmp.path / "missing.csv"), std::runtime_error);
}

TEST_CASE("empty nu table writes only the header") {
  TempDir tmp;
  const FreeGroup g(2);
  NuTable empty;
  empty.k = 2;
  persist_nu_table(empty, tmp.path / "nu.csv");
  const auto back = load_nu_table(g, tmp.path / "nu.csv");
  CHECK(back.entries.empty());
  CHECK(back.k == 2);
}

TEST_CASE("seed json round trip") {
  TempDir tmp;
  const FreeGroup g(2);
  auto seeds = find_radulescu_seeds(g, 1);
  for (auto& s : find_radulescu_seeds(g, 2)) seeds.push_back(std::move(s));
  for (auto& s : seeds) verify_seed_recurrences(g, s, 1, 1);

  save_seeds(g, seeds, tmp.path / "seeds.json");
  const auto back = load_seeds(g, tmp.path / "seeds.json");
  REQUIRE(back.size() == seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    CHECK(back[i].vector == seeds[i].vector);
    CHECK(back[i].level == seeds[i].level);
    CHECK(back[i].kind == seeds[i].kind);
    CHECK(back[i].sigma == seeds[i].sigma);
  }
  CHECK(seeds_to_json(g, back) == seeds_to_json(g, seeds));
  CHECK_THROWS(load_seeds(FreeGroup(3), tmp.path / "seeds.json"));
}
