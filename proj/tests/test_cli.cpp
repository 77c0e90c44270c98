#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "radial/cli.hpp"
#include "radial/persist.hpp"

using namespace radial;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("radial_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("verify-recurrence prints a versioned document") {
  const auto r = run({"verify-recurrence", "--k", "2", "--n-max", "8"});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["config"]["K"] == 2);
  CHECK(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["name"] == "w_recurrence");
  CHECK(doc["checks"][0]["ms"].is_null());
  CHECK(doc["totals"]["fail"] == 0);
}

TEST_CASE("count-nu") {
  const auto r = run({"count-nu", "--k", "2", "--n", "3", "--start", "a1", "--end", "a1"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run({"count-nu", "--k", "3", "--n", "2", "--start", "a1 A2", "--end", "a3"}).out == "2\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"verify-recurrence", "--bogus"}).code == 2);
  CHECK(run({"verify-recurrence", "--k", "1"}).code == 2);
  CHECK(run({"count-nu", "--n", "3"}).code == 2);
  CHECK(run({"count-nu", "--n", "3", "--start", "z9", "--end", "a1"}).code == 2);
  CHECK(run({"verify-count2", "--pool", "a1,e"}).code == 2);
  CHECK(run({"verify-count2", "--pool", "a1,,a2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precondition and budget errors name the problem") {
  const auto pre = run({"verify-tech2", "--m", "2"});
  CHECK(pre.code == 2);
  CHECK(pre.err.find("m > 2*max(|g1|,|h|)") != std::string::npos);

  const auto cap = run({"verify-count2", "--cap", "10"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("budget") != std::string::npos);

  ::setenv(kCapEnvVar, "10", 1);
  CHECK(run({"verify-count2"}).code == 2);
  ::setenv(kCapEnvVar, "lots", 1);
  CHECK(run({"verify-recurrence"}).code == 2);
  ::unsetenv(kCapEnvVar);
  CHECK(default_cap() == 10'000'000);
}

TEST_CASE("pool flag") {
  const auto r = run({"verify-count2", "--pool", "a1, a1 A2 ,A2", "--m", "2"});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["config"]["pool"] == Json({"a1", "a1 A2", "A2"}));
  CHECK(doc["checks"].size() == 12);
}

TEST_CASE("seed file round trip through the CLI") {
  TempDir tmp;
  const auto file = (tmp.path / "seeds.json").string();
  CHECK(run({"find-seeds", "--length", "2", "--m", "2", "--seed-file", file}).code == 0);
  CHECK(load_seeds(FreeGroup(2), file).size() == 8);
  CHECK(run({"verify-seeds", "--m", "2", "--seed-file", file}).code == 0);

  const auto full = run({"completeness", "--length", "2", "--seed-file", file});
  CHECK(full.code == 0);
  CHECK(Json::parse(full.out)["checks"][0]["params"]["observed"]["rank"] == 17);

  // Level-one seeds alone leave the radius-two ball short: an asserted failure.
  const auto level1 = (tmp.path / "level1.json").string();
  CHECK(run({"find-seeds", "--length", "1", "--m", "1", "--seed-file", level1}).code == 0);
  CHECK(run({"completeness", "--length", "2", "--seed-file", level1}).code == 1);

  CHECK(run({"verify-seeds", "--seed-file", (tmp.path / "missing.json").string()}).code == 2);
}

TEST_CASE("scan-c1 persists the nu table") {
  TempDir tmp;
  const auto csv = (tmp.path / "nu.csv").string();
  const auto r = run({"scan-c1", "--n-max", "6", "--table", csv});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["checks"][0]["params"]["observed"]["empirical_c1"] == "2");
  CHECK(load_nu_table(FreeGroup(2), csv).max_n == 6);
}

TEST_CASE("--out writes the report and prints a summary") {
  TempDir tmp;
  const auto path = (tmp.path / "r.json").string();
  const auto r = run({"verify-isometry", "--length", "1", "--m", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out == "verify-isometry: 2 checks, 2 pass, 0 fail, 0 reported\n");
  CHECK(fs::exists(path));
}

TEST_CASE("reports are deterministic and independent of worker count") {
  const auto a = run({"verify-commutator", "--length", "1", "--m", "2", "--jobs", "1"});
  const auto b = run({"verify-commutator", "--length", "1", "--m", "2", "--jobs", "1"});
  const auto c = run({"verify-commutator", "--length", "1", "--m", "2", "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["checks"] == Json::parse(c.out)["checks"]);
}

TEST_CASE("timings fill ms") {
  const auto r = run({"verify-recurrence", "--n-max", "2", "--timings"});
  CHECK(Json::parse(r.out)["checks"][0]["ms"].is_number());
}

TEST_CASE("run_tasks keeps task order and rethrows") {
  std::vector<CheckTask> tasks;
  for (int i = 0; i < 20; ++i) {
    tasks.push_back([i] {
      VerificationReport r;
      r.name = std::to_string(i);
      return r;
    });
  }
  const auto out = run_tasks(tasks, 4, false);
  for (int i = 0; i < 20; ++i) CHECK(out[i].name == std::to_string(i));

  tasks.push_back([]() -> VerificationReport { throw std::runtime_error("boom"); });
  CHECK_THROWS_WITH(run_tasks(tasks, 3, false), "boom");
}
