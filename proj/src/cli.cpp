#include "radial/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "radial/coset.hpp"
#include "radial/persist.hpp"
#include "radial/radial.hpp"

namespace radial {

namespace {

constexpr double kDecayTolerance = 0.10;

// Suite defaults when the corresponding flag is absent.
constexpr std::size_t kRecurrenceNMax = 8;
constexpr std::size_t kScanNMax = 15;
constexpr std::size_t kIsometryLength = 3;
constexpr std::size_t kPoolLength = 2;
constexpr int kRadius = 3;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Context {
  FreeGroup group;
  RunConfig cfg;
  std::optional<BigInt> c1_cache;

  const BigInt& c1() {
    if (!c1_cache) c1_cache = c1_scan(group, cfg.n_max.value_or(kScanNMax), false).empirical_c1;
    return *c1_cache;
  }

  std::vector<ReducedWord> cores(std::size_t default_length) const {
    if (cfg.pool.empty()) return standard_cores(group, cfg.length.value_or(default_length));
    std::vector<ReducedWord> out;
    for (const auto& text : cfg.pool) {
      auto w = parse_word(group, text);
      if (w.is_identity()) throw std::invalid_argument("--pool must not contain e");
      out.push_back(w);
    }
    return out;
  }

  int radius() const { return cfg.m.value_or(kRadius); }

  std::vector<EstimateInstance> instances() const {
    auto pool = standard_instances(group);
    if (cfg.m) {
      for (auto& inst : pool) inst.m = *cfg.m;
      std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        return std::tie(a.g1, a.g2, a.h) < std::tie(b.g1, b.g2, b.h);
      });
      pool.erase(std::unique(pool.begin(), pool.end(),
                             [](const auto& a, const auto& b) {
                               return a.g1 == b.g1 && a.g2 == b.g2 && a.h == b.h;
                             }),
                 pool.end());
    }
    // Surface violated hypotheses before any work is scheduled.
    for (const auto& inst : pool) check_count_hypotheses(inst.g1, inst.g2, inst.h, inst.m);
    return pool;
  }
};

using Tasks = std::vector<CheckTask>;

void append(Tasks& into, Tasks more) {
  for (auto& t : more) into.push_back(std::move(t));
}

Tasks recurrence_tasks(Context& ctx) {
  const auto n_max = ctx.cfg.n_max.value_or(kRecurrenceNMax);
  return {[&ctx, n_max] { return verify_w_recurrence(ctx.group, n_max); }};
}

VerificationReport scan_report(const FreeGroup& group, std::size_t n_max,
                               const std::optional<std::filesystem::path>& table_path) {
  const C1Scan scan = c1_scan(group, n_max, table_path.has_value());
  if (table_path) persist_nu_table(scan.table, *table_path);
  VerificationReport rep;
  rep.name = "scan_c1";
  rep.params = {{"K", group.k()}, {"n_max", n_max}};
  rep.status = Status::Reported;
  rep.lhs = format_scalar(QuadScalar(Rational(scan.empirical_c1)), group.d());
  Json running = Json::array();
  for (const auto& v : scan.running_max) running.push_back(v.get_str());
  rep.observed() = {{"empirical_c1", scan.empirical_c1.get_str()}, {"running_max", running}};
  return rep;
}

Tasks isometry_tasks(Context& ctx) {
  const int m = ctx.radius();
  auto cores = std::make_shared<std::vector<ReducedWord>>(ctx.cores(kIsometryLength));
  return {[&ctx, cores, m] {
            std::vector<AlgebraElement> seeds;
            for (const auto& k : *cores) seeds.push_back(AlgebraElement::delta(k));
            return verify_isometry(ctx.group, seeds, m, m);
          },
          [&ctx, cores, m] { return verify_orthonormal_cores(ctx.group, *cores, m); }};
}

Tasks commutator_tasks(Context& ctx) {
  Tasks tasks;
  const int m = ctx.radius();
  for (const auto& k : ctx.cores(kPoolLength)) {
    for (int r = 0; r <= m; ++r) {
      for (int s = 0; s <= m; ++s) {
        tasks.push_back([&ctx, k, r, s] { return verify_commutator_identity(ctx.group, k, r, s); });
      }
    }
  }
  return tasks;
}

std::vector<RadulescuSeed> compute_seeds(const FreeGroup& group, std::size_t max_level) {
  std::vector<RadulescuSeed> seeds;
  for (std::size_t l = 1; l <= max_level; ++l) {
    for (auto& s : find_radulescu_seeds(group, l)) seeds.push_back(std::move(s));
  }
  return seeds;
}

VerificationReport seed_space_report(const FreeGroup& group,
                                     const std::vector<RadulescuSeed>& seeds) {
  VerificationReport rep;
  rep.name = "seed_space";
  rep.params = {{"K", group.k()}};
  rep.status = Status::Reported;
  std::map<std::size_t, std::size_t> dims;
  for (const auto& s : seeds) ++dims[s.level];
  Json d = Json::object();
  for (const auto& [l, n] : dims) d[std::to_string(l)] = n;
  rep.observed() = {{"dimension_by_level", d}};
  return rep;
}

// Classifies every seed in place (one task per seed; each owns its slot),
// then checks the Gram identity for pure seeds.
std::vector<VerificationReport> classify_seeds(Context& ctx, std::vector<RadulescuSeed>& seeds) {
  const int m = ctx.radius();
  Tasks tasks;
  for (auto& seed : seeds) {
    tasks.push_back([&ctx, &seed, m] { return verify_seed_recurrences(ctx.group, seed, m, m); });
  }
  auto reports = run_tasks(tasks, ctx.cfg.jobs, ctx.cfg.timings);
  Tasks gram;
  for (const auto& seed : seeds) {
    if (seed.kind == SeedKind::Pure) {
      gram.push_back([&ctx, &seed, m] { return verify_seed_gram(ctx.group, seed, m); });
    }
  }
  for (auto& r : run_tasks(gram, ctx.cfg.jobs, ctx.cfg.timings)) reports.push_back(std::move(r));
  return reports;
}

std::vector<RadulescuSeed> seeds_for(Context& ctx, std::size_t max_level) {
  if (ctx.cfg.seed_file) return load_seeds(ctx.group, *ctx.cfg.seed_file);
  return compute_seeds(ctx.group, max_level);
}

Tasks count2_tasks(Context& ctx) {
  const auto cores = ctx.cores(kPoolLength);
  const auto words = enumerate_ball(ctx.group, 2, /*include_identity=*/true);
  std::vector<int> ms{2, 3};
  if (ctx.cfg.m) ms = {*ctx.cfg.m};
  // Deterministic spread over (k1, k2, g, h); j = 0 pairs every core with itself.
  Tasks tasks;
  const std::size_t n = cores.size();
  for (int m : ms) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const auto k1 = cores[i];
        const auto k2 = cores[(i + 5 * j) % n];
        const auto g = words[(3 * i + j) % words.size()];
        const auto h = words[(i + 7 * j) % words.size()];
        const auto cap = ctx.cfg.cap;
        tasks.push_back(
            [&ctx, k1, g, h, k2, m, cap] { return verify_pairing(ctx.group, k1, g, h, k2, m, cap); });
      }
    }
  }
  return tasks;
}

Tasks tech2_tasks(Context& ctx) {
  const auto pairs = std::make_shared<std::vector<CorePair>>(all_pairs(ctx.cores(kPoolLength)));
  const BigInt c1 = ctx.c1();
  Tasks tasks;
  for (const auto& inst : ctx.instances()) {
    const auto cap = ctx.cfg.cap;
    tasks.push_back([&ctx, inst, pairs, c1, cap] {
      return verify_tech2(ctx.group, inst.g1, inst.g2, inst.h, inst.m, *pairs, c1, cap);
    });
  }
  return tasks;
}

Tasks partner_tasks(Context& ctx) {
  std::vector<ReducedWord> fixed;
  for (const auto& k : ctx.cores(1)) {
    if (ctx.cfg.pool.empty() ? k.length() <= 1 : true) fixed.push_back(k);
  }
  Tasks tasks;
  for (const auto& inst : ctx.instances()) {
    // Partner scans enumerate every candidate core, so keep to the smallest radius.
    if (!ctx.cfg.m && (inst.g1.length() != 1 || inst.m != 3)) continue;
    for (const auto& k : fixed) {
      for (FixedSide side : {FixedSide::K1, FixedSide::K2}) {
        const auto cap = ctx.cfg.cap;
        tasks.push_back([&ctx, inst, k, side, cap] {
          return verify_partners(ctx.group, k, side, inst.g1, inst.g2, inst.h, inst.m, cap);
        });
      }
    }
  }
  return tasks;
}

Tasks final_estimate_tasks(Context& ctx) {
  const auto etas = standard_etas(ctx.group);
  std::vector<std::pair<EtaSpec, EtaSpec>> eta_pairs;
  for (const auto& e : etas) eta_pairs.emplace_back(e, e);
  eta_pairs.emplace_back(etas[0], etas[1]);

  const BigInt c1 = ctx.c1();
  const auto cap = ctx.cfg.cap;
  Tasks tasks;
  const auto instances = ctx.instances();
  for (const auto& inst : instances) {
    for (const auto& [e1, e2] : eta_pairs) {
      tasks.push_back([&ctx, inst, e1, e2, c1, cap] {
        return verify_final_estimate(ctx.group, e1, e2, inst.g1, inst.g2, inst.h, inst.m, c1, cap);
      });
    }
  }

  // Decay between consecutive radii, one core at a time.
  const std::vector<int> ms = ctx.cfg.m ? std::vector<int>{*ctx.cfg.m, *ctx.cfg.m + 1}
                                        : std::vector<int>{3, 4};
  const auto cores = ctx.cores(kPoolLength);
  for (const auto& inst : instances) {
    if (inst.m != ms.front()) continue;
    for (const auto& k : cores) {
      const EtaSpec eta{{k, QuadScalar(1)}};
      tasks.push_back([&ctx, inst, eta, ms, cap] {
        return verify_estimate_decay(ctx.group, eta, eta, inst.g1, inst.g2, inst.h, ms,
                                     kDecayTolerance, cap);
      });
    }
  }
  return tasks;
}

std::vector<std::string> split_pool(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start));
    if (piece.empty()) throw std::invalid_argument("empty word in --pool");
    out.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int finish(const RunConfig& cfg, const std::string& command,
           const std::vector<VerificationReport>& reports, std::ostream& out) {
  Json config = cfg.to_json();
  config["command"] = command;
  const Json doc = make_document(config, reports);
  const Totals t = tally(reports);
  if (cfg.out) {
    write_document(*cfg.out, doc);
    out << command << ": " << reports.size() << " checks, " << t.pass << " pass, " << t.fail
        << " fail, " << t.reported << " reported\n";
  } else {
    out << dump_document(doc);
  }
  return t.fail == 0 ? 0 : 1;
}

}  // namespace

Json RunConfig::to_json() const {
  Json j;
  j["K"] = k;
  j["n_max"] = n_max ? Json(*n_max) : Json(nullptr);
  j["length"] = length ? Json(*length) : Json(nullptr);
  j["m"] = m ? Json(*m) : Json(nullptr);
  j["cap"] = cap;
  j["pool"] = pool;
  j["seed_file"] = seed_file ? Json(seed_file->string()) : Json(nullptr);
  j["jobs"] = jobs;
  return j;
}

std::uint64_t default_cap() {
  const char* env = std::getenv(kCapEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultWordCap;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::char_traits<char>::length(env) || v == 0) {
    throw std::invalid_argument(std::string(kCapEnvVar) + " is not a positive integer: " + env);
  }
  return v;
}

std::vector<VerificationReport> run_tasks(const std::vector<CheckTask>& tasks, unsigned jobs,
                                          bool timings) {
  std::vector<VerificationReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const auto t0 = std::chrono::steady_clock::now();
        results[i] = tasks[i]();
        if (timings) {
          results[i].ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for radial and coset identities in free groups",
               "radialcheck"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string pool_text;
  std::string cap_text;
  std::size_t nu_n = 0;
  std::string nu_start, nu_end;
  std::optional<std::filesystem::path> table_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "number of free generators K")->check(CLI::Range(2, 32));
    sub->add_option("--n-max", cfg.n_max, "largest n for recurrence / nu scans");
    sub->add_option("--length", cfg.length, "largest core length (or completeness cutoff L)");
    sub->add_option("--m", cfg.m, "radius m (r, s bound for isometry and seed checks)")
        ->check(CLI::Range(0, 64));
    sub->add_option("--seed-file", cfg.seed_file, "seed JSON to write (find-seeds) or read");
    sub->add_option("--pool", pool_text, "comma-separated core words, e.g. \"a1,a1 A2\"");
    sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    sub->add_option("--cap", cap_text, std::string("enumeration cap (default $") + kCapEnvVar +
                                           " or 10000000)");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1U, 256U));
    sub->add_flag("--timings", cfg.timings, "record wall time per check (breaks byte identity)");
  };

  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify-recurrence", "w_1 w_n three-term recurrence"},
      {"count-nu", "print nu_n(start, end)"},
      {"scan-c1", "scan nu discrepancies for the empirical C1"},
      {"verify-isometry", "norms of k_{r,s} and orthonormality of k_{m,m}"},
      {"verify-commutator", "commutator identity for k_{r,s}"},
      {"find-seeds", "seed spaces, classified; --seed-file saves them"},
      {"verify-seeds", "recurrences and Gram checks for seeds"},
      {"completeness", "rank of radial and seed vectors in the ball of radius L"},
      {"verify-count2", "pairing by convolution vs by set intersection"},
      {"verify-tech2", "intersection difference bound on the standard pool"},
      {"partners", "nonzero partner counts against C2"},
      {"verify-final-estimate", "final estimate bound and decay"},
      {"report-all", "every suite in one document"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    subs[name] = sub;
  }
  subs["count-nu"]->add_option("--n", nu_n, "word length")->required();
  subs["count-nu"]->add_option("--start", nu_start, "first-letter set, e.g. \"a1 A2\"")->required();
  subs["count-nu"]->add_option("--end", nu_end, "last-letter set")->required();
  subs["scan-c1"]->add_option("--table", table_path, "persist the nu table as CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  try {
    cfg.cap = cap_text.empty() ? default_cap() : std::stoull(cap_text);
    if (cfg.cap == 0) throw std::invalid_argument("--cap must be positive");
    if (!pool_text.empty()) cfg.pool = split_pool(pool_text);

    Context ctx{FreeGroup(cfg.k), cfg, std::nullopt};
    const auto& group = ctx.group;
    const auto run = [&](const Tasks& tasks) { return run_tasks(tasks, cfg.jobs, cfg.timings); };

    if (command == "count-nu") {
      out << nu(group, nu_n, parse_letter_set(group, nu_start), parse_letter_set(group, nu_end))
                 .get_str()
          << "\n";
      return 0;
    }

    std::vector<VerificationReport> reports;
    const auto add = [&](std::vector<VerificationReport> more) {
      for (auto& r : more) reports.push_back(std::move(r));
    };
    const std::size_t seed_levels = cfg.length.value_or(kPoolLength);

    if (command == "verify-recurrence") {
      add(run(recurrence_tasks(ctx)));
    } else if (command == "scan-c1") {
      reports.push_back(scan_report(group, cfg.n_max.value_or(kScanNMax), table_path));
    } else if (command == "verify-isometry") {
      add(run(isometry_tasks(ctx)));
    } else if (command == "verify-commutator") {
      add(run(commutator_tasks(ctx)));
    } else if (command == "find-seeds") {
      auto seeds = compute_seeds(group, seed_levels);
      reports.push_back(seed_space_report(group, seeds));
      add(classify_seeds(ctx, seeds));
      if (cfg.seed_file) save_seeds(group, seeds, *cfg.seed_file);
    } else if (command == "verify-seeds") {
      auto seeds = seeds_for(ctx, seed_levels);
      add(classify_seeds(ctx, seeds));
    } else if (command == "completeness") {
      const auto seeds = seeds_for(ctx, seed_levels);
      reports.push_back(completeness_check(group, seed_levels, seeds));
    } else if (command == "verify-count2") {
      add(run(count2_tasks(ctx)));
    } else if (command == "verify-tech2") {
      add(run(tech2_tasks(ctx)));
    } else if (command == "partners") {
      add(run(partner_tasks(ctx)));
    } else if (command == "verify-final-estimate") {
      add(run(final_estimate_tasks(ctx)));
    } else if (command == "report-all") {
      Tasks tasks = recurrence_tasks(ctx);
      const std::size_t n_scan = cfg.n_max.value_or(kScanNMax);
      tasks.push_back([&group, n_scan] { return scan_report(group, n_scan, std::nullopt); });
      append(tasks, isometry_tasks(ctx));
      append(tasks, commutator_tasks(ctx));
      add(run(tasks));

      auto seeds = seeds_for(ctx, seed_levels);
      reports.push_back(seed_space_report(group, seeds));
      add(classify_seeds(ctx, seeds));
      reports.push_back(completeness_check(group, seed_levels, seeds));

      ctx.c1();  // computed once, before workers share the context
      Tasks counting = count2_tasks(ctx);
      append(counting, tech2_tasks(ctx));
      append(counting, partner_tasks(ctx));
      append(counting, final_estimate_tasks(ctx));
      add(run(counting));
    }
    return finish(cfg, command, reports, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace radial
