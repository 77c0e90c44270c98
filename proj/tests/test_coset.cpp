#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "radial/coset.hpp"
#include "radial/radial.hpp"

using namespace radial;

namespace {

ReducedWord W(const FreeGroup& g, const char* text) { return parse_word(g, text); }

}  // namespace

TEST_CASE("coset set sizes and strata") {
  const FreeGroup g(2);
  const auto s = build_S(g, 1, W(g, "a1"), W(g, "a2"));
  CHECK(s.elements.size() == 9);
  const auto strata = stratify(s);
  CHECK(strata.at(0).size() == 6);
  CHECK(strata.at(1).size() == 3);
  CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));

  // x k y is always reduced, so |S| = |T| = (2K-1)^{2m} when nothing collapses.
  for (int m = 1; m <= 3; ++m) {
    CHECK(build_S(g, m, W(g, "a1 a2"), W(g, "e")).elements.size() == oracle::ipow(3, 2 * m));
    CHECK(build_T(g, m, W(g, "a1"), W(g, "A2")).elements.size() == oracle::ipow(3, 2 * m));
  }
}

TEST_CASE("coset sets match a naive construction") {
  const FreeGroup g(2);
  for (const char* k : {"a1", "a1 A2"}) {
    for (const char* side : {"e", "a1", "A1", "a2 a1"}) {
      std::set<oracle::Seq> want;
      const auto kseq = oracle::to_seq(W(g, k));
      const auto sseq = oracle::to_seq(W(g, side));
      for (const auto& x : oracle::all_reduced(2, 2)) {
        for (const auto& y : oracle::all_reduced(2, 2)) {
          const auto xky = oracle::concat(oracle::concat(x, kseq), y);
          if (!oracle::is_reduced(xky)) continue;
          want.insert(oracle::reduce(oracle::concat(xky, sseq)));
        }
      }
      std::set<oracle::Seq> got;
      for (const auto& w : build_S(g, 2, W(g, k), W(g, side)).elements) got.insert(oracle::to_seq(w));
      CHECK(got == want);
    }
  }
}

TEST_CASE("pairing routes agree") {
  const FreeGroup g(2);
  const auto cores = standard_cores(g, 2);
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, cores.size() - 1);
  for (int i = 0; i < 30; ++i) {
    const auto& k1 = cores[pick(rng)];
    const auto& k2 = cores[pick(rng)];
    const auto gw = oracle::random_word(rng, 2, 2);
    const auto h = oracle::random_word(rng, 2, 2);
    const auto p = pairing(g, k1, gw, h, k2, 2);
    CHECK(p.agree());
  }
  CHECK(verify_pairing(g, W(g, "a1"), W(g, "a2"), W(g, "A1"), W(g, "a1 a2"), 3).status ==
        Status::Pass);
}

TEST_CASE("pairing special cases") {
  const FreeGroup g(2);
  const auto e = W(g, "e");
  CHECK(pairing(g, W(g, "a1"), e, e, W(g, "a1"), 2).via_sets == QuadScalar(1));
  CHECK(pairing(g, W(g, "a1"), e, e, W(g, "a2"), 2).via_sets.is_zero());
  CHECK(pairing(g, W(g, "a1 a2"), e, e, W(g, "a1"), 2).via_sets.is_zero());
}

TEST_CASE("tech2 bound") {
  const FreeGroup g(2);
  const auto pairs = all_pairs(standard_cores(g, 1));
  CHECK(pairs.size() == 16);
  const auto r = verify_tech2(g, W(g, "a1"), W(g, "a2"), W(g, "a1"), 3, pairs, 2);
  CHECK(r.status == Status::Pass);
}

TEST_CASE("partner counts") {
  const FreeGroup g(2);
  CHECK(assembled_c2(g, 1, 1) == 64);
  const auto g1 = W(g, "a1"), g2 = W(g, "a2"), h = W(g, "a1");
  const auto p1 = nonzero_partners(g, W(g, "a1"), FixedSide::K1, g1, g2, h, 3);
  CHECK(p1.count == 5);
  CHECK(p1.window == std::vector<std::size_t>{1, 3});
  const auto p2 = nonzero_partners(g, W(g, "a1 a2"), FixedSide::K1, g1, g2, h, 3);
  CHECK(p2.count == 7);
  CHECK(p2.window == std::vector<std::size_t>{2, 4});
  CHECK(verify_partners(g, W(g, "a1"), FixedSide::K2, g1, g2, h, 3).status == Status::Pass);
}

TEST_CASE("final estimate values") {
  // Signed values: (|T n S(g1)| - |T n S(g2)|) / 3^{2m}.
  const FreeGroup g(2);
  const EtaSpec eta{{W(g, "a1"), QuadScalar(1)}};
  const auto g1 = W(g, "a1"), g2 = W(g, "a2"), h = W(g, "a1");
  CHECK(final_estimate_lhs(g, eta, eta, g1, g2, h, 3) == QuadScalar(make_rational(-2, 243)));
  CHECK(final_estimate_lhs(g, eta, eta, g1, g2, h, 4) == QuadScalar(make_rational(7, 2187)));
  CHECK(final_estimate_lhs(g, eta, eta, g1, g2, h, 5) == QuadScalar(make_rational(-20, 19683)));

  const EtaSpec eta2{{W(g, "a1 a2"), QuadScalar(1)}};
  for (int m = 3; m <= 5; ++m) CHECK(final_estimate_lhs(g, eta2, eta2, g1, g2, h, m).is_zero());

  CHECK(verify_final_estimate(g, eta, eta, g1, g2, h, 4, 2).status == Status::Pass);
  CHECK(verify_estimate_decay(g, eta, eta, g1, g2, h, {3, 4, 5}, 0.10).status == Status::Pass);
  // 7/18 exceeds 1/3 without the tolerance.
  CHECK(verify_estimate_decay(g, eta, eta, g1, g2, h, {3, 4}, 0.0).status == Status::Fail);
}

TEST_CASE("materialized eta norms") {
  const FreeGroup g(2);
  for (const auto& eta : standard_etas(g)) {
    QuadScalar want;
    for (const auto& [k, c] : eta) want += c * c;
    CHECK(norm_sq(materialize_eta(g, eta, 3)) == want);
  }
}

TEST_CASE("standard pool") {
  const FreeGroup g(2);
  const auto pool = standard_instances(g);
  CHECK(pool.size() == 24);
  for (const auto& inst : pool) {
    CHECK(inst.g1.length() == inst.g2.length());
    CHECK_NOTHROW(check_count_hypotheses(inst.g1, inst.g2, inst.h, inst.m));
  }
  CHECK(standard_cores(g, 2).size() == 16);
}

TEST_CASE("preconditions and budget") {
  const FreeGroup g(2);
  const auto a1 = W(g, "a1");
  CHECK_THROWS_AS(check_count_hypotheses(a1, W(g, "a1 a2"), a1, 5), PreconditionError);
  CHECK_THROWS_AS(check_count_hypotheses(W(g, "a1 a2"), W(g, "a2 a1"), a1, 4), PreconditionError);
  CHECK_NOTHROW(check_count_hypotheses(a1, W(g, "a2"), a1, 3));
  CHECK_THROWS_AS(check_budget(g, 3, 100), BudgetExceeded);
  CHECK_NOTHROW(check_budget(g, 3, 729));
  CHECK_THROWS_AS(build_S(g, 3, a1, a1, 100), BudgetExceeded);
  const EtaSpec eta{{a1, QuadScalar(1)}};
  CHECK_THROWS_AS(verify_final_estimate(g, eta, eta, a1, W(g, "a2"), a1, 2, 2), PreconditionError);
  CHECK_THROWS_AS(verify_final_estimate(g, {{W(g, "e"), QuadScalar(1)}}, eta, a1, W(g, "a2"), a1, 3, 2),
                  std::invalid_argument);
}
