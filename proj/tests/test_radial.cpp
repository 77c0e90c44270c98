#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "radial/radial.hpp"

using namespace radial;

namespace {

ReducedWord W(const FreeGroup& g, const char* text) { return parse_word(g, text); }
AlgebraElement D(const FreeGroup& g, const char* text) { return AlgebraElement::delta(W(g, text)); }

}  // namespace

TEST_CASE("w_n") {
  const FreeGroup g(2);
  CHECK(build_w(g, 0) == D(g, "e"));
  CHECK(build_w(g, 1).support_size() == 4);
  CHECK(build_w(g, 2).support_size() == 12);
  CHECK(norm_sq(build_w1_normalized(g)) == QuadScalar(make_rational(4, 3)));
  CHECK(convolve(build_w(g, 1), build_w(g, 4)) == convolve(build_w(g, 4), build_w(g, 1)));
}

TEST_CASE("radial recurrence holds") {
  for (int k : {2, 3}) {
    const FreeGroup g(k);
    const auto r = verify_w_recurrence(g, 6);
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("nu examples") {
  const FreeGroup g(2);
  const auto a1 = parse_letter_set(g, "a1");
  CHECK(nu(g, 3, a1, a1) == 3);
  CHECK(nu(g, 1, a1, a1) == 1);
  CHECK(nu(g, 0, a1, a1) == 0);
  CHECK(nu(g, 2, LetterSet::all(g), LetterSet::all(g)) == 12);
  CHECK_THROWS_AS(nu(g, 2, LetterSet(), a1), std::invalid_argument);
}

TEST_CASE("nu recursion matches brute force") {
  const FreeGroup g2(2);
  const auto all = LetterSet::all(g2).mask();
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::uint64_t s = 1; s <= all; ++s) {
      for (std::uint64_t t = 1; t <= all; ++t) {
        CHECK(nu(g2, n, LetterSet(s), LetterSet(t)) ==
              nu_bruteforce(g2, n, LetterSet(s), LetterSet(t)));
      }
    }
  }
  const FreeGroup g3(3);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> mask(1, LetterSet::all(g3).mask());
  for (int i = 0; i < 40; ++i) {
    const LetterSet s(mask(rng)), t(mask(rng));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(nu(g3, n, s, t) == nu_bruteforce(g3, n, s, t));
  }
}

TEST_CASE("nu of sets equals support of w_n(sigma, tau)") {
  const FreeGroup g(2);
  const auto s = parse_letter_set(g, "a1 A2");
  const auto t = parse_letter_set(g, "a2");
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(BigInt(build_w_sigma_tau(g, n, s, t).support_size()) == nu(g, n, s, t));
  }
}

TEST_CASE("empirical C1") {
  const FreeGroup g(2);
  const auto scan = c1_scan(g, 30, false);
  CHECK(scan.empirical_c1 == 2);
  REQUIRE(scan.running_max.size() == 30);
  CHECK(scan.running_max.front() >= 1);
  for (std::size_t i = 1; i < scan.running_max.size(); ++i) {
    CHECK(scan.running_max[i] >= scan.running_max[i - 1]);
  }
  CHECK(c1_scan(FreeGroup(3), 8, false).empirical_c1 == 3);

  const auto small = c1_scan(g, 3);
  CHECK(small.table.k == 2);
  CHECK(small.table.entries.size() == 3u * 15u * 15u);
}

TEST_CASE("xi_rs examples") {
  const FreeGroup g(2);
  const auto x = word_rs(g, W(g, "a1"), 1, 1);
  CHECK(x.support_size() == 9);
  for (const auto& [w, c] : x.terms()) {
    CHECK(w.length() == 3);
    CHECK(c == QuadScalar(make_rational(1, 3)));
  }
  CHECK(norm_sq(word_rs(g, W(g, "a1 A2"), 2, 3)) == QuadScalar(1));
  CHECK(word_rs(g, W(g, "a1"), 0, 0) == D(g, "a1"));
  CHECK(word_rs(g, W(g, "a1"), -1, 2).is_zero());
  CHECK_THROWS(word_rs(g, W(g, "e"), 1, 1));
  CHECK_THROWS_AS(xi_rs(g, D(g, "a1") + D(g, "a1 a2"), 1, 1), std::invalid_argument);
}

TEST_CASE("isometry and orthonormal cores") {
  const FreeGroup g(2);
  std::vector<AlgebraElement> seeds;
  for (const auto& k : enumerate_ball(g, 2, false)) seeds.push_back(AlgebraElement::delta(k));
  CHECK(verify_isometry(g, seeds, 2, 2).status == Status::Pass);
  const auto cores = enumerate_ball(g, 2, false);
  CHECK(verify_orthonormal_cores(g, cores, 2).status == Status::Pass);
}

TEST_CASE("commutator identity") {
  const FreeGroup g(2);
  for (const char* k : {"a1", "a1 a2", "A2 a1"}) {
    for (int r = 1; r <= 2; ++r) {
      for (int s = 1; s <= 2; ++s) {
        CHECK(commutator_residual(g, W(g, k), r, s).is_zero());
        CHECK(verify_commutator_identity(g, W(g, k), r, s).status == Status::Pass);
      }
    }
  }
  // At r = 0 the left boundary term survives and is only reported.
  CHECK_FALSE(commutator_residual(g, W(g, "a1"), 0, 1).is_zero());
  CHECK(verify_commutator_identity(g, W(g, "a1"), 0, 1).status == Status::Reported);
  CHECK_THROWS(verify_commutator_identity(g, W(g, "e"), 1, 1));
}

TEST_CASE("seed spaces") {
  const FreeGroup g(2);
  CHECK(find_radulescu_seeds(g, 1).size() == 3);
  CHECK(find_radulescu_seeds(g, 2).size() == 5);

  for (std::size_t l : {1u, 2u}) {
    for (const auto& seed : find_radulescu_seeds(g, l)) {
      CHECK(seed.vector.is_homogeneous(l));
      CHECK(project_length(convolve(build_w(g, 1), seed.vector), l - 1).is_zero());
      CHECK(project_length(convolve(seed.vector, build_w(g, 1)), l - 1).is_zero());
      const auto adj = adjoint(seed.vector);
      CHECK((adj == seed.vector || adj == scale(QuadScalar(-1), seed.vector)));
    }
  }
}

TEST_CASE("seed classification") {
  const FreeGroup g(2);
  // The level-one seeds obey the corrected recurrence, sign fixed by adjoint symmetry.
  for (auto seed : find_radulescu_seeds(g, 1)) {
    const auto r = verify_seed_recurrences(g, seed, 2, 2);
    CHECK(r.status == Status::Pass);
    CHECK(seed.kind == SeedKind::Corrected);
    const bool self_adjoint = adjoint(seed.vector) == seed.vector;
    CHECK(seed.sigma == (self_adjoint ? -1 : 1));
  }
  // a1 - a2 lies in the seed space but mixes both symmetries.
  RadulescuSeed mixed{D(g, "a1") - D(g, "a2"), 1};
  CHECK(verify_seed_recurrences(g, mixed, 2, 2).status == Status::Reported);
  CHECK(mixed.kind == SeedKind::Unclassified);

  for (auto seed : find_radulescu_seeds(g, 2)) {
    CHECK(verify_seed_recurrences(g, seed, 2, 2).status == Status::Pass);
    CHECK(seed.kind == SeedKind::Pure);
    CHECK(verify_seed_gram(g, seed, 2).status == Status::Pass);
  }
}

TEST_CASE("seed kind strings") {
  for (auto k : {SeedKind::Unclassified, SeedKind::Pure, SeedKind::Corrected}) {
    CHECK(seed_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS(seed_kind_from_string("bogus"));
}

TEST_CASE("completeness ranks") {
  const FreeGroup g(2);
  std::vector<RadulescuSeed> seeds;
  for (std::size_t l = 1; l <= 2; ++l) {
    for (auto& s : find_radulescu_seeds(g, l)) seeds.push_back(std::move(s));
  }
  const auto r0 = completeness_check(g, 0, seeds);
  const auto r1 = completeness_check(g, 1, seeds);
  const auto r2 = completeness_check(g, 2, seeds);
  CHECK(r0.status == Status::Pass);
  CHECK(r1.status == Status::Pass);
  CHECK(r2.status == Status::Pass);
  CHECK(r1.params["observed"]["rank"] == 5);
  CHECK(r2.params["observed"]["rank"] == 17);
  CHECK(r2.params["observed"]["target"] == 17);

  // Without the level-two seeds the ball of radius two is not spanned.
  std::vector<RadulescuSeed> level1(seeds.begin(), seeds.begin() + 3);
  CHECK(completeness_check(g, 2, level1).status == Status::Fail);
}

TEST_CASE("word_rs agrees with the convolution path") {
  for (int k : {2, 3}) {
    const FreeGroup g(k);
    for (const auto& w : enumerate_ball(g, 2, false)) {
      for (int r = 0; r <= 2; ++r) {
        for (int s = 0; s <= 2; ++s) {
          CHECK(word_rs(g, w, r, s) == xi_rs(g, AlgebraElement::delta(w), r, s));
        }
      }
    }
  }
}
