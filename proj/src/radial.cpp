#include "radial/radial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "radial/linalg.hpp"

namespace radial {

namespace {

QuadScalar bound(const FreeGroup& group, Rational q) {
  return QuadScalar(std::move(q), Rational(0), group.d());
}

std::string residual_summary(const AlgebraElement& x, int d) {
  if (x.is_zero()) return "0";
  return "support " + std::to_string(x.support_size()) + ", norm_sq " +
         format_scalar(norm_sq(x), d);
}

}  // namespace

AlgebraElement build_w(const FreeGroup& group, std::size_t n) {
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(word_count(group, n));
  const QuadScalar one = bound(group, 1);
  for_each_word(group, n, std::nullopt, std::nullopt,
                [&](const ReducedWord& w) { terms.emplace_back(w, one); });
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement build_w1_normalized(const FreeGroup& group) {
  return scale(sqrt_d_power(group.d(), -1), build_w(group, 1));
}

VerificationReport verify_w_recurrence(const FreeGroup& group, std::size_t n_max) {
  VerificationReport rep;
  rep.name = "w_recurrence";
  rep.params = {{"K", group.k()}, {"n_max", n_max}};

  const AlgebraElement w1 = build_w(group, 1);
  AlgebraElement prev;  // w_{n-1}
  AlgebraElement cur = build_w(group, 0);
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    AlgebraElement next = build_w(group, n + 1);
    const AlgebraElement left = convolve(w1, cur);
    const AlgebraElement right = convolve(cur, w1);

    AlgebraElement expected;
    if (n == 0) {
      expected = w1;
    } else if (n == 1) {
      expected = next + scale(QuadScalar(group.alphabet_size()), prev);
    } else {
      expected = next + scale(QuadScalar(group.d()), prev);
    }

    const AlgebraElement commutator = left - right;
    const AlgebraElement residual = left - expected;
    if (!commutator.is_zero() || !residual.is_zero()) {
      rep.status = Status::Fail;
      rep.observed() = {{"first_failure_n", n},
                        {"commutator", residual_summary(commutator, group.d())},
                        {"residual", residual_summary(residual, group.d())}};
      rep.lhs = format_scalar(norm_sq(residual), group.d());
      rep.rhs = format_scalar(QuadScalar(), group.d());
      return rep;
    }
    ++checked;
    prev = std::move(cur);
    cur = std::move(next);
  }
  rep.status = Status::Pass;
  rep.observed() = {{"cases_checked", checked}};
  rep.lhs = format_scalar(QuadScalar(), group.d());
  rep.rhs = format_scalar(QuadScalar(), group.d());
  return rep;
}

AlgebraElement build_w_sigma_tau(const FreeGroup& group, std::size_t n, const LetterSet& sigma,
                                 const LetterSet& tau) {
  if (sigma.empty() || tau.empty()) throw std::invalid_argument("empty constraint set");
  std::vector<AlgebraElement::Term> terms;
  const QuadScalar one = bound(group, 1);
  for_each_word(group, n, sigma, tau,
                [&](const ReducedWord& w) { terms.emplace_back(w, one); });
  return AlgebraElement::from_terms(std::move(terms));
}

BigInt nu(const FreeGroup& group, std::size_t n, const LetterSet& sigma, const LetterSet& tau) {
  if (sigma.empty() || tau.empty()) throw std::invalid_argument("empty constraint set");
  if (n == 0) return 0;
  const int a = group.alphabet_size();

  // state[c] = number of reduced words of the current length starting in
  // sigma and ending with the letter of code c.
  std::vector<BigInt> state(a);
  for (int c = 0; c < a; ++c) state[c] = sigma.contains(Letter::from_code(c)) ? 1 : 0;
  std::vector<BigInt> next(a);
  for (std::size_t len = 1; len < n; ++len) {
    BigInt total = 0;
    for (const auto& v : state) total += v;
    // Extend by any letter except the inverse of the current last one.
    for (int c = 0; c < a; ++c) next[c] = total - state[c ^ 1];
    std::swap(state, next);
  }
  BigInt count = 0;
  for (int c = 0; c < a; ++c) {
    if (tau.contains(Letter::from_code(c))) count += state[c];
  }
  return count;
}

BigInt nu_bruteforce(const FreeGroup& group, std::size_t n, const LetterSet& sigma,
                     const LetterSet& tau) {
  if (sigma.empty() || tau.empty()) throw std::invalid_argument("empty constraint set");
  if (n == 0) return 0;
  std::uint64_t count = 0;
  for_each_word(group, n, sigma, std::nullopt, [&](const ReducedWord& w) {
    if (tau.contains(w.back())) ++count;
  });
  return BigInt(static_cast<unsigned long>(count));
}

C1Scan c1_scan(const FreeGroup& group, std::size_t n_max, bool keep_table) {
  if (n_max < 1) throw std::invalid_argument("c1_scan needs n_max >= 1");
  const int a = group.alphabet_size();
  const std::uint64_t subsets = std::uint64_t{1} << a;

  C1Scan out;
  out.table.k = group.k();
  out.table.max_n = n_max;
  out.empirical_c1 = 0;

  // single[s][t] = nu_n(s, t) for singletons, advanced one length at a time.
  std::vector<std::vector<BigInt>> single(a, std::vector<BigInt>(a, 0));
  for (int s = 0; s < a; ++s) single[s][s] = 1;

  std::vector<std::vector<BigInt>> by_sigma(subsets, std::vector<BigInt>(a));
  std::vector<BigInt> row(subsets);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) {
      for (int s = 0; s < a; ++s) {
        BigInt total = 0;
        for (const auto& v : single[s]) total += v;
        std::vector<BigInt> next(a);
        for (int t = 0; t < a; ++t) next[t] = total - single[s][t ^ 1];
        single[s] = std::move(next);
      }
    }
    // by_sigma[S][t] = sum_{s in S} nu_n(s, t), built from S minus its lowest bit.
    for (std::uint64_t S = 1; S < subsets; ++S) {
      const int low = std::countr_zero(S);
      const std::uint64_t rest = S & (S - 1);
      for (int t = 0; t < a; ++t) {
        by_sigma[S][t] = single[low][t];
        if (rest != 0) by_sigma[S][t] += by_sigma[rest][t];
      }
    }

    // Per (|sigma|, |tau|) class, track min and max.
    std::map<std::pair<int, int>, std::pair<BigInt, BigInt>> range;
    for (std::uint64_t S = 1; S < subsets; ++S) {
      const int ss = std::popcount(S);
      for (std::uint64_t T = 1; T < subsets; ++T) {
        const int low = std::countr_zero(T);
        const std::uint64_t rest = T & (T - 1);
        row[T] = by_sigma[S][low];
        if (rest != 0) row[T] += row[rest];

        const auto key = std::make_pair(ss, std::popcount(T));
        auto it = range.find(key);
        if (it == range.end()) {
          range.emplace(key, std::make_pair(row[T], row[T]));
        } else {
          if (row[T] < it->second.first) it->second.first = row[T];
          if (row[T] > it->second.second) it->second.second = row[T];
        }
        if (keep_table) out.table.entries.emplace(NuTable::Key{n, S, T}, row[T]);
      }
    }
    for (const auto& [key, mm] : range) {
      const BigInt disc = mm.second - mm.first;
      if (disc > out.empirical_c1) out.empirical_c1 = disc;
    }
    out.running_max.push_back(out.empirical_c1);
  }
  return out;
}

AlgebraElement xi_rs(const FreeGroup& group, const AlgebraElement& seed, int r, int s) {
  if (seed.is_zero()) return {};
  const auto lengths = seed.lengths();
  if (lengths.size() != 1) throw std::invalid_argument("xi_rs: seed is not homogeneous");
  const std::size_t l = lengths.front();
  if (l == 0) throw std::invalid_argument("xi_rs: seed supported on W_0");
  if (r < 0 || s < 0) return {};

  const auto ru = static_cast<std::size_t>(r);
  const auto su = static_cast<std::size_t>(s);
  // |gh| <= |g| + |h|, so the top-length part of (w_r xi) w_s only sees the
  // top-length part of w_r xi.
  const AlgebraElement left = project_length(convolve(build_w(group, ru), seed), ru + l);
  const AlgebraElement top = project_length(convolve(left, build_w(group, su)), ru + su + l);
  return scale(sqrt_d_power(group.d(), -(r + s)), top);
}

AlgebraElement word_rs(const FreeGroup& group, const ReducedWord& k, int r, int s) {
  if (k.is_identity()) throw std::invalid_argument("core word must not be the identity");
  if (r < 0 || s < 0) return {};
  if (k.length() + static_cast<std::size_t>(r + s) > ReducedWord::kMaxLength) {
    throw std::invalid_argument("k_{r,s} exceeds the maximum word length");
  }
  // For a single word the top-length part of w_r k w_s is exactly the words
  // x k y with no cancelation, each once, so skip the convolution.
  LetterSet x_last = LetterSet::all(group);
  x_last.erase(k.front().inverse());
  LetterSet y_first = LetterSet::all(group);
  y_first.erase(k.back().inverse());
  const auto xs = r == 0 ? std::vector<ReducedWord>{ReducedWord()}
                         : enumerate_words(group, static_cast<std::size_t>(r), std::nullopt, x_last);
  const auto ys = s == 0 ? std::vector<ReducedWord>{ReducedWord()}
                         : enumerate_words(group, static_cast<std::size_t>(s), y_first, std::nullopt);
  const QuadScalar c = sqrt_d_power(group.d(), -(r + s));
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    ReducedWord xk = x;
    for (std::size_t i = 0; i < k.length(); ++i) xk.push_back_unchecked(k[i]);
    for (const auto& y : ys) {
      ReducedWord w = xk;
      for (std::size_t i = 0; i < y.length(); ++i) w.push_back_unchecked(y[i]);
      terms.emplace_back(w, c);
    }
  }
  return AlgebraElement::from_terms(std::move(terms));
}

VerificationReport verify_isometry(const FreeGroup& group, std::span<const AlgebraElement> seeds,
                                   int r_max, int s_max) {
  VerificationReport rep;
  rep.name = "isometry";
  rep.params = {{"K", group.k()}, {"r_max", r_max}, {"s_max", s_max}};
  Json seed_list = Json::array();
  for (const auto& x : seeds) seed_list.push_back(serialize(x, group.d()));
  rep.params["seeds"] = seed_list;

  std::vector<std::size_t> level(seeds.size(), 0);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto ls = seeds[i].lengths();
    if (ls.size() > 1) throw std::invalid_argument("verify_isometry: non-homogeneous seed");
    if (!ls.empty()) level[i] = ls.front();
  }

  std::size_t norm_checks = 0;
  std::size_t pair_checks = 0;
  for (int r = 0; r <= r_max; ++r) {
    for (int s = 0; s <= s_max; ++s) {
      std::vector<AlgebraElement> images;
      images.reserve(seeds.size());
      for (const auto& x : seeds) images.push_back(xi_rs(group, x, r, s));

      for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = i; j < seeds.size(); ++j) {
          if (i != j && level[i] != level[j]) continue;
          const QuadScalar before = inner_product(seeds[i], seeds[j]);
          const QuadScalar after = inner_product(images[i], images[j]);
          (i == j ? norm_checks : pair_checks)++;
          if (!(before == after)) {
            rep.status = Status::Fail;
            rep.lhs = format_scalar(after, group.d());
            rep.rhs = format_scalar(before, group.d());
            rep.observed() = {{"first_failure", {{"r", r}, {"s", s}, {"i", i}, {"j", j}}}};
            return rep;
          }
        }
      }
    }
  }
  rep.status = Status::Pass;
  rep.observed() = {{"norm_checks", norm_checks}, {"pair_checks", pair_checks}};
  return rep;
}

VerificationReport verify_orthonormal_cores(const FreeGroup& group,
                                            std::span<const ReducedWord> cores, int m) {
  VerificationReport rep;
  rep.name = "orthonormal_cores";
  Json core_list = Json::array();
  for (const auto& k : cores) core_list.push_back(format_word(k));
  rep.params = {{"K", group.k()}, {"m", m}, {"cores", core_list}};

  std::vector<AlgebraElement> images;
  images.reserve(cores.size());
  for (const auto& k : cores) images.push_back(word_rs(group, k, m, m));

  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i; j < images.size(); ++j) {
      const QuadScalar g = inner_product(images[i], images[j]);
      const QuadScalar want = i == j ? QuadScalar(1) : QuadScalar();
      if (!(g == want)) {
        rep.status = Status::Fail;
        rep.lhs = format_scalar(g, group.d());
        rep.rhs = format_scalar(want, group.d());
        rep.observed() = {{"first_failure", {format_word(cores[i]), format_word(cores[j])}}};
        return rep;
      }
    }
  }
  rep.status = Status::Pass;
  rep.observed() = {{"gram_size", images.size()}};
  return rep;
}

AlgebraElement commutator_residual(const FreeGroup& group, const ReducedWord& k, int r, int s) {
  const AlgebraElement w1t = build_w1_normalized(group);
  const AlgebraElement center = word_rs(group, k, r, s);
  AlgebraElement residual = convolve(w1t, center) - convolve(center, w1t);
  residual -= word_rs(group, k, r + 1, s);
  residual -= word_rs(group, k, r - 1, s);
  residual += word_rs(group, k, r, s + 1);
  residual += word_rs(group, k, r, s - 1);
  return residual;
}

VerificationReport verify_commutator_identity(const FreeGroup& group, const ReducedWord& k, int r,
                                              int s) {
  if (k.is_identity()) throw std::invalid_argument("verify_commutator_identity: k = e");
  if (r < 0 || s < 0) throw std::invalid_argument("verify_commutator_identity: negative r or s");

  VerificationReport rep;
  rep.name = "commutator_identity";
  const bool interior = r >= 1 && s >= 1;
  rep.params = {{"K", group.k()},
                {"k", format_word(k)},
                {"r", r},
                {"s", s},
                {"mode", interior ? "interior" : "boundary"}};

  const AlgebraElement residual = commutator_residual(group, k, r, s);
  rep.lhs = format_scalar(norm_sq(residual), group.d());
  rep.rhs = format_scalar(QuadScalar(), group.d());
  rep.observed() = {{"residual_support", residual.support_size()}};
  if (!interior) {
    rep.status = Status::Reported;
    rep.observed()["residual"] = serialize(residual, group.d());
  } else {
    rep.status = residual.is_zero() ? Status::Pass : Status::Fail;
  }
  return rep;
}

std::string to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::Pure:
      return "pure";
    case SeedKind::Corrected:
      return "corrected";
    case SeedKind::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

SeedKind seed_kind_from_string(const std::string& s) {
  if (s == "pure") return SeedKind::Pure;
  if (s == "corrected") return SeedKind::Corrected;
  if (s == "unclassified") return SeedKind::Unclassified;
  throw std::invalid_argument("unknown seed kind '" + s + "'");
}

namespace {

using RVec = std::vector<Rational>;

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scales v to coprime integer coefficients with a positive leading entry.
void make_primitive(RVec& v) {
  BigInt den = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) den = lcm(den, BigInt(x.get_den()));
  }
  BigInt g = 0;
  for (auto& x : v) {
    x *= den;
    g = gcd(g, BigInt(x.get_num()));
  }
  int lead = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (g == 0) return;
  for (auto& x : v) {
    x /= g;
    if (lead < 0) x = -x;
    x.canonicalize();
  }
}

// Orthogonal (not normalised) basis of span(vectors), in order.
std::vector<RVec> orthogonal_basis(std::vector<RVec> vectors) {
  std::vector<RVec> basis;
  for (auto& v : vectors) {
    for (const auto& u : basis) {
      const Rational c = dot(v, u) / dot(u, u);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
    }
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<RadulescuSeed> find_radulescu_seeds(const FreeGroup& group, std::size_t l) {
  if (l < 1) throw std::invalid_argument("find_radulescu_seeds needs l >= 1");
  const auto words = enumerate_words(group, l);
  std::unordered_map<ReducedWord, std::size_t, ReducedWordHash> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

  // Row per u in W_{l-1}: the coefficient of u in q_{l-1}(w_1 xi) (left) and
  // in q_{l-1}(xi w_1) (right). a u reduces to u exactly when xi has a^{-1}u.
  linalg::Matrix<Rational> rows;
  for_each_word(group, l - 1, std::nullopt, std::nullopt, [&](const ReducedWord& u) {
    RVec left(words.size(), 0);
    RVec right(words.size(), 0);
    for (int c = 0; c < group.alphabet_size(); ++c) {
      const Letter a = Letter::from_code(static_cast<std::uint8_t>(c));
      if (u.empty() || u.front() != a.inverse()) {
        left[index.at(multiply(ReducedWord::from_letters(std::vector{a}), u))] = 1;
      }
      if (u.empty() || u.back() != a.inverse()) {
        right[index.at(multiply(u, ReducedWord::from_letters(std::vector{a})))] = 1;
      }
    }
    rows.push_back(std::move(left));
    rows.push_back(std::move(right));
  });
  const auto kernel = linalg::nullspace(rows, words.size());

  // The involution xi -> xi* preserves the kernel; split into its +/- parts.
  std::vector<std::size_t> inv(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) inv[i] = index.at(inverse(words[i]));
  std::vector<RVec> plus;
  std::vector<RVec> minus;
  for (const auto& v : kernel) {
    RVec p(words.size());
    RVec q(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      p[i] = v[i] + v[inv[i]];
      q[i] = v[i] - v[inv[i]];
    }
    plus.push_back(std::move(p));
    minus.push_back(std::move(q));
  }

  std::vector<RadulescuSeed> seeds;
  for (auto* part : {&plus, &minus}) {
    for (const auto& v : orthogonal_basis(std::move(*part))) {
      std::vector<AlgebraElement::Term> terms;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (sgn(v[i]) != 0) terms.emplace_back(words[i], bound(group, v[i]));
      }
      RadulescuSeed seed;
      seed.vector = AlgebraElement::from_terms(std::move(terms));
      seed.level = l;
      seeds.push_back(std::move(seed));
    }
  }
  return seeds;
}

namespace {

// Memoised xi_{r,s} for one seed.
class XiTable {
 public:
  XiTable(const FreeGroup& group, const AlgebraElement& seed) : group_(group), seed_(seed) {}

  const AlgebraElement& at(int r, int s) {
    if (r < 0 || s < 0) return zero_;
    auto [it, fresh] = cache_.try_emplace({r, s});
    if (fresh) it->second = xi_rs(group_, seed_, r, s);
    return it->second;
  }

 private:
  const FreeGroup& group_;
  const AlgebraElement& seed_;
  std::map<std::pair<int, int>, AlgebraElement> cache_;
  AlgebraElement zero_;
};

}  // namespace

VerificationReport verify_seed_recurrences(const FreeGroup& group, RadulescuSeed& seed, int r_max,
                                           int s_max) {
  VerificationReport rep;
  rep.name = "seed_recurrences";
  rep.params = {{"K", group.k()},
                {"level", seed.level},
                {"r_max", r_max},
                {"s_max", s_max},
                {"seed", serialize(seed.vector, group.d())}};
  if (!seed.vector.is_homogeneous(seed.level) || seed.level < 1 || seed.vector.is_zero()) {
    throw std::invalid_argument("verify_seed_recurrences: seed not a nonzero element of W_l, l >= 1");
  }

  XiTable xi(group, seed.vector);
  const AlgebraElement w1t = build_w1_normalized(group);
  auto left_residual = [&](int r, int s) {
    return convolve(w1t, xi.at(r, s)) - xi.at(r + 1, s) - xi.at(r - 1, s);
  };
  auto right_residual = [&](int r, int s) {
    return convolve(xi.at(r, s), w1t) - xi.at(r, s + 1) - xi.at(r, s - 1);
  };

  // Interior cases hold for every homogeneous vector; assert them.
  for (int r = 0; r <= r_max; ++r) {
    for (int s = 0; s <= s_max; ++s) {
      const bool left_bad = r >= 1 && !left_residual(r, s).is_zero();
      const bool right_bad = s >= 1 && !right_residual(r, s).is_zero();
      if (left_bad || right_bad) {
        rep.status = Status::Fail;
        seed.kind = SeedKind::Unclassified;
        seed.sigma = 0;
        rep.observed() = {{"interior_failure", {{"r", r}, {"s", s}, {"side", left_bad ? "left" : "right"}}}};
        return rep;
      }
    }
  }

  std::vector<AlgebraElement> left_boundary;
  std::vector<AlgebraElement> right_boundary;
  bool all_zero = true;
  for (int s = 0; s <= s_max; ++s) {
    left_boundary.push_back(left_residual(0, s));
    all_zero = all_zero && left_boundary.back().is_zero();
  }
  for (int r = 0; r <= r_max; ++r) {
    right_boundary.push_back(right_residual(r, 0));
    all_zero = all_zero && right_boundary.back().is_zero();
  }

  Json norms = Json::array();
  for (const auto& x : left_boundary) norms.push_back(format_scalar(norm_sq(x), group.d()));
  rep.observed() = {{"left_boundary_norm_sq", norms}};

  if (all_zero) {
    seed.kind = SeedKind::Pure;
    seed.sigma = 0;
  } else {
    seed.kind = SeedKind::Unclassified;
    seed.sigma = 0;
    const QuadScalar inv_d = bound(group, Rational(1, group.d()));
    for (int sigma : {1, -1}) {
      const QuadScalar c = inv_d * QuadScalar(sigma);
      bool fits = true;
      for (int s = 0; s <= s_max && fits; ++s) {
        fits = left_boundary[s] == scale(c, xi.at(0, s - 1));
      }
      for (int r = 0; r <= r_max && fits; ++r) {
        fits = right_boundary[r] == scale(c, xi.at(r - 1, 0));
      }
      if (fits) {
        seed.kind = SeedKind::Corrected;
        seed.sigma = sigma;
        break;
      }
    }
  }

  rep.observed()["kind"] = to_string(seed.kind);
  rep.observed()["sigma"] = seed.sigma;
  rep.status = seed.kind == SeedKind::Unclassified ? Status::Reported : Status::Pass;
  if (seed.kind == SeedKind::Corrected) {
    rep.lhs = format_scalar(QuadScalar(seed.sigma), group.d());
    rep.rhs = format_scalar(bound(group, Rational(seed.sigma, group.d())), group.d());
  }
  return rep;
}

VerificationReport verify_seed_gram(const FreeGroup& group, const RadulescuSeed& seed, int R) {
  VerificationReport rep;
  rep.name = "seed_gram";
  rep.params = {{"K", group.k()},
                {"level", seed.level},
                {"R", R},
                {"seed", serialize(seed.vector, group.d())}};

  std::vector<AlgebraElement> family;
  Json labels = Json::array();
  for (int total = 0; total <= R; ++total) {
    for (int r = 0; r <= total; ++r) {
      family.push_back(xi_rs(group, seed.vector, r, total - r));
      labels.push_back({r, total - r});
    }
  }
  const QuadScalar scale_sq = norm_sq(seed.vector);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      const QuadScalar g = inner_product(family[i], family[j]);
      const QuadScalar want = i == j ? scale_sq : QuadScalar();
      if (!(g == want)) {
        rep.status = Status::Fail;
        rep.lhs = format_scalar(g, group.d());
        rep.rhs = format_scalar(want, group.d());
        rep.observed() = {{"first_failure", {labels[i], labels[j]}}};
        return rep;
      }
    }
  }
  rep.status = Status::Pass;
  rep.lhs = format_scalar(scale_sq, group.d());
  rep.observed() = {{"family_size", family.size()}};
  return rep;
}

VerificationReport completeness_check(const FreeGroup& group, std::size_t L,
                                      std::span<const RadulescuSeed> seeds) {
  VerificationReport rep;
  rep.name = "completeness";
  rep.params = {{"K", group.k()}, {"L", L}};

  const auto basis = enumerate_ball(group, L, /*include_identity=*/true);
  std::unordered_map<ReducedWord, std::size_t, ReducedWordHash> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  linalg::Matrix<QuadScalar> rows;
  auto add_row = [&](const AlgebraElement& x) {
    std::vector<QuadScalar> row(basis.size());
    for (const auto& [w, c] : x.terms()) row[column.at(w)] = c;
    rows.push_back(std::move(row));
  };
  for (std::size_t n = 0; n <= L; ++n) add_row(build_w(group, n));
  std::size_t seed_vectors = 0;
  for (const auto& seed : seeds) {
    if (seed.level < 1 || seed.level > L) continue;
    const int budget = static_cast<int>(L - seed.level);
    for (int r = 0; r <= budget; ++r) {
      for (int s = 0; r + s <= budget; ++s) {
        add_row(xi_rs(group, seed.vector, r, s));
        ++seed_vectors;
      }
    }
  }

  const std::size_t rk = linalg::rank(std::move(rows));
  const std::size_t target = basis.size();
  rep.lhs = format_scalar(QuadScalar(static_cast<long>(rk)), group.d());
  rep.rhs = format_scalar(QuadScalar(static_cast<long>(target)), group.d());
  rep.ratio = static_cast<double>(rk) / static_cast<double>(target);
  rep.observed() = {{"rank", rk},
                    {"target", target},
                    {"deficiency", target - rk},
                    {"radial_vectors", L + 1},
                    {"seed_vectors", seed_vectors}};
  rep.status = rk == target ? Status::Pass : Status::Fail;
  return rep;
}

}  // namespace radial
