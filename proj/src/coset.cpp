#include "radial/coset.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "radial/radial.hpp"

namespace radial {

namespace {

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t p = 1;
  for (int i = 0; i < e; ++i) p *= base;
  return p;
}

Json word_json(const ReducedWord& w) { return format_word(w); }

void append(ReducedWord& w, const ReducedWord& tail) {
  for (std::size_t p = 0; p < tail.length(); ++p) w.push_back_unchecked(tail[p]);
}

CosetWordSet finish(CosetWordSet set, std::vector<std::pair<ReducedWord, std::uint8_t>> items) {
  std::sort(items.begin(), items.end());
  set.elements.reserve(items.size());
  set.strata.reserve(items.size());
  for (auto& [w, i] : items) {
    set.elements.push_back(w);
    set.strata.push_back(i);
  }
  return set;
}

void check_core(const ReducedWord& k, int m) {
  if (k.is_identity()) throw std::invalid_argument("core word k must not be the identity");
  if (m < 1) throw std::invalid_argument("radius m must be >= 1");
}

// Length-m words with no cancelation against k on the left (x k) / right (k y).
std::vector<ReducedWord> left_middles(const FreeGroup& group, int m, const ReducedWord& k) {
  LetterSet last = LetterSet::all(group);
  last.erase(k.front().inverse());
  return enumerate_words(group, static_cast<std::size_t>(m), std::nullopt, last);
}

std::vector<ReducedWord> right_middles(const FreeGroup& group, int m, const ReducedWord& k) {
  LetterSet first = LetterSet::all(group);
  first.erase(k.back().inverse());
  return enumerate_words(group, static_cast<std::size_t>(m), first, std::nullopt);
}

}  // namespace

void check_budget(const FreeGroup& group, int m, std::uint64_t cap) {
  const double words = std::pow(static_cast<double>(group.d()), 2.0 * m);
  if (words > static_cast<double>(cap)) {
    throw BudgetExceeded("enumeration budget exceeded: (2K-1)^{2m} = " +
                         std::to_string(group.d()) + "^" + std::to_string(2 * m) + " > cap " +
                         std::to_string(cap));
  }
}

void check_count_hypotheses(const ReducedWord& g1, const ReducedWord& g2, const ReducedWord& h,
                            int m) {
  if (g1.length() != g2.length()) {
    throw PreconditionError("|g1| = |g2| violated: |g1| = " + std::to_string(g1.length()) +
                            ", |g2| = " + std::to_string(g2.length()));
  }
  const std::size_t bound = 2 * std::max(g1.length(), h.length());
  if (m <= 0 || static_cast<std::size_t>(m) <= bound) {
    throw PreconditionError("m > 2*max(|g1|,|h|) violated: m = " + std::to_string(m) +
                            ", 2*max(|g1|,|h|) = " + std::to_string(bound));
  }
}

CosetWordSet build_S(const FreeGroup& group, int m, const ReducedWord& k, const ReducedWord& g,
                     std::uint64_t cap) {
  check_core(k, m);
  check_budget(group, m, cap);
  const auto xs = left_middles(group, m, k);
  const auto ys = right_middles(group, m, k);

  std::vector<std::pair<ReducedWord, std::uint8_t>> items;
  items.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    ReducedWord xk = x;
    append(xk, k);
    for (const auto& y : ys) {
      ReducedWord xky = xk;
      append(xky, y);
      items.emplace_back(multiply(xky, g), static_cast<std::uint8_t>(cancelations(y, g)));
    }
  }
  return finish(CosetWordSet{CosetKind::S, m, k, g, {}, {}}, std::move(items));
}

CosetWordSet build_T(const FreeGroup& group, int m, const ReducedWord& k, const ReducedWord& h,
                     std::uint64_t cap) {
  check_core(k, m);
  check_budget(group, m, cap);
  const auto xs = left_middles(group, m, k);
  const auto ys = right_middles(group, m, k);

  std::vector<std::pair<ReducedWord, std::uint8_t>> items;
  items.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    const Product hx = reduce_concat(h, x);
    ReducedWord hxk = hx.word;
    // x k has no cancelation; h x may have eaten all of x, in which case k
    // meets h directly.
    hxk = multiply(hxk, k);
    for (const auto& y : ys) {
      ReducedWord w = hxk;
      w = multiply(w, y);
      items.emplace_back(w, static_cast<std::uint8_t>(hx.cancelations));
    }
  }
  return finish(CosetWordSet{CosetKind::T, m, k, h, {}, {}}, std::move(items));
}

std::map<std::size_t, std::vector<ReducedWord>> stratify(const CosetWordSet& set) {
  std::map<std::size_t, std::vector<ReducedWord>> out;
  for (std::size_t p = 0; p < set.elements.size(); ++p) {
    out[set.strata[p]].push_back(set.elements[p]);
  }
  return out;
}

std::uint64_t intersection_size(const CosetWordSet& a, const CosetWordSet& b) {
  std::uint64_t n = 0;
  auto i = a.elements.begin();
  auto j = b.elements.begin();
  while (i != a.elements.end() && j != b.elements.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

PairingValue pairing(const FreeGroup& group, const ReducedWord& k1, const ReducedWord& g,
                     const ReducedWord& h, const ReducedWord& k2, int m, std::uint64_t cap) {
  check_core(k1, m);
  check_core(k2, m);
  check_budget(group, m, cap);

  PairingValue out;
  const AlgebraElement left = convolve(word_rs(group, k1, m, m), AlgebraElement::delta(g));
  const AlgebraElement right = convolve(AlgebraElement::delta(h), word_rs(group, k2, m, m));
  out.via_algebra = inner_product(left, right);

  const auto S = build_S(group, m, k1, g, cap);
  const auto T = build_T(group, m, k2, h, cap);
  out.intersection = intersection_size(T, S);
  out.via_sets = QuadScalar(Rational(static_cast<unsigned long>(out.intersection)), Rational(0),
                            group.d()) *
                 sqrt_d_power(group.d(), -4 * m);
  return out;
}

VerificationReport verify_pairing(const FreeGroup& group, const ReducedWord& k1,
                                  const ReducedWord& g, const ReducedWord& h,
                                  const ReducedWord& k2, int m, std::uint64_t cap) {
  VerificationReport rep;
  rep.name = "count2_pairing";
  rep.params = {{"K", group.k()},
                {"k1", word_json(k1)},
                {"g", word_json(g)},
                {"h", word_json(h)},
                {"k2", word_json(k2)},
                {"m", m}};
  const PairingValue v = pairing(group, k1, g, h, k2, m, cap);
  rep.lhs = format_scalar(v.via_algebra, group.d());
  rep.rhs = format_scalar(v.via_sets, group.d());
  rep.observed() = {{"intersection", v.intersection}};
  rep.status = v.agree() ? Status::Pass : Status::Fail;
  return rep;
}

std::vector<CorePair> all_pairs(const std::vector<ReducedWord>& cores) {
  std::vector<CorePair> out;
  out.reserve(cores.size() * cores.size());
  for (const auto& a : cores) {
    for (const auto& b : cores) out.emplace_back(a, b);
  }
  return out;
}

VerificationReport verify_tech2(const FreeGroup& group, const ReducedWord& g1,
                                const ReducedWord& g2, const ReducedWord& h, int m,
                                const std::vector<CorePair>& core_pool, const BigInt& c1,
                                std::uint64_t cap) {
  check_count_hypotheses(g1, g2, h, m);
  check_budget(group, m, cap);

  VerificationReport rep;
  rep.name = "count_tech2";
  rep.params = {{"K", group.k()},
                {"g1", word_json(g1)},
                {"g2", word_json(g2)},
                {"h", word_json(h)},
                {"m", m},
                {"pairs", core_pool.size()},
                {"c1", c1.get_str()}};

  std::map<ReducedWord, CosetWordSet> s1;
  std::map<ReducedWord, CosetWordSet> s2;
  std::map<ReducedWord, CosetWordSet> t;
  auto cached = [&](std::map<ReducedWord, CosetWordSet>& cache, const ReducedWord& key,
                    auto build) -> const CosetWordSet& {
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build()).first;
    return it->second;
  };

  const BigInt bound = c1 * BigInt(ipow(static_cast<std::uint64_t>(group.d()),
                                        m + static_cast<int>(h.length())));
  BigInt worst = 0;
  double worst_ratio = 0.0;
  std::uint64_t violations = 0;
  std::uint64_t nonzero = 0;
  Json first_violation = nullptr;
  for (const auto& [k1, k2] : core_pool) {
    const auto& S1 = cached(s1, k1, [&] { return build_S(group, m, k1, g1, cap); });
    const auto& S2 = cached(s2, k1, [&] { return build_S(group, m, k1, g2, cap); });
    const auto& T = cached(t, k2, [&] { return build_T(group, m, k2, h, cap); });
    const BigInt a = BigInt(static_cast<unsigned long>(intersection_size(T, S1)));
    const BigInt b = BigInt(static_cast<unsigned long>(intersection_size(T, S2)));
    const BigInt diff = abs(a - b);
    if (diff != 0) ++nonzero;
    if (diff > worst) worst = diff;
    const double ratio = sgn(bound) > 0 ? diff.get_d() / bound.get_d() : 0.0;
    worst_ratio = std::max(worst_ratio, ratio);
    if (diff > bound) {
      ++violations;
      if (first_violation.is_null()) {
        first_violation = {{"k1", word_json(k1)}, {"k2", word_json(k2)},
                           {"S1", a.get_str()},   {"S2", b.get_str()}};
      }
    }
  }

  rep.lhs = format_scalar(QuadScalar(Rational(worst)), group.d());
  rep.rhs = format_scalar(QuadScalar(Rational(bound)), group.d());
  rep.ratio = worst_ratio;
  rep.observed() = {{"nonzero_pairs", nonzero},
                    {"violations", violations},
                    {"first_violation", first_violation}};
  rep.status = violations == 0 ? Status::Pass : Status::Fail;
  return rep;
}

BigInt assembled_c2(const FreeGroup& group, std::size_t g_length, std::size_t h_length) {
  BigInt c2 = BigInt(static_cast<unsigned long>((g_length + 1) * (h_length + 1)));
  for (std::size_t i = 0; i < g_length + h_length; ++i) c2 *= group.alphabet_size();
  return c2;
}

PartnerScan nonzero_partners(const FreeGroup& group, const ReducedWord& k_fixed, FixedSide side,
                             const ReducedWord& g1, const ReducedWord& g2, const ReducedWord& h,
                             int m, std::uint64_t cap) {
  check_count_hypotheses(g1, g2, h, m);
  check_core(k_fixed, m);
  check_budget(group, m, cap);

  PartnerScan out;
  out.c2 = assembled_c2(group, g1.length(), h.length());

  // Length matching: |k1| + |g1| - 2i = |k2| + |h| - 2j.
  const auto kf = static_cast<long>(k_fixed.length());
  const auto gl = static_cast<long>(g1.length());
  const auto hl = static_cast<long>(h.length());
  std::vector<std::size_t> window;
  for (long i = 0; i <= gl; ++i) {
    for (long j = 0; j <= hl; ++j) {
      const long len = side == FixedSide::K1 ? kf + gl - 2 * i - hl + 2 * j
                                             : kf + hl - 2 * j - gl + 2 * i;
      if (len >= 1) window.push_back(static_cast<std::size_t>(len));
    }
  }
  std::sort(window.begin(), window.end());
  window.erase(std::unique(window.begin(), window.end()), window.end());
  out.window = window;

  std::optional<CosetWordSet> fixed_s1;
  std::optional<CosetWordSet> fixed_s2;
  std::optional<CosetWordSet> fixed_t;
  if (side == FixedSide::K1) {
    fixed_s1 = build_S(group, m, k_fixed, g1, cap);
    fixed_s2 = build_S(group, m, k_fixed, g2, cap);
  } else {
    fixed_t = build_T(group, m, k_fixed, h, cap);
  }

  for (std::size_t len : window) {
    for_each_word(group, len, std::nullopt, std::nullopt, [&](const ReducedWord& k) {
      ++out.candidates;
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      if (side == FixedSide::K1) {
        const auto T = build_T(group, m, k, h, cap);
        a = intersection_size(T, *fixed_s1);
        b = intersection_size(T, *fixed_s2);
      } else {
        a = intersection_size(*fixed_t, build_S(group, m, k, g1, cap));
        b = intersection_size(*fixed_t, build_S(group, m, k, g2, cap));
      }
      if (a != b) {
        ++out.count;
        out.witnesses.push_back(k);
      }
    });
  }
  return out;
}

VerificationReport verify_partners(const FreeGroup& group, const ReducedWord& k_fixed,
                                   FixedSide side, const ReducedWord& g1, const ReducedWord& g2,
                                   const ReducedWord& h, int m, std::uint64_t cap) {
  VerificationReport rep;
  rep.name = "count_tech1_partners";
  rep.params = {{"K", group.k()},
                {"k_fixed", word_json(k_fixed)},
                {"fixed_side", side == FixedSide::K1 ? "k1" : "k2"},
                {"g1", word_json(g1)},
                {"g2", word_json(g2)},
                {"h", word_json(h)},
                {"m", m}};
  const PartnerScan scan = nonzero_partners(group, k_fixed, side, g1, g2, h, m, cap);
  Json witnesses = Json::array();
  for (const auto& w : scan.witnesses) witnesses.push_back(format_word(w));
  rep.observed() = {{"count", scan.count},
                    {"c2", scan.c2.get_str()},
                    {"window", scan.window},
                    {"candidates", scan.candidates},
                    {"witnesses", witnesses}};
  rep.lhs = format_scalar(QuadScalar(Rational(static_cast<unsigned long>(scan.count))), group.d());
  rep.rhs = format_scalar(QuadScalar(Rational(scan.c2)), group.d());
  rep.ratio = static_cast<double>(scan.count) / scan.c2.get_d();
  rep.status = BigInt(static_cast<unsigned long>(scan.count)) <= scan.c2 ? Status::Pass
                                                                        : Status::Fail;
  return rep;
}

AlgebraElement materialize_eta(const FreeGroup& group, const EtaSpec& eta, int m) {
  AlgebraElement out;
  for (const auto& [k, c] : eta) {
    if (k.is_identity()) throw std::invalid_argument("eta coefficient list references e");
    out += scale(c, word_rs(group, k, m, m));
  }
  return out;
}

namespace {

// <e1 (g1 - g2), h e2> expanded into two translations.
QuadScalar pairing_lhs(const AlgebraElement& e1, const AlgebraElement& e2, const ReducedWord& g1,
                       const ReducedWord& g2, const ReducedWord& h) {
  const AlgebraElement he2 = translate_left(h, e2);
  return inner_product(translate_right(e1, g1), he2) - inner_product(translate_right(e1, g2), he2);
}

}  // namespace

QuadScalar final_estimate_lhs(const FreeGroup& group, const EtaSpec& eta1, const EtaSpec& eta2,
                              const ReducedWord& g1, const ReducedWord& g2, const ReducedWord& h,
                              int m, std::uint64_t cap) {
  check_budget(group, m, cap);
  return pairing_lhs(materialize_eta(group, eta1, m), materialize_eta(group, eta2, m), g1, g2, h);
}

namespace {

Json eta_json(const EtaSpec& eta, int d) {
  Json j = Json::array();
  for (const auto& [k, c] : eta) j.push_back({format_word(k), format_scalar(c, d)});
  return j;
}

}  // namespace

VerificationReport verify_final_estimate(const FreeGroup& group, const EtaSpec& eta1,
                                         const EtaSpec& eta2, const ReducedWord& g1,
                                         const ReducedWord& g2, const ReducedWord& h, int m,
                                         const BigInt& c1, std::uint64_t cap) {
  check_count_hypotheses(g1, g2, h, m);
  for (const auto* eta : {&eta1, &eta2}) {
    for (const auto& term : *eta) {
      if (term.first.is_identity()) throw std::invalid_argument("eta coefficient list references e");
    }
  }

  VerificationReport rep;
  rep.name = "final_estimate";
  rep.params = {{"K", group.k()},
                {"eta1", eta_json(eta1, group.d())},
                {"eta2", eta_json(eta2, group.d())},
                {"g1", word_json(g1)},
                {"g2", word_json(g2)},
                {"h", word_json(h)},
                {"m", m},
                {"c1", c1.get_str()}};

  check_budget(group, m, cap);
  const AlgebraElement e1 = materialize_eta(group, eta1, m);
  const AlgebraElement e2 = materialize_eta(group, eta2, m);
  const QuadScalar lhs = abs(pairing_lhs(e1, e2, g1, g2, h));
  const QuadScalar n1 = norm_sq(e1);
  const QuadScalar n2 = norm_sq(e2);
  const BigInt c2 = assembled_c2(group, g1.length(), h.length());

  // RHS^2 = C1^2 C2 (2K-1)^{2|h| - 2m} ||eta1||^2 ||eta2||^2
  const QuadScalar rhs_sq = QuadScalar(Rational(c1 * c1 * c2), Rational(0), group.d()) *
                            sqrt_d_power(group.d(), 4 * static_cast<int>(h.length()) - 4 * m) *
                            n1 * n2;
  const QuadScalar lhs_sq = lhs * lhs;

  rep.lhs = format_scalar(lhs_sq, group.d());
  rep.rhs = format_scalar(rhs_sq, group.d());
  rep.ratio = rhs_sq.is_zero() ? 0.0 : std::sqrt(lhs_sq.to_double() / rhs_sq.to_double());
  rep.observed() = {{"comparison", "squared"},
                    {"lhs_abs", format_scalar(lhs, group.d())},
                    {"c2", c2.get_str()},
                    {"eta1_norm_sq", format_scalar(n1, group.d())},
                    {"eta2_norm_sq", format_scalar(n2, group.d())}};
  rep.status = compare(lhs_sq, rhs_sq) <= 0 ? Status::Pass : Status::Fail;
  return rep;
}

VerificationReport verify_estimate_decay(const FreeGroup& group, const EtaSpec& eta1,
                                         const EtaSpec& eta2, const ReducedWord& g1,
                                         const ReducedWord& g2, const ReducedWord& h,
                                         const std::vector<int>& ms, double tolerance,
                                         std::uint64_t cap) {
  VerificationReport rep;
  rep.name = "final_estimate_decay";
  rep.params = {{"K", group.k()},
                {"eta1", eta_json(eta1, group.d())},
                {"eta2", eta_json(eta2, group.d())},
                {"g1", word_json(g1)},
                {"g2", word_json(g2)},
                {"h", word_json(h)},
                {"m", ms},
                {"tolerance", tolerance}};

  std::vector<QuadScalar> values;
  for (int m : ms) {
    check_count_hypotheses(g1, g2, h, m);
    values.push_back(abs(final_estimate_lhs(group, eta1, eta2, g1, g2, h, m, cap)));
  }

  const double limit = 1.0 / group.d() + tolerance;
  double worst = 0.0;
  bool ok = true;
  Json ratios = Json::array();
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1].is_zero()) {
      // Nothing to decay from; a nonzero successor is a failure.
      ratios.push_back(nullptr);
      ok = ok && values[i].is_zero();
      continue;
    }
    const double ratio = (values[i] / values[i - 1]).to_double();
    ratios.push_back(ratio);
    worst = std::max(worst, ratio);
    ok = ok && ratio <= limit;
  }
  Json lhs_values = Json::array();
  for (const auto& v : values) lhs_values.push_back(format_scalar(v, group.d()));
  rep.observed() = {{"lhs", lhs_values}, {"successive_ratios", ratios}, {"limit", limit}};
  rep.lhs = format_scalar(values.empty() ? QuadScalar() : values.back(), group.d());
  rep.ratio = worst;
  rep.status = ok ? Status::Pass : Status::Fail;
  return rep;
}

std::vector<EstimateInstance> standard_instances(const FreeGroup& group) {
  auto w = [&](const char* text) { return parse_word(group, text); };
  const std::vector<std::pair<const char*, const char*>> short_g = {
      {"a1", "a2"}, {"a1", "A1"}, {"A2", "a1"}};
  const std::vector<std::pair<const char*, const char*>> long_g = {{"a1 a2", "a2 a1"},
                                                                   {"a1 a1", "A2 A2"}};
  const std::vector<const char*> hs = {"e", "a1", "A2"};

  std::vector<EstimateInstance> out;
  for (int m : {3, 4}) {
    for (const auto& [a, b] : short_g) {
      for (const char* h : hs) out.push_back({w(a), w(b), w(h), m});
    }
  }
  for (const auto& [a, b] : long_g) {
    for (const char* h : hs) out.push_back({w(a), w(b), w(h), 5});
  }
  return out;
}

std::vector<ReducedWord> standard_cores(const FreeGroup& group, std::size_t max_length) {
  return enumerate_ball(group, max_length, /*include_identity=*/false);
}

std::vector<EtaSpec> standard_etas(const FreeGroup& group) {
  auto w = [&](const char* text) { return parse_word(group, text); };
  const int d = group.d();
  auto q = [d](long num, long den) { return QuadScalar(make_rational(num, den), Rational(0), d); };
  return {
      {{w("a1"), q(1, 1)}},
      {{w("a1"), q(1, 1)}, {w("a2 a1"), q(-2, 1)}},
      {{w("A2"), q(1, 1)}, {w("a1 a1"), q(1, 1)}, {w("a2"), q(1, 2)}},
  };
}

}  // namespace radial
