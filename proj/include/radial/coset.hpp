#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "radial/algebra.hpp"
#include "radial/report.hpp"
#include "radial/scalar.hpp"
#include "radial/word.hpp"

namespace radial {

/// Thrown when a configuration would enumerate more than the word cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a counting hypothesis (e.g. m > 2 max(|g1|, |h|)) fails.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultWordCap = 10'000'000;

/// Throws BudgetExceeded if (2K-1)^{2m} > cap.
void check_budget(const FreeGroup& group, int m, std::uint64_t cap);

/// Throws PreconditionError unless |g1| = |g2| and m > 2 max(|g1|, |h|).
void check_count_hypotheses(const ReducedWord& g1, const ReducedWord& g2, const ReducedWord& h,
                            int m);

enum class CosetKind { S, T };

/// S^m(k, g) = {x k y g} or T^m(k, h) = {h x k y}, |x| = |y| = m, no
/// cancelation in x k or k y. Elements are sorted (shortlex) and distinct;
/// strata[i] is the cancelation count of y g (kind S) or h x (kind T) for
/// elements[i].
struct CosetWordSet {
  CosetKind kind = CosetKind::S;
  int m = 0;
  ReducedWord core;
  ReducedWord side;
  std::vector<ReducedWord> elements;
  std::vector<std::uint8_t> strata;
};

CosetWordSet build_S(const FreeGroup& group, int m, const ReducedWord& k, const ReducedWord& g,
                     std::uint64_t cap = kDefaultWordCap);
CosetWordSet build_T(const FreeGroup& group, int m, const ReducedWord& k, const ReducedWord& h,
                     std::uint64_t cap = kDefaultWordCap);

std::map<std::size_t, std::vector<ReducedWord>> stratify(const CosetWordSet& set);

/// |a n b| by sorted merge.
std::uint64_t intersection_size(const CosetWordSet& a, const CosetWordSet& b);

struct PairingValue {
  QuadScalar via_algebra;  // <k1_{m,m} g, h k2_{m,m}> by convolution
  QuadScalar via_sets;     // |T^m(k2,h) n S^m(k1,g)| / (2K-1)^{2m}
  std::uint64_t intersection = 0;

  bool agree() const { return via_algebra == via_sets; }
};

/// Both evaluations of <(k1)_{m,m} g, h (k2)_{m,m}>.
PairingValue pairing(const FreeGroup& group, const ReducedWord& k1, const ReducedWord& g,
                     const ReducedWord& h, const ReducedWord& k2, int m,
                     std::uint64_t cap = kDefaultWordCap);

/// Asserts the two pairing routes agree exactly.
VerificationReport verify_pairing(const FreeGroup& group, const ReducedWord& k1,
                                  const ReducedWord& g, const ReducedWord& h,
                                  const ReducedWord& k2, int m,
                                  std::uint64_t cap = kDefaultWordCap);

using CorePair = std::pair<ReducedWord, ReducedWord>;

std::vector<CorePair> all_pairs(const std::vector<ReducedWord>& cores);

/// For every (k1, k2) in the pool:
/// | |T(k2,h) n S(k1,g1)| - |T(k2,h) n S(k1,g2)| | <= C1 (2K-1)^{m+|h|}.
VerificationReport verify_tech2(const FreeGroup& group, const ReducedWord& g1,
                                const ReducedWord& g2, const ReducedWord& h, int m,
                                const std::vector<CorePair>& core_pool, const BigInt& c1,
                                std::uint64_t cap = kDefaultWordCap);

/// (|g1| + 1)(|h| + 1)(2K)^{|g1| + |h|}: the per-(i, j) partner bound
/// (2K)^{|h|+|g1|} summed over the admissible cancelation cells.
BigInt assembled_c2(const FreeGroup& group, std::size_t g_length, std::size_t h_length);

enum class FixedSide { K1, K2 };

struct PartnerScan {
  std::uint64_t count = 0;
  BigInt c2;
  std::vector<std::size_t> window;  // candidate partner lengths
  std::uint64_t candidates = 0;
  std::vector<ReducedWord> witnesses;
};

/// Partners k of k_fixed (on the given side) whose pairing against
/// (g1 - g2) and h is nonzero, scanned over every length the cancelation
/// counts allow.
PartnerScan nonzero_partners(const FreeGroup& group, const ReducedWord& k_fixed, FixedSide side,
                             const ReducedWord& g1, const ReducedWord& g2, const ReducedWord& h,
                             int m, std::uint64_t cap = kDefaultWordCap);

/// Runs nonzero_partners and asserts count <= C2.
VerificationReport verify_partners(const FreeGroup& group, const ReducedWord& k_fixed,
                                   FixedSide side, const ReducedWord& g1, const ReducedWord& g2,
                                   const ReducedWord& h, int m,
                                   std::uint64_t cap = kDefaultWordCap);

/// eta = sum coefficient * k_{m,m}; cores must not contain e.
using EtaSpec = std::vector<std::pair<ReducedWord, QuadScalar>>;

AlgebraElement materialize_eta(const FreeGroup& group, const EtaSpec& eta, int m);

/// <eta1 (g1 - g2), h eta2>, exact and signed.
QuadScalar final_estimate_lhs(const FreeGroup& group, const EtaSpec& eta1, const EtaSpec& eta2,
                              const ReducedWord& g1, const ReducedWord& g2, const ReducedWord& h,
                              int m, std::uint64_t cap = kDefaultWordCap);

/// |<eta1 (g1 - g2), h eta2>| <= C3 (2K-1)^{-m} ||eta1|| ||eta2||,
/// C3 = C1 C2^{1/2} (2K-1)^{|h|}. Compared exactly through squares, so
/// lhs/rhs in the report are the squared sides; ratio is LHS/RHS.
VerificationReport verify_final_estimate(const FreeGroup& group, const EtaSpec& eta1,
                                         const EtaSpec& eta2, const ReducedWord& g1,
                                         const ReducedWord& g2, const ReducedWord& h, int m,
                                         const BigInt& c1, std::uint64_t cap = kDefaultWordCap);

/// For consecutive radii in `ms`: |LHS(m')| / |LHS(m)| <= 1/(2K-1) + tolerance.
VerificationReport verify_estimate_decay(const FreeGroup& group, const EtaSpec& eta1,
                                         const EtaSpec& eta2, const ReducedWord& g1,
                                         const ReducedWord& g2, const ReducedWord& h,
                                         const std::vector<int>& ms, double tolerance,
                                         std::uint64_t cap = kDefaultWordCap);

struct EstimateInstance {
  ReducedWord g1;
  ReducedWord g2;
  ReducedWord h;
  int m = 0;
};

/// |g1| = |g2| <= 2, |h| <= 1. Length-one g at m in {3, 4}; length-two g at
/// m = 5, the smallest radius with m > 2 max(|g1|, |h|).
std::vector<EstimateInstance> standard_instances(const FreeGroup& group);

/// Every word with 1 <= |k| <= max_length.
std::vector<ReducedWord> standard_cores(const FreeGroup& group, std::size_t max_length = 2);

/// Fixed eta choices used by the final-estimate suite.
std::vector<EtaSpec> standard_etas(const FreeGroup& group);

}  // namespace radial
