#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "radial/algebra.hpp"
#include "radial/report.hpp"
#include "radial/scalar.hpp"
#include "radial/word.hpp"

namespace radial {

/// w_n, the sum of all reduced words of length n.
AlgebraElement build_w(const FreeGroup& group, std::size_t n);

/// w_1 / sqrt(2K - 1).
AlgebraElement build_w1_normalized(const FreeGroup& group);

/// Checks w_1 w_n = w_n w_1 and the three-term radial recurrence exactly for
/// 0 <= n <= n_max; stops at the first failing n.
VerificationReport verify_w_recurrence(const FreeGroup& group, std::size_t n_max);

/// w_n(sigma, tau): sum of the length-n words beginning in sigma and ending in tau.
AlgebraElement build_w_sigma_tau(const FreeGroup& group, std::size_t n, const LetterSet& sigma,
                                 const LetterSet& tau);

/// nu_n(sigma, tau) by the 2K-state last-letter recursion. n = 0 gives 0.
/// Throws std::invalid_argument if sigma or tau is empty.
BigInt nu(const FreeGroup& group, std::size_t n, const LetterSet& sigma, const LetterSet& tau);

/// Same count by walking every word that starts in sigma and filtering on tau.
BigInt nu_bruteforce(const FreeGroup& group, std::size_t n, const LetterSet& sigma,
                     const LetterSet& tau);

/// nu_n(sigma, tau) for every n <= max_n and every pair of nonempty letter sets.
struct NuTable {
  struct Key {
    std::size_t n = 0;
    std::uint64_t sigma = 0;
    std::uint64_t tau = 0;
    auto operator<=>(const Key&) const = default;
  };

  int k = 0;
  std::size_t max_n = 0;
  std::map<Key, BigInt> entries;

  friend bool operator==(const NuTable&, const NuTable&) = default;
};

struct C1Scan {
  /// max over n <= n_max and size-matched pairs of |nu(s1,t1) - nu(s2,t2)|
  BigInt empirical_c1;
  /// running_max[n-1] = the same maximum restricted to lengths <= n
  std::vector<BigInt> running_max;
  NuTable table;
};

C1Scan c1_scan(const FreeGroup& group, std::size_t n_max, bool keep_table = true);

/// xi_{r,s} = q_{r+s+l}(w_r xi w_s) / (2K-1)^{(r+s)/2} for a seed homogeneous
/// on W_l, l >= 1. Negative r or s gives the zero element.
/// Throws std::invalid_argument for a non-homogeneous seed or one on W_0.
AlgebraElement xi_rs(const FreeGroup& group, const AlgebraElement& seed, int r, int s);

/// k_{r,s} for a single word k != e.
AlgebraElement word_rs(const FreeGroup& group, const ReducedWord& k, int r, int s);

/// ||xi_{r,s}|| = ||xi|| for every seed and 0 <= r <= r_max, 0 <= s <= s_max,
/// plus <u_{r,s}, v_{r,s}> = <u, v> for every pair of seeds on the same level.
VerificationReport verify_isometry(const FreeGroup& group, std::span<const AlgebraElement> seeds,
                                   int r_max, int s_max);

/// Gram matrix of {k_{m,m}} over `cores` equals the identity.
VerificationReport verify_orthonormal_cores(const FreeGroup& group,
                                            std::span<const ReducedWord> cores, int m);

/// residual = [w~_1, k_{r,s}] - (k_{r+1,s} + k_{r-1,s} - k_{r,s+1} - k_{r,s-1}).
AlgebraElement commutator_residual(const FreeGroup& group, const ReducedWord& k, int r, int s);

/// Interior (r, s >= 1): asserts a zero residual. Boundary (r = 0 or s = 0):
/// reports the residual without asserting. Throws for k = e or negative r, s.
VerificationReport verify_commutator_identity(const FreeGroup& group, const ReducedWord& k, int r,
                                              int s);

enum class SeedKind { Unclassified, Pure, Corrected };

std::string to_string(SeedKind kind);
SeedKind seed_kind_from_string(const std::string& s);

struct RadulescuSeed {
  AlgebraElement vector;
  std::size_t level = 0;
  SeedKind kind = SeedKind::Unclassified;
  /// +1 / -1 for corrected seeds, 0 otherwise.
  int sigma = 0;
};

/// Basis of {xi in W_l : q_{l-1}(w_1 xi) = 0 and q_{l-1}(xi w_1) = 0}, split
/// into self-adjoint and anti-self-adjoint parts and orthogonalised (without
/// normalising) inside each part. Seeds come back unclassified.
std::vector<RadulescuSeed> find_radulescu_seeds(const FreeGroup& group, std::size_t l);

/// Checks w~_1 xi_{r,s} = xi_{r+1,s} + xi_{r-1,s} and its right-hand mirror for
/// 0 <= r <= r_max, 0 <= s <= s_max, classifies the seed from the r = 0 and
/// s = 0 residuals (pure, or corrected with sigma/(2K-1) xi_{0,s-1}), and
/// stores the classification in `seed`.
VerificationReport verify_seed_recurrences(const FreeGroup& group, RadulescuSeed& seed, int r_max,
                                           int s_max);

/// For a pure seed: Gram matrix of {xi_{r,s} : r + s <= R} equals ||xi||^2 * I.
VerificationReport verify_seed_gram(const FreeGroup& group, const RadulescuSeed& seed, int R);

/// rank of {w_n : n <= L} u {xi_{r,s} : r + s + l <= L} against
/// dim span{|w| <= L} = 1 + sum_{n=1}^{L} 2K(2K-1)^{n-1}.
VerificationReport completeness_check(const FreeGroup& group, std::size_t L,
                                      std::span<const RadulescuSeed> seeds);

}  // namespace radial
