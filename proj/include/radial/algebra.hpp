#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "radial/scalar.hpp"
#include "radial/word.hpp"

namespace radial {

/// Finitely supported x : F_K -> Q(sqrt d), read either as a vector in
/// l^2(F_K) or as an element of the group algebra. Stored as a shortlex-sorted
/// list of (word, coefficient) with no zero coefficients.
class AlgebraElement {
 public:
  using Term = std::pair<ReducedWord, QuadScalar>;

  AlgebraElement() = default;

  static AlgebraElement delta(const ReducedWord& g, QuadScalar c = 1);
  /// Sums duplicate words and drops zeros.
  static AlgebraElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  QuadScalar coefficient(const ReducedWord& g) const;

  /// Sorted, distinct lengths of supported words.
  std::vector<std::size_t> lengths() const;
  /// True iff every supported word has length l (the zero element is homogeneous).
  bool is_homogeneous(std::size_t l) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms_ == y.terms_;
  }

 private:
  std::vector<Term> terms_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const QuadScalar& c, const AlgebraElement& x);

/// Group-algebra product: (xy)(w) = sum over g h = w of x(g) y(h).
/// O(|supp x| |supp y|).
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);

/// Left / right translation by a single group element.
AlgebraElement translate_left(const ReducedWord& g, const AlgebraElement& x);
AlgebraElement translate_right(const AlgebraElement& x, const ReducedWord& g);

/// <x, y> = sum_w x(w) y(w); coefficients are real so there is no conjugation.
QuadScalar inner_product(const AlgebraElement& x, const AlgebraElement& y);
QuadScalar norm_sq(const AlgebraElement& x);

/// Restriction to words of length l (the projection q_l).
AlgebraElement project_length(const AlgebraElement& x, std::size_t l);

/// x* : coefficient of g moves to g^{-1}.
AlgebraElement adjoint(const AlgebraElement& x);

/// Orthogonal projection onto span{w_n : n in lengths(x)}, i.e. the
/// conditional expectation onto the radial algebra restricted to supp x.
AlgebraElement radial_component(const FreeGroup& group, const AlgebraElement& x);

struct DifferenceTerm {
  QuadScalar coefficient;
  ReducedWord plus;   // g1
  ReducedWord minus;  // g2, |g2| = |g1|
};

/// Writes a radial-orthogonal y as sum c_j (g1_j - g2_j) with |g1_j| = |g2_j|,
/// telescoping along the canonical order inside each length class.
/// Throws std::domain_error if radial_component(y) != 0.
std::vector<DifferenceTerm> decompose_mean_zero(const AlgebraElement& y);

/// (word-text, scalar-text) pairs in canonical order; `d` is printed into every scalar.
std::vector<std::pair<std::string, std::string>> serialize(const AlgebraElement& x, int d);
AlgebraElement deserialize(const FreeGroup& group,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace radial
