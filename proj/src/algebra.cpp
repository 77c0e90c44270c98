#include "radial/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace radial {

namespace {

using Term = AlgebraElement::Term;

bool word_less(const Term& a, const Term& b) { return a.first < b.first; }

template <typename Op>
std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, Op op) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, op(QuadScalar(), j->second));
      ++j;
    } else {
      QuadScalar c = op(i->second, j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

AlgebraElement AlgebraElement::delta(const ReducedWord& g, QuadScalar c) {
  AlgebraElement x;
  if (!c.is_zero()) x.terms_.emplace_back(g, std::move(c));
  return x;
}

AlgebraElement AlgebraElement::from_terms(std::vector<Term> terms) {
  if (!std::is_sorted(terms.begin(), terms.end(), word_less)) {
    std::stable_sort(terms.begin(), terms.end(), word_less);
  }
  AlgebraElement x;
  for (auto& t : terms) {
    if (!x.terms_.empty() && x.terms_.back().first == t.first) {
      x.terms_.back().second += t.second;
    } else {
      if (!x.terms_.empty() && x.terms_.back().second.is_zero()) x.terms_.pop_back();
      x.terms_.push_back(std::move(t));
    }
  }
  if (!x.terms_.empty() && x.terms_.back().second.is_zero()) x.terms_.pop_back();
  return x;
}

QuadScalar AlgebraElement::coefficient(const ReducedWord& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const ReducedWord& w) { return t.first < w; });
  if (it == terms_.end() || !(it->first == g)) return {};
  return it->second;
}

std::vector<std::size_t> AlgebraElement::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& [w, c] : terms_) {
    if (out.empty() || out.back() != w.length()) out.push_back(w.length());
  }
  return out;
}

bool AlgebraElement::is_homogeneous(std::size_t l) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [l](const Term& t) { return t.first.length() == l; });
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement x = *this;
  for (auto& t : x.terms_) t.second = -t.second;
  return x;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  terms_ = merge(terms_, y.terms_, [](const QuadScalar& a, const QuadScalar& b) { return a + b; });
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  terms_ = merge(terms_, y.terms_, [](const QuadScalar& a, const QuadScalar& b) { return a - b; });
  return *this;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }

AlgebraElement scale(const QuadScalar& c, const AlgebraElement& x) {
  if (c.is_zero()) return {};
  std::vector<Term> terms;
  terms.reserve(x.support_size());
  for (const auto& [w, a] : x.terms()) terms.emplace_back(w, c * a);
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
  std::unordered_map<ReducedWord, QuadScalar, ReducedWordHash> acc;
  acc.reserve(x.support_size() * y.support_size());
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) {
      auto [it, fresh] = acc.try_emplace(multiply(g, h), a);
      if (fresh) {
        it->second *= b;
      } else {
        it->second += a * b;
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [w, c] : acc) {
    if (!c.is_zero()) terms.emplace_back(w, std::move(c));
  }
  std::sort(terms.begin(), terms.end(), word_less);
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement translate_left(const ReducedWord& g, const AlgebraElement& x) {
  std::vector<Term> terms;
  terms.reserve(x.support_size());
  for (const auto& [h, c] : x.terms()) terms.emplace_back(multiply(g, h), c);
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement translate_right(const AlgebraElement& x, const ReducedWord& g) {
  std::vector<Term> terms;
  terms.reserve(x.support_size());
  for (const auto& [h, c] : x.terms()) terms.emplace_back(multiply(h, g), c);
  return AlgebraElement::from_terms(std::move(terms));
}

QuadScalar inner_product(const AlgebraElement& x, const AlgebraElement& y) {
  QuadScalar sum;
  auto i = x.terms().begin();
  auto j = y.terms().begin();
  while (i != x.terms().end() && j != y.terms().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

QuadScalar norm_sq(const AlgebraElement& x) { return inner_product(x, x); }

AlgebraElement project_length(const AlgebraElement& x, std::size_t l) {
  std::vector<Term> terms;
  for (const auto& t : x.terms()) {
    if (t.first.length() == l) terms.push_back(t);
  }
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement adjoint(const AlgebraElement& x) {
  std::vector<Term> terms;
  terms.reserve(x.support_size());
  for (const auto& [g, c] : x.terms()) terms.emplace_back(inverse(g), c);
  return AlgebraElement::from_terms(std::move(terms));
}

AlgebraElement radial_component(const FreeGroup& group, const AlgebraElement& x) {
  // <x, w_n> is the coefficient sum on length n; ||w_n||^2 = #W_n.
  std::map<std::size_t, QuadScalar> sums;
  for (const auto& [w, c] : x.terms()) sums[w.length()] += c;

  std::vector<Term> terms;
  for (const auto& [n, s] : sums) {
    if (s.is_zero()) continue;
    const QuadScalar coeff = s / QuadScalar(Rational(static_cast<unsigned long>(word_count(group, n))));
    for_each_word(group, n, std::nullopt, std::nullopt,
                  [&](const ReducedWord& w) { terms.emplace_back(w, coeff); });
  }
  return AlgebraElement::from_terms(std::move(terms));
}

std::vector<DifferenceTerm> decompose_mean_zero(const AlgebraElement& y) {
  std::vector<DifferenceTerm> out;
  const auto& terms = y.terms();
  std::size_t p = 0;
  while (p < terms.size()) {
    const std::size_t n = terms[p].first.length();
    std::size_t q = p;
    while (q < terms.size() && terms[q].first.length() == n) ++q;

    // Partial sums S_j = c_1 + ... + c_j give y_n = sum_j S_j (w_j - w_{j+1}).
    QuadScalar partial;
    for (std::size_t j = p; j < q; ++j) {
      partial += terms[j].second;
      if (j + 1 < q && !partial.is_zero()) {
        out.push_back({partial, terms[j].first, terms[j + 1].first});
      }
    }
    if (!partial.is_zero()) {
      throw std::domain_error("decompose_mean_zero: nonzero radial part on length " +
                              std::to_string(n) + " (coefficient sum " + format_scalar(partial) +
                              ")");
    }
    p = q;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> serialize(const AlgebraElement& x, int d) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(x.support_size());
  for (const auto& [w, c] : x.terms()) out.emplace_back(format_word(w), format_scalar(c, d));
  return out;
}

AlgebraElement deserialize(const FreeGroup& group,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Term> terms;
  terms.reserve(pairs.size());
  for (const auto& [w, c] : pairs) terms.emplace_back(parse_word(group, w), parse_scalar(c));
  return AlgebraElement::from_terms(std::move(terms));
}

}  // namespace radial
