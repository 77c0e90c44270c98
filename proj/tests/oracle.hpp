#pragma once

// Naive reference implementations for tests. Deliberately share nothing with
// the library beyond the Letter code convention: words are plain int vectors
// of codes, reduced by a stack, enumerated by filtering every sequence.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "radial/word.hpp"

namespace oracle {

using Seq = std::vector<int>;

inline int inv(int c) { return c ^ 1; }

inline Seq reduce(const Seq& w) {
  Seq out;
  for (int c : w) {
    if (!out.empty() && out.back() == inv(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline bool is_reduced(const Seq& w) { return reduce(w) == w; }

/// All reduced sequences of length n, by filtering all (2K)^n sequences.
inline std::vector<Seq> all_reduced(int K, int n) {
  std::vector<Seq> out;
  Seq cur(n, 0);
  const int a = 2 * K;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= a;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (int p = n - 1; p >= 0; --p) {
      cur[p] = static_cast<int>(v % a);
      v /= a;
    }
    if (is_reduced(cur)) out.push_back(cur);
  }
  return out;
}

inline Seq to_seq(const radial::ReducedWord& w) {
  Seq s;
  for (std::size_t p = 0; p < w.length(); ++p) s.push_back(w[p].code());
  return s;
}

inline radial::ReducedWord to_word(const Seq& s) {
  std::vector<radial::Letter> letters;
  for (int c : s) letters.push_back(radial::Letter::from_code(static_cast<std::uint8_t>(c)));
  return radial::ReducedWord::from_letters(letters);
}

inline Seq concat(Seq a, const Seq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline radial::ReducedWord random_word(std::mt19937& rng, int K, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2 * K - 1);
  Seq s;
  const int n = len(rng);
  while (static_cast<int>(s.size()) < n) {
    const int c = letter(rng);
    if (!s.empty() && s.back() == inv(c)) continue;
    s.push_back(c);
  }
  return to_word(s);
}

}  // namespace oracle
