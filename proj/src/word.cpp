#include "radial/word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace radial {

namespace {

constexpr int kMaxRank = 32;  // LetterSet is a 64-bit mask over 2K codes

void check_capacity(std::size_t n) {
  if (n > ReducedWord::kMaxLength) {
    throw std::length_error("word length " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(ReducedWord::kMaxLength));
  }
}

}  // namespace

FreeGroup::FreeGroup(int k) : k_(k) {
  if (k < 2 || k > kMaxRank) {
    throw std::invalid_argument("K must lie in [2, " + std::to_string(kMaxRank) + "], got " +
                                std::to_string(k));
  }
}

ReducedWord ReducedWord::from_letters(std::span<const Letter> letters) {
  check_capacity(letters.size());
  ReducedWord w;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (p > 0 && letters[p] == letters[p - 1].inverse()) {
      throw std::invalid_argument("word is not reduced: adjacent inverse pair at position " +
                                  std::to_string(p));
    }
    w.codes_[p] = letters[p].code();
  }
  w.length_ = static_cast<std::uint8_t>(letters.size());
  return w;
}

const ReducedWord& ReducedWord::identity() {
  static const ReducedWord e;
  return e;
}

std::vector<Letter> ReducedWord::letters() const {
  std::vector<Letter> out;
  out.reserve(length_);
  for (std::size_t p = 0; p < length_; ++p) out.push_back((*this)[p]);
  return out;
}

void ReducedWord::push_back_unchecked(Letter l) {
  check_capacity(length_ + 1U);
  codes_[length_++] = l.code();
}

std::size_t ReducedWord::hash() const {
  // FNV-1a over the used prefix.
  std::uint64_t h = 1469598103934665603ULL ^ length_;
  for (std::size_t p = 0; p < length_; ++p) {
    h ^= codes_[p];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

LetterSet::LetterSet(std::initializer_list<Letter> letters) {
  for (Letter l : letters) insert(l);
}

LetterSet LetterSet::all(const FreeGroup& group) {
  const int n = group.alphabet_size();
  return LetterSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

int LetterSet::size() const { return std::popcount(mask_); }

std::vector<Letter> LetterSet::members() const {
  std::vector<Letter> out;
  for (std::uint8_t c = 0; c < 64; ++c) {
    if ((mask_ >> c) & 1U) out.push_back(Letter::from_code(c));
  }
  return out;
}

LetterSet LetterSet::complement(const FreeGroup& group) const {
  return LetterSet(all(group).mask() & ~mask_);
}

Product reduce_concat(const ReducedWord& g, const ReducedWord& h) {
  std::size_t i = 0;
  const std::size_t limit = std::min(g.length(), h.length());
  while (i < limit && h[i] == g[g.length() - 1 - i].inverse()) ++i;

  Product out;
  out.cancelations = i;
  ReducedWord& w = out.word;
  for (std::size_t p = 0; p + i < g.length(); ++p) w.push_back_unchecked(g[p]);
  for (std::size_t p = i; p < h.length(); ++p) w.push_back_unchecked(h[p]);
  return out;
}

ReducedWord multiply(const ReducedWord& g, const ReducedWord& h) {
  return reduce_concat(g, h).word;
}

std::size_t cancelations(const ReducedWord& g, const ReducedWord& h) {
  std::size_t i = 0;
  const std::size_t limit = std::min(g.length(), h.length());
  while (i < limit && h[i] == g[g.length() - 1 - i].inverse()) ++i;
  return i;
}

ReducedWord inverse(const ReducedWord& g) {
  ReducedWord w;
  for (std::size_t p = g.length(); p > 0; --p) w.push_back_unchecked(g[p - 1].inverse());
  return w;
}

void for_each_word(const FreeGroup& group, std::size_t n, const std::optional<LetterSet>& first,
                   const std::optional<LetterSet>& last,
                   const std::function<void(const ReducedWord&)>& visit) {
  if (n == 0) {
    if (!first && !last) visit(ReducedWord::identity());
    return;
  }
  check_capacity(n);
  const auto alphabet = static_cast<std::uint8_t>(group.alphabet_size());

  // Iterative depth-first walk; next[p] is the next code to try at depth p.
  ReducedWord w;
  std::vector<std::uint8_t> next(n + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) {
      if (!last || last->contains(w.back())) visit(w);
      w.pop_back();
      --depth;
      continue;
    }
    std::uint8_t& c = next[depth];
    bool advanced = false;
    while (c < alphabet) {
      const Letter l = Letter::from_code(c++);
      if (depth == 0 && first && !first->contains(l)) continue;
      if (depth > 0 && l == w.back().inverse()) continue;
      w.push_back_unchecked(l);
      next[++depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return;
    w.pop_back();
    --depth;
  }
}

std::vector<ReducedWord> enumerate_words(const FreeGroup& group, std::size_t n,
                                         const std::optional<LetterSet>& first,
                                         const std::optional<LetterSet>& last) {
  std::vector<ReducedWord> out;
  for_each_word(group, n, first, last, [&](const ReducedWord& w) { out.push_back(w); });
  return out;
}

std::vector<ReducedWord> enumerate_ball(const FreeGroup& group, std::size_t max_length,
                                        bool include_identity) {
  std::vector<ReducedWord> out;
  if (include_identity) out.push_back(ReducedWord::identity());
  for (std::size_t n = 1; n <= max_length; ++n) {
    for_each_word(group, n, std::nullopt, std::nullopt,
                  [&](const ReducedWord& w) { out.push_back(w); });
  }
  return out;
}

std::uint64_t word_count(const FreeGroup& group, std::size_t n) {
  if (n == 0) return 1;
  std::uint64_t c = static_cast<std::uint64_t>(group.alphabet_size());
  for (std::size_t p = 1; p < n; ++p) c *= static_cast<std::uint64_t>(group.d());
  return c;
}

namespace {

Letter parse_letter(const FreeGroup& group, std::string_view tok) {
  if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A')) {
    throw std::invalid_argument("malformed letter token '" + std::string(tok) + "'");
  }
  int index = 0;
  const char* begin = tok.data() + 1;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, index);
  if (ec != std::errc() || ptr != end || !std::isdigit(static_cast<unsigned char>(*begin))) {
    throw std::invalid_argument("malformed letter token '" + std::string(tok) + "'");
  }
  if (index < 1 || index > group.k()) {
    throw std::invalid_argument("generator index " + std::to_string(index) + " in '" +
                                std::string(tok) + "' outside [1, " + std::to_string(group.k()) +
                                "]");
  }
  return Letter(index, tok[0] == 'a' ? 1 : -1);
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t p = 0;
  while (p < text.size()) {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    std::size_t q = p;
    while (q < text.size() && !std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    if (q > p) out.push_back(text.substr(p, q - p));
    p = q;
  }
  return out;
}

}  // namespace

ReducedWord parse_word(const FreeGroup& group, std::string_view text) {
  const auto toks = tokens(text);
  if (toks.empty()) throw std::invalid_argument("empty word text (use 'e' for the identity)");
  if (toks.size() == 1 && toks[0] == "e") return ReducedWord::identity();

  std::vector<Letter> letters;
  letters.reserve(toks.size());
  for (auto tok : toks) {
    if (tok == "e") throw std::invalid_argument("'e' must appear alone");
    letters.push_back(parse_letter(group, tok));
  }
  return ReducedWord::from_letters(letters);
}

std::string format_letter(Letter l) {
  return (l.sign() > 0 ? "a" : "A") + std::to_string(l.index());
}

std::string format_word(const ReducedWord& g) {
  if (g.empty()) return "e";
  std::string out;
  for (std::size_t p = 0; p < g.length(); ++p) {
    if (p > 0) out += ' ';
    out += format_letter(g[p]);
  }
  return out;
}

LetterSet parse_letter_set(const FreeGroup& group, std::string_view text) {
  LetterSet set;
  for (auto tok : tokens(text)) set.insert(parse_letter(group, tok));
  return set;
}

std::string format_letter_set(const LetterSet& set) {
  std::string out;
  for (Letter l : set.members()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

}  // namespace radial
