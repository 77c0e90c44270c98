#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace radial {

/// Rank of the free group F_K. Every computation runs against one fixed K.
class FreeGroup {
 public:
  explicit FreeGroup(int k);

  int k() const { return k_; }
  int alphabet_size() const { return 2 * k_; }
  /// 2K - 1, the branching number of the Cayley tree.
  int d() const { return 2 * k_ - 1; }

 private:
  int k_;
};

/// Signed generator a_i^{+1} or a_i^{-1}, stored as a code in canonical order
/// a1 < A1 < a2 < A2 < ...  (code = 2(i-1) + (sign < 0)).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, int sign)
      : code_(static_cast<std::uint8_t>(2 * (index - 1) + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int index() const { return code_ / 2 + 1; }
  constexpr int sign() const { return (code_ & 1) ? -1 : 1; }
  constexpr std::uint8_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t code_ = 0;
};

/// A reduced word in F_K. Fixed inline capacity keeps words allocation-free;
/// ordering is shortlex (length first, then letter codes).
class ReducedWord {
 public:
  static constexpr std::size_t kMaxLength = 31;

  ReducedWord() = default;

  /// Throws std::invalid_argument if `letters` contains an adjacent inverse pair.
  static ReducedWord from_letters(std::span<const Letter> letters);

  static const ReducedWord& identity();

  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool is_identity() const { return length_ == 0; }

  Letter operator[](std::size_t p) const { return Letter::from_code(codes_[p]); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[length_ - 1]; }

  std::vector<Letter> letters() const;

  /// Appends `l`; the caller guarantees no cancelation with back().
  void push_back_unchecked(Letter l);
  void pop_back() { codes_[--length_] = 0; }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.length_ == b.length_ && a.codes_ == b.codes_;
  }
  friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.codes_ <=> b.codes_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxLength> codes_{};
  std::uint8_t length_ = 0;
};

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const { return w.hash(); }
};

/// Subset of the 2K signed letters, as a bitmask over letter codes.
class LetterSet {
 public:
  LetterSet() = default;
  explicit LetterSet(std::uint64_t mask) : mask_(mask) {}
  LetterSet(std::initializer_list<Letter> letters);

  static LetterSet all(const FreeGroup& group);

  bool contains(Letter l) const { return (mask_ >> l.code()) & 1U; }
  void insert(Letter l) { mask_ |= std::uint64_t{1} << l.code(); }
  void erase(Letter l) { mask_ &= ~(std::uint64_t{1} << l.code()); }
  bool empty() const { return mask_ == 0; }
  int size() const;
  std::uint64_t mask() const { return mask_; }
  std::vector<Letter> members() const;

  LetterSet complement(const FreeGroup& group) const;

  friend bool operator==(const LetterSet&, const LetterSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct Product {
  ReducedWord word;
  std::size_t cancelations = 0;
};

/// Reduced form of g*h together with the number i of cancelations,
/// |gh| = |g| + |h| - 2i.
Product reduce_concat(const ReducedWord& g, const ReducedWord& h);

/// Shorthand for reduce_concat(g, h).word.
ReducedWord multiply(const ReducedWord& g, const ReducedWord& h);

std::size_t cancelations(const ReducedWord& g, const ReducedWord& h);

ReducedWord inverse(const ReducedWord& g);

/// Every reduced word of length n beginning in `first` and ending in `last`
/// (absent = unconstrained), in lexicographic order of letter codes.
/// The visitor is called once per word.
void for_each_word(const FreeGroup& group, std::size_t n,
                   const std::optional<LetterSet>& first,
                   const std::optional<LetterSet>& last,
                   const std::function<void(const ReducedWord&)>& visit);

std::vector<ReducedWord> enumerate_words(const FreeGroup& group, std::size_t n,
                                         const std::optional<LetterSet>& first = std::nullopt,
                                         const std::optional<LetterSet>& last = std::nullopt);

/// All reduced words with 1 <= |w| <= max_length, shortlex order.
std::vector<ReducedWord> enumerate_ball(const FreeGroup& group, std::size_t max_length,
                                        bool include_identity = false);

/// Number of reduced words of length n: 2K(2K-1)^{n-1}, and 1 for n = 0.
std::uint64_t word_count(const FreeGroup& group, std::size_t n);

/// Parses whitespace-separated `a<i>` / `A<i>` tokens, or the lone token `e`.
/// Throws std::invalid_argument on malformed tokens, indices outside [1, K],
/// or unreduced input.
ReducedWord parse_word(const FreeGroup& group, std::string_view text);

std::string format_word(const ReducedWord& g);
std::string format_letter(Letter l);

/// Parses `a1 A2 ...` into a set of letters (order and duplicates ignored).
LetterSet parse_letter_set(const FreeGroup& group, std::string_view text);
std::string format_letter_set(const LetterSet& set);

}  // namespace radial
