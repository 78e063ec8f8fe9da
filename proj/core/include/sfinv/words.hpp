#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfinv {

/// Ordered set of generator names. Names are single lowercase ASCII letters
/// so that the compact word syntax (uppercase = inverse) is unambiguous.
class Alphabet {
 public:
  Alphabet() = default;

  /// Throws InvalidArgument on duplicates or non-lowercase names.
  explicit Alphabet(std::string names);

  /// Distinct letters of `text` (case-folded), in sorted order. Characters
  /// other than letters are ignored.
  static Alphabet infer(std::string_view text);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  char name(std::size_t generator) const { return names_.at(generator); }
  const std::string& names() const { return names_; }
  std::optional<std::size_t> index_of(char lowercase) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string names_;
};

/// A letter of the doubled alphabet: a generator or its formal inverse.
/// Ordering is by generator, with x before x^-1.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }

  /// Dense code 2*generator + inverse, used to index per-letter tables.
  std::size_t code() const { return 2 * std::size_t{generator} + (inverse ? 1 : 0); }
  static Letter from_code(std::size_t code) {
    return {static_cast<std::uint32_t>(code / 2), (code % 2) != 0};
  }

  auto operator<=>(const Letter&) const = default;
};

/// A finite word over the doubled alphabet. The empty word is the identity.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t from) const;
  Word subword(std::size_t from, std::size_t length) const;
  Word power(std::size_t exponent) const;

  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }

  friend Word operator*(const Word& u, const Word& v);

  /// Lexicographic on letters.
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Compact syntax: lowercase letter = generator, uppercase = its inverse,
/// `1` = empty word, whitespace ignored.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Reverse the letters and flip every sign.
Word invert(const Word& w);
/// Free reduction by a single left-to-right stack pass.
Word reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_dyck(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Rotations of w starting from w itself, duplicates removed.
std::vector<Word> cyclic_conjugates(const Word& w);

/// All factorizations w = uv with u, v non-empty, by prefix length.
/// Throws InvalidArgument when |w| < 2.
std::vector<std::pair<Word, Word>> splits(const Word& w);

}  // namespace sfinv
