#include "sfinv/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sfinv/error.hpp"

namespace sfinv {

Alphabet::Alphabet(std::string names) : names_(std::move(names)) {
  std::set<char> seen;
  for (char c : names_) {
    if (c < 'a' || c > 'z') {
      throw InvalidArgument(std::string("generator names must be lowercase ASCII letters, got '") +
                            c + "'");
    }
    if (!seen.insert(c).second) {
      throw InvalidArgument(std::string("duplicate generator name '") + c + "'");
    }
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::set<char> letters;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      letters.insert(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return Alphabet(std::string(letters.begin(), letters.end()));
}

std::optional<std::size_t> Alphabet::index_of(char lowercase) const {
  auto pos = names_.find(lowercase);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

Word Word::prefix(std::size_t length) const {
  length = std::min(length, size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length)));
}

Word Word::suffix(std::size_t from) const {
  from = std::min(from, size());
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end()));
}

Word Word::subword(std::size_t from, std::size_t length) const {
  from = std::min(from, size());
  length = std::min(length, size() - from);
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(from);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(length)));
}

Word Word::power(std::size_t exponent) const {
  std::vector<Letter> out;
  out.reserve(size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  bool saw_one = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') {
      saw_one = true;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in word");
    }
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto index = alphabet.index_of(lower);
    if (!index) throw ParseError(std::string("unknown generator '") + lower + "'");
    letters.push_back({static_cast<std::uint32_t>(*index), inverse});
  }
  if (saw_one && !letters.empty()) {
    throw ParseError("'1' denotes the empty word and cannot be mixed with letters");
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    const char c = alphabet.name(x.generator);
    out.push_back(x.inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
  }
  return out;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& x : w) {
    if (!stack.empty() && stack.back() == x.inverted()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverted()) return false;
  }
  return true;
}

bool is_dyck(const Word& w) { return reduce(w).empty(); }

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverted();
}

std::vector<Word> cyclic_conjugates(const Word& w) {
  if (w.empty()) return {w};
  std::vector<Word> out;
  std::set<Word> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word rotation = w.suffix(i) * w.prefix(i);
    if (seen.insert(rotation).second) out.push_back(std::move(rotation));
  }
  return out;
}

std::vector<std::pair<Word, Word>> splits(const Word& w) {
  if (w.size() < 2) throw InvalidArgument("no nonempty split");
  std::vector<std::pair<Word, Word>> out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 1; i < w.size(); ++i) out.emplace_back(w.prefix(i), w.suffix(i));
  return out;
}

}  // namespace sfinv
