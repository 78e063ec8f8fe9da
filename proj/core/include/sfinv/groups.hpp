#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sfinv/words.hpp"

namespace sfinv {

/// An explicit finite X-generated group. Elements are dense indices with the
/// identity pinned at 0; each letter of the doubled alphabet acts on the
/// right by a permutation of the indices.
class FiniteGroup {
 public:
  using Element = std::uint32_t;
  static constexpr Element identity = 0;
  static constexpr std::size_t default_budget = 10000;
  static constexpr std::size_t left_table_limit = 4096;

  /// Z_n with the single generator acting as +1. Element k is a^k.
  static FiniteGroup cyclic(std::uint32_t n, Alphabet alphabet);

  /// Permutation group generated by `perms` (one per generator, all on the
  /// same finite set), numbered by breadth-first discovery from the identity.
  static FiniteGroup from_permutations(Alphabet alphabet,
                                       const std::vector<std::vector<std::uint32_t>>& perms,
                                       std::size_t budget = default_budget);

  /// Validated Cayley table. Element 0 must be the identity; `generators`
  /// lists the element each generator maps to.
  static FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                Alphabet alphabet, const std::vector<Element>& generators,
                                std::size_t budget = default_budget);

  std::size_t order() const { return order_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t generator_count() const { return alphabet_.size(); }
  std::size_t letter_count() const { return 2 * alphabet_.size(); }

  /// g·[x]
  Element act(Element g, Letter x) const { return right_[x.code()][g]; }
  Element act_code(Element g, std::size_t code) const { return right_[code][g]; }
  Element multiply(Element h, Element g) const;
  Element inverse(Element g) const { return inverse_[g]; }

  /// [w]_G
  Element evaluate(const Word& w) const { return evaluate_from(identity, w); }
  Element evaluate_from(Element start, const Word& w) const;

  /// Positive word recorded for g during discovery; evaluate(word_of(g)) = g.
  const Word& word_of(Element g) const { return words_[g]; }

  /// Free-form description used in reports (e.g. "cyclic 3 a").
  const std::string& description() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }

 private:
  FiniteGroup(Alphabet alphabet, std::vector<std::vector<Element>> positive_actions);

  Alphabet alphabet_;
  std::size_t order_ = 0;
  std::vector<std::vector<Element>> right_;  // [letter code][element]
  std::vector<Element> inverse_;
  std::vector<Word> words_;
  std::vector<Element> left_table_;  // order_*order_ when order_ <= left_table_limit
  std::string description_;
};

/// Parses `cycles` such as "(0 1 2)(3 4)" into a permutation of {0..size-1};
/// size is grown to cover every point mentioned.
std::vector<std::uint32_t> parse_cycles(const std::string& cycles, std::size_t size);

}  // namespace sfinv
