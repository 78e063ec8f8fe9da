#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sfinv/groups.hpp"
#include "sfinv/words.hpp"

namespace sfinv {

/// Three-valued answer for procedures that may run out of budget.
enum class Tri { yes, no, unknown };
const char* to_string(Tri t);

/// Raw description of an X-generated finite inverse monoid, as produced by
/// an enumerator. Actions are indexed [letter code][element].
struct MonoidData {
  std::string name;
  std::vector<std::string> keys;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> letter_images;
  std::vector<std::vector<std::uint32_t>> right;
  std::vector<std::vector<std::uint32_t>> left;
  std::vector<std::uint32_t> inverse;
};

/// Explicit finite inverse monoid generated by the images of the doubled
/// alphabet. Products are read off a dense table for small monoids and
/// otherwise folded along a representative word of the right factor.
class FiniteInverseMonoid {
 public:
  using Index = std::uint32_t;
  static constexpr std::size_t dense_limit = 2048;

  /// Validates the inverse laws and idempotent commutation; throws
  /// InvalidArgument on failure or when the letters do not generate.
  FiniteInverseMonoid(MonoidData data, Alphabet alphabet);

  /// From a full multiplication table. The identity is located, inverses
  /// are searched for, and `letter_images[code]` name the generator images.
  static FiniteInverseMonoid from_table(std::string name, const std::vector<std::vector<Index>>& table,
                                        Alphabet alphabet, const std::vector<Index>& letter_images,
                                        std::vector<std::string> keys = {});

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return keys_.size(); }
  Index identity() const { return identity_; }
  const std::string& key(Index i) const { return keys_[i]; }
  std::optional<Index> index_of(const std::string& key) const;

  Index letter(std::size_t code) const { return letter_images_[code]; }
  Index letter(Letter x) const { return letter_images_[x.code()]; }
  std::size_t letter_count() const { return letter_images_.size(); }
  Index right(Index a, std::size_t code) const { return right_[code][a]; }
  Index left(std::size_t code, Index a) const { return left_[code][a]; }

  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const { return inverse_[a]; }
  bool is_idempotent(Index a) const { return idempotent_[a]; }
  std::vector<Index> idempotents() const;
  Index evaluate(const Word& w) const { return evaluate_from(identity_, w); }
  Index evaluate_from(Index start, const Word& w) const;
  /// Shortest-first (BFS) word over the doubled alphabet evaluating to a.
  const Word& word_of(Index a) const { return words_[a]; }

  /// x ≤ y iff x = x x⁻¹ y.
  bool natural_leq(Index x, Index y) const;
  bool has_dense_table() const { return !table_.empty(); }

 private:
  void validate() const;

  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, Index> by_key_;
  Index identity_ = 0;
  std::vector<Index> letter_images_;
  std::vector<std::vector<Index>> right_;
  std::vector<std::vector<Index>> left_;
  std::vector<Index> inverse_;
  std::vector<bool> idempotent_;
  std::vector<Word> words_;
  std::vector<Index> table_;
};

/// Union-find partition of a monoid's elements.
class Congruence {
 public:
  using Index = FiniteInverseMonoid::Index;

  explicit Congruence(std::size_t size);

  Index find(Index a) const;
  bool same(Index a, Index b) const { return find(a) == find(b); }
  /// Returns true when two classes were merged.
  bool unite(Index a, Index b);

  std::size_t size() const { return parent_.size(); }
  std::size_t class_count() const;
  /// Least element index of each element's class.
  std::vector<Index> canonical() const;
  bool operator==(const Congruence& other) const { return canonical() == other.canonical(); }

 private:
  mutable std::vector<Index> parent_;
};

/// Least congruence containing `pairs`: union-find plus a queue of merged
/// pairs propagated through left and right generator multiplication.
Congruence congruence_generated(const FiniteInverseMonoid& M,
                                const std::vector<std::pair<Congruence::Index, Congruence::Index>>& pairs);
FiniteInverseMonoid quotient(const FiniteInverseMonoid& M, const Congruence& c);

Congruence min_group_congruence(const FiniteInverseMonoid& M);
bool is_E_unitary(const FiniteInverseMonoid& M);
bool is_F_inverse(const FiniteInverseMonoid& M);

/// G as an X-generated inverse monoid.
FiniteInverseMonoid group_as_monoid(const FiniteGroup& G);

struct StronglyFReport {
  Tri verdict = Tri::unknown;
  /// First element of G whose simple paths disagree, when verdict is no.
  std::optional<FiniteGroup::Element> witness_point;
  std::string detail;
};

/// Definition check: for every g, the labels of all simple paths 1 ~> g
/// evaluate to one element of M. Requires M/σ ≅ G as X-generated groups
/// (checked; InvalidArgument otherwise).
StronglyFReport is_strongly_F_inverse_quotient(const FiniteInverseMonoid& M, const FiniteGroup& G,
                                               std::size_t path_budget = 1000000);

/// `key<TAB>inverse-key<TAB>idempotent?` per element.
std::string dump_text(const FiniteInverseMonoid& M);
/// 16-byte header (magic IMTB, u32 version, u64 size) then size² u32
/// products, row-major, little-endian.
std::string dump_table_blob(const FiniteInverseMonoid& M);

}  // namespace sfinv
