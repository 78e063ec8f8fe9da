#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfinv/groups.hpp"
#include "sfinv/words.hpp"

namespace sfinv {

using Element = FiniteGroup::Element;

/// Edge source -> source·[x] labelled by the positive generator x. The
/// inverse edge is implicit.
struct PositiveEdge {
  Element source = 0;
  std::uint32_t generator = 0;
  auto operator<=>(const PositiveEdge&) const = default;
};

/// Finite subgraph of Cay(G,X) given by its positive edges. Slot
/// `source * generators + x` holds edge (source, x). The base vertex is
/// always the identity.
class Subgraph {
 public:
  Subgraph() = default;
  Subgraph(std::size_t vertices, std::size_t generators);
  static Subgraph of(const FiniteGroup& G) { return Subgraph(G.order(), G.generator_count()); }
  /// Bits of `mask` are slots (only valid when the slot count is <= 64).
  static Subgraph from_mask(const FiniteGroup& G, std::uint64_t mask);

  std::size_t slot_count() const { return vertices_ * generators_; }
  std::size_t slot(PositiveEdge e) const { return std::size_t{e.source} * generators_ + e.generator; }
  PositiveEdge edge_at(std::size_t slot) const {
    return {static_cast<Element>(slot / generators_), static_cast<std::uint32_t>(slot % generators_)};
  }

  bool contains(PositiveEdge e) const { return test(slot(e)); }
  bool test(std::size_t slot) const { return (bits_[slot / 64] >> (slot % 64)) & 1U; }
  void insert(PositiveEdge e) { set(slot(e)); }
  void set(std::size_t slot) { bits_[slot / 64] |= std::uint64_t{1} << (slot % 64); }
  void erase(PositiveEdge e);

  bool empty() const;
  std::size_t edge_count() const;
  std::vector<PositiveEdge> edges() const;
  std::uint64_t mask() const;

  Subgraph& operator|=(const Subgraph& other);
  friend Subgraph operator|(Subgraph a, const Subgraph& b) { return a |= b; }
  bool is_subset_of(const Subgraph& other) const;

  bool operator==(const Subgraph&) const = default;
  /// Orders by edge bitset, slot 0 least significant. Deterministic only.
  bool operator<(const Subgraph& other) const;

  std::size_t hash() const;

 private:
  std::size_t vertices_ = 0;
  std::size_t generators_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SubgraphHash {
  std::size_t operator()(const Subgraph& s) const { return s.hash(); }
};

/// {identity} ∪ endpoints of all edges, sorted.
std::vector<Element> vertices(const FiniteGroup& G, const Subgraph& d);
bool is_connected(const FiniteGroup& G, const Subgraph& d);
/// Canonical text: `{0a,1b}` with edges in slot order.
std::string edge_key(const FiniteGroup& G, const Subgraph& d);

/// Γ_w: edges on the path from the identity labelled w.
Subgraph span_of_word(const FiniteGroup& G, const Word& w);
Subgraph span_of_word_from(const FiniteGroup& G, Element start, const Word& w);
/// gΔ
Subgraph translate(const FiniteGroup& G, Element g, const Subgraph& d);

/// Edge crossed when reading letter x at vertex g.
PositiveEdge edge_for_step(const FiniteGroup& G, Element g, Letter x);

struct SearchBudget {
  std::size_t max_results = 100000;
  std::size_t max_extensions = 1000000;
};

struct PathListing {
  std::vector<std::pair<Word, Subgraph>> paths;
  bool truncated = false;
};

struct CycleListing {
  std::vector<Word> words;
  bool truncated = false;
};

/// Label words of all simple paths identity ~> g, lexicographically sorted.
PathListing simple_paths(const FiniteGroup& G, Element g, SearchBudget budget = {});
/// Cyclically reduced labels of simple cycles based at the identity.
CycleListing simple_cycles_at_identity(const FiniteGroup& G, SearchBudget budget = {});

bool is_cyclic_word(const FiniteGroup& G, const Word& w);
/// Every relator is a cyclic word of (G,X).
bool check_dagger(const FiniteGroup& G, const std::vector<Word>& relators);

/// The cyclic closure operator Δ ↦ Δ° on one group. Simple cycles through
/// each edge at the identity are enumerated once; closures of other edges
/// are obtained by translation.
class CyclicClosure {
 public:
  static constexpr std::size_t default_budget = 1000000;

  /// Throws BudgetExceeded when cycle enumeration needs more than `budget`
  /// extensions: closures must be exact.
  explicit CyclicClosure(const FiniteGroup& G, std::size_t budget = default_budget);

  const FiniteGroup& group() const { return *group_; }
  /// Union of all simple cycles through edge e (e itself included).
  const Subgraph& edge_closure(PositiveEdge e) const { return per_edge_[empty_.slot(e)]; }
  Subgraph close(const Subgraph& d) const;
  bool is_cyclic(const Subgraph& d) const;

 private:
  const FiniteGroup* group_;
  Subgraph empty_;
  std::vector<Subgraph> per_edge_;
};

/// One-off convenience wrappers around CyclicClosure.
Subgraph cyclic_closure(const FiniteGroup& G, const Subgraph& d);
bool is_cyclic_subgraph(const FiniteGroup& G, const Subgraph& d);

/// DOT text for Cay(G,X) with the edges of `highlight` drawn bold. With
/// `only_highlight`, just the subgraph (and the identity) is drawn.
std::string cayley_dot(const FiniteGroup& G, const Subgraph* highlight, bool only_highlight);

}  // namespace sfinv
