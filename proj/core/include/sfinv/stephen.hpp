#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfinv/error.hpp"
#include "sfinv/inverse_monoid.hpp"
#include "sfinv/words.hpp"

namespace sfinv {

/// Special presentation Inv⟨X | r = 1 (r ∈ relators)⟩.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  /// Rejects empty relators and letters outside the alphabet.
  Presentation(Alphabet alphabet, std::vector<Word> relators);
  std::size_t letter_count() const { return 2 * alphabet.size(); }
};

/// Edge list before folding. Each edge (u, code, v) also stands for its
/// inverse (v, code^1, u); `identify` lists vertex pairs to be merged.
struct RawGraph {
  std::size_t letters = 0;
  std::size_t vertices = 0;
  std::uint32_t base = 0;
  std::uint32_t tip = 0;
  struct Edge {
    std::uint32_t from;
    std::uint32_t code;
    std::uint32_t to;
  };
  std::vector<Edge> edges;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> identify;

  std::uint32_t add_vertex() { return static_cast<std::uint32_t>(vertices++); }
  /// Path labelled w from `from`; ends at `to` when given, else at a fresh
  /// vertex. Returns the end vertex.
  std::uint32_t add_path(std::uint32_t from, const Word& w, std::optional<std::uint32_t> to = std::nullopt);
};

/// Deterministic, inverse-closed, rooted word graph. Vertices are numbered
/// canonically (breadth-first from the base, letters in code order), so two
/// folded graphs are isomorphic exactly when they compare equal.
class WordGraph {
 public:
  static constexpr std::uint32_t absent = UINT32_MAX;

  WordGraph() = default;
  WordGraph(std::size_t letters, std::size_t vertices);

  std::size_t letter_count() const { return letters_; }
  std::size_t vertex_count() const { return letters_ == 0 ? 1 : targets_.size() / letters_; }
  std::size_t edge_count() const;  // positive edges
  std::uint32_t target(std::uint32_t v, std::size_t code) const { return targets_[v * letters_ + code]; }
  void set_target(std::uint32_t v, std::size_t code, std::uint32_t t) { targets_[v * letters_ + code] = t; }

  std::uint32_t base = 0;
  std::uint32_t tip = 0;
  std::size_t stage = 0;
  /// No relator expansion changes the graph: it is the exact Schützenberger graph.
  bool fixpoint = false;

  RawGraph to_raw() const;
  bool operator==(const WordGraph& other) const {
    return letters_ == other.letters_ && targets_ == other.targets_ && base == other.base && tip == other.tip;
  }

 private:
  std::size_t letters_ = 0;
  std::vector<std::uint32_t> targets_;
};

/// Vertex budget exceeded; carries the last graph that fit.
class GraphBudgetExceeded : public BudgetExceeded {
 public:
  GraphBudgetExceeded(const std::string& what, WordGraph partial)
      : BudgetExceeded(what), partial_(std::move(partial)) {}
  const WordGraph& partial() const { return partial_; }

 private:
  WordGraph partial_;
};

/// Least deterministic quotient, by union-find with a merge queue.
WordGraph fold(const RawGraph& raw);
WordGraph linear_graph(const Word& w, std::size_t letters);
std::optional<std::uint32_t> reads(const WordGraph& g, std::uint32_t from, const Word& w);

/// One round: every relator not readable as a closed path at a vertex of
/// the round-start snapshot is attached there, then the graph is folded.
/// When nothing needed attaching the result is the input with `fixpoint` set.
WordGraph expand_round(const WordGraph& g, const Presentation& P, std::size_t vertex_budget);

constexpr std::size_t default_rounds = 8;
constexpr std::size_t default_vertex_budget = 100000;

WordGraph approximant(const Presentation& P, const Word& w, std::size_t rounds,
                      std::size_t vertex_budget = default_vertex_budget);

/// Lazily computed approximants of one word; stage k is reused by every
/// query against the same base word.
class ApproximantSequence {
 public:
  ApproximantSequence(const Presentation& P, Word w, std::size_t vertex_budget = default_vertex_budget);

  /// nullptr when the vertex budget ran out at or before stage k. After a
  /// fixpoint the last graph is returned for every later stage.
  const WordGraph* at(std::size_t k);
  const Presentation& presentation() const { return P_; }
  const Word& word() const { return w_; }

 private:
  Presentation P_;
  Word w_;
  std::size_t vertex_budget_;
  std::deque<WordGraph> stages_;  // stable addresses across growth
  bool exhausted_ = false;
};

/// Three-valued certificate. `yes` is sound at any stage; `no` is only
/// issued once a fixpoint makes the approximant exact.
struct Certificate {
  Tri verdict = Tri::unknown;
  std::size_t stage = 0;
  std::size_t vertices = 0;
  bool fixpoint = false;
  bool budget_exhausted = false;
  bool certified() const { return verdict == Tri::yes; }
};

struct StephenBudget {
  std::size_t rounds = default_rounds;
  std::size_t vertex_budget = default_vertex_budget;
};

/// u u⁻¹ = 1: u reads from the base of the approximant of 1.
Certificate certify_right_invertible(const Presentation& P, const Word& u, StephenBudget budget = {});
Certificate certify_right_invertible(ApproximantSequence& of_one, const Word& u, std::size_t rounds);
/// Both u and u⁻¹ right invertible.
Certificate certify_invertible(const Presentation& P, const Word& u, StephenBudget budget = {});
Certificate certify_invertible(ApproximantSequence& of_one, const Word& u, std::size_t rounds);
/// [lower] ≤ [upper]: upper reads base -> tip in the approximant of lower.
Certificate certify_leq(const Presentation& P, const Word& upper, const Word& lower, StephenBudget budget = {});
Certificate certify_leq(ApproximantSequence& of_lower, const Word& upper, std::size_t rounds);
Certificate certify_equal(const Presentation& P, const Word& u, const Word& v, StephenBudget budget = {});

/// Label-preserving morphism from `from` to `to` sending base to base and
/// tip to tip.
bool has_morphism(const WordGraph& from, const WordGraph& to);

std::string word_graph_dot(const WordGraph& g, const Alphabet& alphabet);

}  // namespace sfinv
