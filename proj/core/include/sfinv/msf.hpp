#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfinv/cayley.hpp"
#include "sfinv/expansion.hpp"
#include "sfinv/inverse_monoid.hpp"

namespace sfinv {

/// Elements of M_sF(G,X) in the S∘ model: (Δ,g) with Δ cyclic.
MMElement msf_evaluate_word(const CyclicClosure& closure, const Word& w);
/// (Δ ∪ gΞ, gh) without re-closing: unions of cyclic subgraphs are cyclic.
/// Debug builds re-check that the result is cyclic.
MMElement msf_multiply(const CyclicClosure& closure, const MMElement& s, const MMElement& t);
FiniteInverseMonoid enumerate_msf(const CyclicClosure& closure, std::size_t slot_cap = default_slot_cap);

struct ThetaPair {
  Word u;
  Word v;
  auto operator<=>(const ThetaPair&) const = default;
};

struct ThetaListing {
  std::vector<ThetaPair> pairs;
  bool truncated = false;
};

/// Every split (u,v) of every cyclic word read at the identity.
ThetaListing theta_pairs(const FiniteGroup& G, SearchBudget budget = {});

struct CongruenceResult {
  Congruence congruence;
  bool truncated = false;
  std::size_t generating_pairs = 0;
};

/// ξ_G on an enumerated M(G,X): generated by all pairs of coterminal
/// simple-path spans.
CongruenceResult xi_congruence(const FiniteInverseMonoid& Mexp, const FiniteGroup& G, SearchBudget budget = {});
/// θ_G♯: generated by ((Γ_u,[u]), (Γ_{v⁻¹},[v⁻¹])) for (u,v) ∈ θ_G.
CongruenceResult theta_sharp_congruence(const FiniteInverseMonoid& Mexp, const FiniteGroup& G,
                                        SearchBudget budget = {});

struct VerifyOptions {
  std::size_t slot_cap = default_slot_cap;
  SearchBudget search{};
  std::size_t closure_budget = CyclicClosure::default_budget;
};

struct Pre1Report {
  Tri verdict = Tri::unknown;
  std::size_t mm_size = 0;
  std::size_t xi_classes = 0;
  std::size_t theta_classes = 0;
  std::size_t theta_pair_count = 0;
  std::optional<std::string> first_mismatch;
  std::string detail;
};

/// ξ_G = θ_G♯ as partitions of M(G,X).
Pre1Report verify_pre1(const FiniteGroup& G, const VerifyOptions& options = {});

struct IsoReport {
  Tri verdict = Tri::unknown;
  std::size_t mm_size = 0;
  std::size_t xi_classes = 0;
  std::size_t s_circ_size = 0;
  std::string detail;
};

/// (Γ,g)ξ_G ↦ (Γ°,g) is a well-defined multiplicative bijection onto S∘.
IsoReport verify_s_circ_iso(const FiniteGroup& G, const VerifyOptions& options = {});

}  // namespace sfinv
