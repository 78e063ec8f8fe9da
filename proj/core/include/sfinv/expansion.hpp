#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sfinv/cayley.hpp"
#include "sfinv/groups.hpp"
#include "sfinv/inverse_monoid.hpp"

namespace sfinv {

/// Element (Γ, g) of the Margolis–Meakin expansion M(G,X).
struct MMElement {
  Subgraph graph;
  Element point = 0;
  bool operator==(const MMElement&) const = default;
};

MMElement mm_identity(const FiniteGroup& G);
MMElement mm_generator(const FiniteGroup& G, Letter x);
/// (Δ,g)(Ξ,h) = (Δ ∪ gΞ, gh)
MMElement mm_multiply(const FiniteGroup& G, const MMElement& s, const MMElement& t);
/// (Δ,g)⁻¹ = (g⁻¹Δ, g⁻¹)
MMElement mm_inverse(const FiniteGroup& G, const MMElement& s);
MMElement mm_evaluate_word(const FiniteGroup& G, const Word& w);
/// (Δ,g) ≤ (Ξ,h) iff Ξ ⊆ Δ and g = h.
bool mm_natural_leq(const MMElement& s, const MMElement& t);
/// Connected, contains 1 and the point.
bool is_valid_mm(const FiniteGroup& G, const MMElement& s);
/// `{0a,1a}@2`
std::string mm_key(const FiniteGroup& G, const MMElement& s);

constexpr std::size_t default_slot_cap = 24;

/// Every (Γ,g) as an explicit monoid, ordered by edge mask then point, so
/// the identity (∅,1) has index 0. Throws BudgetExceeded ("expansion too
/// large") when |G|·|X| exceeds `slot_cap`.
FiniteInverseMonoid enumerate_mm(const FiniteGroup& G, std::size_t slot_cap = default_slot_cap);

/// Decodes an element of an enumerate_mm / enumerate_msf table.
MMElement mm_element_of(const FiniteGroup& G, const FiniteInverseMonoid& M, FiniteInverseMonoid::Index i);

struct MaximaListing {
  std::vector<MMElement> elements;
  bool truncated = false;
};

/// (Γ_p, g) for the simple paths p from 1 to g.
MaximaListing maximal_sigma_elements(const FiniteGroup& G, Element g, SearchBudget budget = {});

namespace detail {

/// Shared driver for enumerate_mm / enumerate_msf: walks all edge masks in
/// ascending order and keeps the connected ones accepted by `keep`.
FiniteInverseMonoid enumerate_pairs(
    const FiniteGroup& G, std::size_t slot_cap, std::string name,
    const std::function<bool(const Subgraph&)>& keep,
    const std::function<MMElement(const MMElement&, const MMElement&)>& multiply,
    const std::vector<MMElement>& letters);

}  // namespace detail

}  // namespace sfinv
