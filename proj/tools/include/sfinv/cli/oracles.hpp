#pragma once

// Brute-force reference computations. They share nothing with the library
// algorithms they check beyond the group tables themselves.

#include <cstddef>
#include <optional>
#include <vector>

#include "sfinv/cayley.hpp"
#include "sfinv/groups.hpp"
#include "sfinv/pinj.hpp"

namespace sfinv::oracle {

/// Union-find connectivity of the edge set together with the identity.
bool connected(const FiniteGroup& G, const Subgraph& d);

/// Biconnected blocks of the undirected Cayley multigraph (loops and
/// parallel edges kept). block_of[slot] numbers the block of each positive edge.
struct Blocks {
  std::vector<std::size_t> block_of;
  std::vector<std::vector<std::size_t>> slots;  // per block
};
Blocks blocks(const FiniteGroup& G);

/// Two edges lie on a common simple cycle iff they share a block, and an
/// edge lies on none iff it is a bridge. So the closure of Δ is Δ plus the
/// blocks of its non-bridge edges.
Subgraph closure_by_blocks(const FiniteGroup& G, const Blocks& b, const Subgraph& d);
bool cyclic_by_blocks(const FiniteGroup& G, const Blocks& b, const Subgraph& d);

/// Σ |V(Γ)| over connected Γ ∋ 1: the size of M(G,X). Only for ≤ 24 slots.
std::size_t count_mm(const FiniteGroup& G);
/// The same sum restricted to cyclic Γ: the size of S∘.
std::size_t count_s_circ(const FiniteGroup& G);

/// Applies a chain of maps one point at a time.
std::optional<Integer> apply_chain(const std::vector<StructuredPinj>& chain, Integer n);

}  // namespace sfinv::oracle
