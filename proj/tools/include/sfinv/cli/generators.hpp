#pragma once

// Seeded random instances for property checks. Everything draws from one
// std::mt19937_64 so a run is reproducible from its seed.

#include <cstddef>
#include <random>
#include <vector>

#include "sfinv/cayley.hpp"
#include "sfinv/pinj.hpp"
#include "sfinv/stephen.hpp"
#include "sfinv/words.hpp"

namespace sfinv::gen {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
Word random_word(Rng& rng, std::size_t generators, std::size_t length);
/// Cyclically reduced, length in [lo, hi].
Word random_cyclically_reduced(Rng& rng, std::size_t generators, std::size_t lo, std::size_t hi);
/// Each slot kept with a probability drawn once per call.
Subgraph random_subgraph(Rng& rng, const FiniteGroup& G);
/// Span of a random walk from the identity: connected by construction.
Subgraph random_connected_subgraph(Rng& rng, const FiniteGroup& G, std::size_t steps);

/// A valid structured partial injection: residue classes mod m sent affinely
/// onto distinct classes mod m', a random start, and a few exceptional points
/// below the start sent into an unused target class.
StructuredPinj random_pinj(Rng& rng);

/// Paths, a closing path and random identifications over `letters` codes.
RawGraph random_raw_graph(Rng& rng, std::size_t letters);
/// Same graph presented differently: vertices renamed, edges reversed and
/// reordered, identifications swapped and reordered.
RawGraph shuffled(Rng& rng, const RawGraph& raw);

}  // namespace sfinv::gen
