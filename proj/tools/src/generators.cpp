#include "sfinv/cli/generators.hpp"

#include <algorithm>
#include <numeric>

namespace sfinv::gen {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word random_word(Rng& rng, std::size_t generators, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(Letter{static_cast<std::uint32_t>(uniform(rng, 0, generators - 1)), uniform(rng, 0, 1) == 1});
  }
  return w;
}

Word random_cyclically_reduced(Rng& rng, std::size_t generators, std::size_t lo, std::size_t hi) {
  for (;;) {
    Word w = reduce(random_word(rng, generators, uniform(rng, lo, hi)));
    if (w.size() >= lo && is_cyclically_reduced(w)) return w;
  }
}

Subgraph random_subgraph(Rng& rng, const FiniteGroup& G) {
  Subgraph d = Subgraph::of(G);
  std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.05, 0.6)(rng));
  for (std::size_t s = 0; s < d.slot_count(); ++s) {
    if (keep(rng)) d.set(s);
  }
  return d;
}

Subgraph random_connected_subgraph(Rng& rng, const FiniteGroup& G, std::size_t steps) {
  return span_of_word(G, random_word(rng, G.generator_count(), steps));
}

StructuredPinj random_pinj(Rng& rng) {
  static const int moduli[] = {1, 2, 3, 4, 6};
  const int m = moduli[uniform(rng, 0, 4)];
  const int target = moduli[uniform(rng, 0, 4)];
  std::vector<int> targets(static_cast<std::size_t>(target));
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);

  std::vector<Branch> branches;
  std::vector<std::pair<Integer, Integer>> exceptions;
  std::size_t used = 0;
  const Integer k0 = static_cast<long>(uniform(rng, 0, 3));
  const Integer shift = static_cast<long>(uniform(rng, 0, 2));
  for (int r = 0; r < m && used < targets.size(); ++r) {
    if (uniform(rng, 0, 3) == 0) continue;
    const int t = targets[used++];
    // n = m·k + r  ↦  target·(k + shift) + t
    AffineRule rule = AffineRule::make(target, Integer(m) * t + Integer(target) * m * shift - Integer(target) * r, m);
    branches.push_back({ArithProgression::make(r, m, Integer(m) * k0 + r), rule});
  }
  if (used < targets.size() && k0 > 0) {
    const int spare = targets[used];
    Integer next = spare;
    for (int r = 0; r < m; ++r) {
      if (uniform(rng, 0, 2) != 0) continue;
      exceptions.emplace_back(Integer(r), next);
      next += target;
    }
  }
  return StructuredPinj::make(std::move(branches), std::move(exceptions));
}

RawGraph random_raw_graph(Rng& rng, std::size_t letters) {
  const std::size_t generators = letters / 2;
  RawGraph raw;
  raw.letters = letters;
  raw.base = raw.add_vertex();
  std::uint32_t end = raw.add_path(raw.base, random_word(rng, generators, uniform(rng, 2, 8)));
  raw.tip = end;
  for (std::size_t k = uniform(rng, 1, 4); k > 0; --k) {
    auto from = static_cast<std::uint32_t>(uniform(rng, 0, raw.vertices - 1));
    if (uniform(rng, 0, 1)) {
      auto to = static_cast<std::uint32_t>(uniform(rng, 0, raw.vertices - 1));
      raw.add_path(from, random_word(rng, generators, uniform(rng, 1, 6)), to);
    } else {
      raw.add_path(from, random_word(rng, generators, uniform(rng, 1, 6)));
    }
  }
  for (std::size_t k = uniform(rng, 0, 2); k > 0; --k) {
    raw.identify.emplace_back(static_cast<std::uint32_t>(uniform(rng, 0, raw.vertices - 1)),
                              static_cast<std::uint32_t>(uniform(rng, 0, raw.vertices - 1)));
  }
  return raw;
}

RawGraph shuffled(Rng& rng, const RawGraph& raw) {
  std::vector<std::uint32_t> rename(raw.vertices);
  std::iota(rename.begin(), rename.end(), 0);
  std::shuffle(rename.begin(), rename.end(), rng);
  RawGraph out;
  out.letters = raw.letters;
  out.vertices = raw.vertices;
  out.base = rename[raw.base];
  out.tip = rename[raw.tip];
  for (auto e : raw.edges) {
    if (uniform(rng, 0, 1)) {
      out.edges.push_back({rename[e.from], e.code, rename[e.to]});
    } else {
      out.edges.push_back({rename[e.to], e.code ^ 1U, rename[e.from]});
    }
  }
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  for (auto [a, b] : raw.identify) {
    if (uniform(rng, 0, 1)) std::swap(a, b);
    out.identify.emplace_back(rename[a], rename[b]);
  }
  std::shuffle(out.identify.begin(), out.identify.end(), rng);
  return out;
}

}  // namespace sfinv::gen
