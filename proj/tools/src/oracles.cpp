#include "sfinv/cli/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "sfinv/error.hpp"

namespace sfinv::oracle {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t target_of(const FiniteGroup& G, PositiveEdge e) { return G.act(e.source, Letter{e.generator, false}); }

std::size_t vertex_count(const FiniteGroup& G, const Subgraph& d) {
  std::vector<bool> seen(G.order(), false);
  seen[0] = true;
  for (auto e : d.edges()) {
    seen[e.source] = true;
    seen[target_of(G, e)] = true;
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

template <typename Keep>
std::size_t count_pairs(const FiniteGroup& G, Keep keep) {
  Subgraph empty = Subgraph::of(G);
  if (empty.slot_count() > 24) throw BudgetExceeded("oracle enumeration limited to 24 slots");
  std::size_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << empty.slot_count()); ++mask) {
    Subgraph d = Subgraph::from_mask(G, mask);
    if (connected(G, d) && keep(d)) total += vertex_count(G, d);
  }
  return total;
}

}  // namespace

bool connected(const FiniteGroup& G, const Subgraph& d) {
  UnionFind uf(G.order());
  for (auto e : d.edges()) uf.unite(e.source, target_of(G, e));
  std::size_t root = uf.find(0);
  for (auto e : d.edges()) {
    if (uf.find(e.source) != root) return false;
  }
  return true;
}

Blocks blocks(const FiniteGroup& G) {
  // Hopcroft-Tarjan with an explicit stack. Edges are identified by slot so
  // parallel edges stay distinct; a loop is its own block.
  Subgraph shape = Subgraph::of(G);
  const std::size_t n = G.order();
  const std::size_t slots = shape.slot_count();
  struct Arc {
    std::size_t to;
    std::size_t slot;
  };
  std::vector<std::vector<Arc>> adj(n);
  Blocks out;
  out.block_of.assign(slots, 0);
  std::vector<bool> is_loop(slots, false);
  for (std::size_t s = 0; s < slots; ++s) {
    PositiveEdge e = shape.edge_at(s);
    std::size_t t = target_of(G, e);
    if (t == e.source) {
      is_loop[s] = true;
      continue;
    }
    adj[e.source].push_back({t, s});
    adj[t].push_back({e.source, s});
  }

  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<std::size_t> edge_stack;
  struct Frame {
    std::size_t v;
    std::size_t via;  // slot used to enter v, or slots for a root
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> stack{{root, slots, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        Arc a = adj[f.v][f.next++];
        if (a.slot == f.via) continue;
        if (!disc[a.to]) {
          edge_stack.push_back(a.slot);
          disc[a.to] = low[a.to] = ++timer;
          stack.push_back({a.to, a.slot, 0});
        } else if (disc[a.to] < disc[f.v]) {
          edge_stack.push_back(a.slot);
          low[f.v] = std::min(low[f.v], disc[a.to]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      std::size_t parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<std::size_t> block;
        for (;;) {
          std::size_t s = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(s);
          if (s == done.via) break;
        }
        std::sort(block.begin(), block.end());
        for (auto s : block) out.block_of[s] = out.slots.size();
        out.slots.push_back(std::move(block));
      }
    }
  }
  for (std::size_t s = 0; s < slots; ++s) {
    if (!is_loop[s]) continue;
    out.block_of[s] = out.slots.size();
    out.slots.push_back({s});
  }
  return out;
}

Subgraph closure_by_blocks(const FiniteGroup& G, const Blocks& b, const Subgraph& d) {
  Subgraph out = d;
  for (auto e : d.edges()) {
    const auto& block = b.slots[b.block_of[d.slot(e)]];
    bool bridge = block.size() == 1 && target_of(G, e) != e.source;
    if (bridge) continue;
    for (auto s : block) out.set(s);
  }
  return out;
}

bool cyclic_by_blocks(const FiniteGroup& G, const Blocks& b, const Subgraph& d) {
  return closure_by_blocks(G, b, d) == d;
}

std::size_t count_mm(const FiniteGroup& G) {
  return count_pairs(G, [](const Subgraph&) { return true; });
}

std::size_t count_s_circ(const FiniteGroup& G) {
  Blocks b = blocks(G);
  return count_pairs(G, [&](const Subgraph& d) { return cyclic_by_blocks(G, b, d); });
}

std::optional<Integer> apply_chain(const std::vector<StructuredPinj>& chain, Integer n) {
  for (const auto& alpha : chain) {
    auto next = alpha.apply(n);
    if (!next) return std::nullopt;
    n = std::move(*next);
  }
  return n;
}

}  // namespace sfinv::oracle
