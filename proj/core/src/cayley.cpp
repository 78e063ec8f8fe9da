#include "sfinv/cayley.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>

#include "sfinv/error.hpp"

namespace sfinv {

Subgraph::Subgraph(std::size_t vertices, std::size_t generators)
    : vertices_(vertices), generators_(generators), bits_((vertices * generators + 63) / 64, 0) {}

Subgraph Subgraph::from_mask(const FiniteGroup& G, std::uint64_t mask) {
  Subgraph s = of(G);
  if (s.slot_count() > 64) throw InvalidArgument("subgraph has more than 64 edge slots");
  if (!s.bits_.empty()) s.bits_[0] = mask;
  return s;
}

void Subgraph::erase(PositiveEdge e) {
  auto k = slot(e);
  bits_[k / 64] &= ~(std::uint64_t{1} << (k % 64));
}

bool Subgraph::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Subgraph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<PositiveEdge> Subgraph::edges() const {
  std::vector<PositiveEdge> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      auto bit = static_cast<std::size_t>(std::countr_zero(word));
      out.push_back(edge_at(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t Subgraph::mask() const {
  if (slot_count() > 64) throw InvalidArgument("subgraph has more than 64 edge slots");
  return bits_.empty() ? 0 : bits_[0];
}

Subgraph& Subgraph::operator|=(const Subgraph& other) {
  if (bits_.size() != other.bits_.size()) throw InvalidArgument("subgraphs of different groups");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

bool Subgraph::is_subset_of(const Subgraph& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  }
  return true;
}

bool Subgraph::operator<(const Subgraph& other) const {
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (bits_[i] != other.bits_[i]) return bits_[i] < other.bits_[i];
  }
  return false;
}

std::size_t Subgraph::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : bits_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
  return h;
}

std::vector<Element> vertices(const FiniteGroup& G, const Subgraph& d) {
  std::vector<bool> in(G.order(), false);
  in[FiniteGroup::identity] = true;
  for (auto e : d.edges()) {
    in[e.source] = true;
    in[G.act(e.source, Letter{e.generator, false})] = true;
  }
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g) {
    if (in[g]) out.push_back(g);
  }
  return out;
}

bool is_connected(const FiniteGroup& G, const Subgraph& d) {
  std::vector<std::vector<Element>> adjacent(G.order());
  for (auto e : d.edges()) {
    Element t = G.act(e.source, Letter{e.generator, false});
    adjacent[e.source].push_back(t);
    adjacent[t].push_back(e.source);
  }
  std::vector<bool> seen(G.order(), false);
  std::deque<Element> queue{FiniteGroup::identity};
  seen[FiniteGroup::identity] = true;
  while (!queue.empty()) {
    Element v = queue.front();
    queue.pop_front();
    for (Element t : adjacent[v]) {
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  for (Element v : vertices(G, d)) {
    if (!seen[v]) return false;
  }
  return true;
}

std::string edge_key(const FiniteGroup& G, const Subgraph& d) {
  std::string out = "{";
  bool first = true;
  for (auto e : d.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.source);
    out += G.alphabet().name(e.generator);
  }
  out += '}';
  return out;
}

PositiveEdge edge_for_step(const FiniteGroup& G, Element g, Letter x) {
  if (!x.inverse) return {g, x.generator};
  return {G.act(g, x), x.generator};
}

Subgraph span_of_word_from(const FiniteGroup& G, Element start, const Word& w) {
  Subgraph s = Subgraph::of(G);
  Element g = start;
  for (const Letter& x : w) {
    if (x.generator >= G.generator_count()) throw InvalidArgument("unknown generator");
    s.insert(edge_for_step(G, g, x));
    g = G.act(g, x);
  }
  return s;
}

Subgraph span_of_word(const FiniteGroup& G, const Word& w) {
  return span_of_word_from(G, FiniteGroup::identity, w);
}

Subgraph translate(const FiniteGroup& G, Element g, const Subgraph& d) {
  Subgraph out = Subgraph::of(G);
  for (auto e : d.edges()) out.insert({G.multiply(g, e.source), e.generator});
  return out;
}

namespace {

struct BudgetHit {};

/// Depth-first search over simple paths from the identity. `visit` is called
/// for every closing step back to the identity (cycle mode) or every arrival
/// at `target` (path mode).
class SimpleSearch {
 public:
  SimpleSearch(const FiniteGroup& G, std::size_t max_extensions)
      : G_(G), visited_(G.order(), false), max_extensions_(max_extensions) {}

  void paths_to(Element target, const std::function<void(const Word&)>& visit) {
    visited_.assign(G_.order(), false);
    visited_[FiniteGroup::identity] = true;
    Word path;
    if (target == FiniteGroup::identity) {
      visit(path);
      return;
    }
    paths(FiniteGroup::identity, target, path, visit);
  }

  /// Closed simple paths at the identity whose first letter is in
  /// `first_letters` (letter codes).
  void cycles(const std::vector<std::size_t>& first_letters, const std::function<void(const Word&)>& visit) {
    visited_.assign(G_.order(), false);
    visited_[FiniteGroup::identity] = true;
    for (std::size_t code : first_letters) {
      Letter x = Letter::from_code(code);
      tick();
      Element next = G_.act(FiniteGroup::identity, x);
      Word path{x};
      if (next == FiniteGroup::identity) {
        visit(path);  // loop edge
        continue;
      }
      visited_[next] = true;
      cycles_from(next, path, visit);
      visited_[next] = false;
    }
  }

 private:
  void tick() {
    if (++extensions_ > max_extensions_) throw BudgetHit{};
  }

  void paths(Element v, Element target, Word& path, const std::function<void(const Word&)>& visit) {
    for (std::size_t code = 0; code < G_.letter_count(); ++code) {
      Letter x = Letter::from_code(code);
      Element next = G_.act_code(v, code);
      if (visited_[next]) continue;
      tick();
      path.push_back(x);
      if (next == target) {
        visit(path);
      } else {
        visited_[next] = true;
        paths(next, target, path, visit);
        visited_[next] = false;
      }
      path.pop_back();
    }
  }

  void cycles_from(Element v, Word& path, const std::function<void(const Word&)>& visit) {
    for (std::size_t code = 0; code < G_.letter_count(); ++code) {
      Letter x = Letter::from_code(code);
      Element next = G_.act_code(v, code);
      if (next == FiniteGroup::identity) {
        // Length-2 closings must not retrace the first edge.
        if (path.size() == 1 && x == path.front().inverted()) continue;
        tick();
        path.push_back(x);
        visit(path);
        path.pop_back();
        continue;
      }
      if (visited_[next]) continue;
      tick();
      path.push_back(x);
      visited_[next] = true;
      cycles_from(next, path, visit);
      visited_[next] = false;
      path.pop_back();
    }
  }

  const FiniteGroup& G_;
  std::vector<bool> visited_;
  std::size_t max_extensions_;
  std::size_t extensions_ = 0;
};

std::vector<std::size_t> all_letter_codes(const FiniteGroup& G) {
  std::vector<std::size_t> codes(G.letter_count());
  for (std::size_t i = 0; i < codes.size(); ++i) codes[i] = i;
  return codes;
}

}  // namespace

PathListing simple_paths(const FiniteGroup& G, Element g, SearchBudget budget) {
  if (g >= G.order()) throw InvalidArgument("element out of range");
  PathListing out;
  SimpleSearch search(G, budget.max_extensions);
  try {
    search.paths_to(g, [&](const Word& w) {
      if (out.paths.size() >= budget.max_results) throw BudgetHit{};
      out.paths.emplace_back(w, span_of_word(G, w));
    });
  } catch (const BudgetHit&) {
    out.truncated = true;
  }
  std::sort(out.paths.begin(), out.paths.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CycleListing simple_cycles_at_identity(const FiniteGroup& G, SearchBudget budget) {
  CycleListing out;
  SimpleSearch search(G, budget.max_extensions);
  try {
    search.cycles(all_letter_codes(G), [&](const Word& w) {
      if (out.words.size() >= budget.max_results) throw BudgetHit{};
      out.words.push_back(w);
    });
  } catch (const BudgetHit&) {
    out.truncated = true;
  }
  std::sort(out.words.begin(), out.words.end());
  out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
  return out;
}

bool is_cyclic_word(const FiniteGroup& G, const Word& w) {
  if (w.empty() || !is_cyclically_reduced(w)) return false;
  std::vector<bool> seen(G.order(), false);
  Element g = FiniteGroup::identity;
  for (const Letter& x : w) {
    if (x.generator >= G.generator_count()) return false;
    if (seen[g]) return false;
    seen[g] = true;
    g = G.act(g, x);
  }
  return g == FiniteGroup::identity;
}

bool check_dagger(const FiniteGroup& G, const std::vector<Word>& relators) {
  return std::all_of(relators.begin(), relators.end(), [&](const Word& r) { return is_cyclic_word(G, r); });
}

CyclicClosure::CyclicClosure(const FiniteGroup& G, std::size_t budget) : group_(&G), empty_(Subgraph::of(G)) {
  std::vector<Subgraph> at_identity;
  SimpleSearch search(G, budget);
  for (std::uint32_t x = 0; x < G.generator_count(); ++x) {
    Subgraph closure = Subgraph::of(G);
    closure.insert({FiniteGroup::identity, x});
    try {
      search.cycles({Letter{x, false}.code()}, [&](const Word& w) { closure |= span_of_word(G, w); });
    } catch (const BudgetHit&) {
      throw BudgetExceeded("cyclic closure: simple-cycle budget of " + std::to_string(budget) +
                           " extensions exceeded");
    }
    at_identity.push_back(std::move(closure));
  }
  per_edge_.reserve(empty_.slot_count());
  for (std::size_t s = 0; s < empty_.slot_count(); ++s) {
    PositiveEdge e = empty_.edge_at(s);
    per_edge_.push_back(translate(G, e.source, at_identity[e.generator]));
  }
}

Subgraph CyclicClosure::close(const Subgraph& d) const {
  Subgraph result = d;
  std::vector<PositiveEdge> work = d.edges();
  std::vector<bool> expanded(empty_.slot_count(), false);
  while (!work.empty()) {
    PositiveEdge e = work.back();
    work.pop_back();
    auto s = empty_.slot(e);
    if (expanded[s]) continue;
    expanded[s] = true;
    for (auto f : per_edge_[s].edges()) {
      if (!result.contains(f)) {
        result.insert(f);
        work.push_back(f);
      }
    }
  }
  return result;
}

bool CyclicClosure::is_cyclic(const Subgraph& d) const { return close(d) == d; }

Subgraph cyclic_closure(const FiniteGroup& G, const Subgraph& d) { return CyclicClosure(G).close(d); }

bool is_cyclic_subgraph(const FiniteGroup& G, const Subgraph& d) { return CyclicClosure(G).is_cyclic(d); }

std::string cayley_dot(const FiniteGroup& G, const Subgraph* highlight, bool only_highlight) {
  std::ostringstream out;
  out << "digraph cayley {\n  node [shape=circle];\n";
  std::vector<Element> shown;
  if (only_highlight && highlight != nullptr) {
    shown = vertices(G, *highlight);
  } else {
    for (Element g = 0; g < G.order(); ++g) shown.push_back(g);
  }
  for (Element g : shown) {
    out << "  v" << g << " [label=\"" << (g == FiniteGroup::identity ? std::string("1") : "g" + std::to_string(g))
        << "\"";
    if (g == FiniteGroup::identity) out << ", peripheries=2";
    out << "];\n";
  }
  for (Element g : shown) {
    for (std::uint32_t x = 0; x < G.generator_count(); ++x) {
      PositiveEdge e{g, x};
      bool marked = highlight != nullptr && highlight->contains(e);
      if (only_highlight && !marked) continue;
      out << "  v" << g << " -> v" << G.act(g, Letter{x, false}) << " [label=\"" << G.alphabet().name(x) << "\"";
      if (marked && !only_highlight) out << ", penwidth=3, color=red";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sfinv
