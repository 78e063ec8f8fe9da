#include "sfinv/expansion.hpp"

#include <unordered_map>

#include "sfinv/error.hpp"

namespace sfinv {

MMElement mm_identity(const FiniteGroup& G) { return {Subgraph::of(G), FiniteGroup::identity}; }

MMElement mm_generator(const FiniteGroup& G, Letter x) {
  return {span_of_word(G, Word{x}), G.act(FiniteGroup::identity, x)};
}

MMElement mm_multiply(const FiniteGroup& G, const MMElement& s, const MMElement& t) {
  return {s.graph | translate(G, s.point, t.graph), G.multiply(s.point, t.point)};
}

MMElement mm_inverse(const FiniteGroup& G, const MMElement& s) {
  Element g_inv = G.inverse(s.point);
  return {translate(G, g_inv, s.graph), g_inv};
}

MMElement mm_evaluate_word(const FiniteGroup& G, const Word& w) { return {span_of_word(G, w), G.evaluate(w)}; }

bool mm_natural_leq(const MMElement& s, const MMElement& t) {
  return s.point == t.point && t.graph.is_subset_of(s.graph);
}

bool is_valid_mm(const FiniteGroup& G, const MMElement& s) {
  if (s.point >= G.order() || !is_connected(G, s.graph)) return false;
  if (s.point == FiniteGroup::identity) return true;
  for (Element v : vertices(G, s.graph)) {
    if (v == s.point) return true;
  }
  return false;
}

std::string mm_key(const FiniteGroup& G, const MMElement& s) {
  return edge_key(G, s.graph) + "@" + std::to_string(s.point);
}

namespace detail {

FiniteInverseMonoid enumerate_pairs(const FiniteGroup& G, std::size_t slot_cap, std::string name,
                                    const std::function<bool(const Subgraph&)>& keep,
                                    const std::function<MMElement(const MMElement&, const MMElement&)>& multiply,
                                    const std::vector<MMElement>& letters) {
  const std::size_t slots = G.order() * G.generator_count();
  if (slots > slot_cap || slots >= 64) {
    throw BudgetExceeded("expansion too large: " + std::to_string(slots) + " edge slots exceed the cap of " +
                         std::to_string(slot_cap));
  }
  std::vector<MMElement> elements;
  std::unordered_map<std::uint64_t, FiniteInverseMonoid::Index> index;
  auto code = [&](const MMElement& s) { return s.graph.mask() * G.order() + s.point; };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
    Subgraph graph = Subgraph::from_mask(G, mask);
    if (!is_connected(G, graph) || !keep(graph)) continue;
    for (Element v : vertices(G, graph)) {
      MMElement s{graph, v};
      index.emplace(code(s), static_cast<FiniteInverseMonoid::Index>(elements.size()));
      elements.push_back(std::move(s));
    }
  }
  auto lookup = [&](const MMElement& s) {
    auto it = index.find(code(s));
    if (it == index.end()) throw SoundnessViolation("product left the enumerated set: " + mm_key(G, s));
    return it->second;
  };

  MonoidData data;
  data.name = std::move(name);
  data.identity = lookup(mm_identity(G));
  data.right.assign(letters.size(), {});
  data.left.assign(letters.size(), {});
  for (const auto& s : elements) {
    data.keys.push_back(mm_key(G, s));
    data.inverse.push_back(lookup(mm_inverse(G, s)));
  }
  for (std::size_t c = 0; c < letters.size(); ++c) {
    data.letter_images.push_back(lookup(letters[c]));
    data.right[c].reserve(elements.size());
    data.left[c].reserve(elements.size());
    for (const auto& s : elements) {
      data.right[c].push_back(lookup(multiply(s, letters[c])));
      data.left[c].push_back(lookup(multiply(letters[c], s)));
    }
  }
  return FiniteInverseMonoid(std::move(data), G.alphabet());
}

}  // namespace detail

FiniteInverseMonoid enumerate_mm(const FiniteGroup& G, std::size_t slot_cap) {
  std::vector<MMElement> letters;
  for (std::size_t c = 0; c < G.letter_count(); ++c) letters.push_back(mm_generator(G, Letter::from_code(c)));
  return detail::enumerate_pairs(
      G, slot_cap, "M(" + G.description() + ")", [](const Subgraph&) { return true; },
      [&](const MMElement& s, const MMElement& t) { return mm_multiply(G, s, t); }, letters);
}

MMElement mm_element_of(const FiniteGroup& G, const FiniteInverseMonoid& M, FiniteInverseMonoid::Index i) {
  const std::string& key = M.key(i);
  MMElement s{Subgraph::of(G), 0};
  std::size_t pos = 1;
  auto number = [&] {
    std::uint64_t v = 0;
    std::size_t start = pos;
    while (pos < key.size() && key[pos] >= '0' && key[pos] <= '9') v = v * 10 + static_cast<std::uint64_t>(key[pos++] - '0');
    if (pos == start) throw ParseError("malformed element key " + key);
    return v;
  };
  if (key.empty() || key[0] != '{') throw ParseError("malformed element key " + key);
  while (pos < key.size() && key[pos] != '}') {
    auto source = number();
    if (pos >= key.size()) throw ParseError("malformed element key " + key);
    auto gen = G.alphabet().index_of(key[pos++]);
    if (!gen || source >= G.order()) throw ParseError("malformed element key " + key);
    s.graph.insert({static_cast<Element>(source), static_cast<std::uint32_t>(*gen)});
    if (pos < key.size() && key[pos] == ',') ++pos;
  }
  if (pos + 1 >= key.size() || key[pos + 1] != '@') throw ParseError("malformed element key " + key);
  pos += 2;
  auto point = number();
  if (point >= G.order()) throw ParseError("malformed element key " + key);
  s.point = static_cast<Element>(point);
  return s;
}

MaximaListing maximal_sigma_elements(const FiniteGroup& G, Element g, SearchBudget budget) {
  auto listing = simple_paths(G, g, budget);
  MaximaListing out;
  out.truncated = listing.truncated;
  for (auto& [w, span] : listing.paths) out.elements.push_back({std::move(span), g});
  return out;
}

}  // namespace sfinv
