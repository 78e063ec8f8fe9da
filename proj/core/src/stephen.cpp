#include "sfinv/stephen.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace sfinv {

Presentation::Presentation(Alphabet a, std::vector<Word> rs) : alphabet(std::move(a)), relators(std::move(rs)) {
  for (const Word& r : relators) {
    if (r.empty()) throw InvalidArgument("empty relator");
    for (const Letter& x : r) {
      if (x.generator >= alphabet.size()) throw InvalidArgument("unknown generator");
    }
  }
}

std::uint32_t RawGraph::add_path(std::uint32_t from, const Word& w, std::optional<std::uint32_t> to) {
  if (w.empty()) {
    if (to && *to != from) identify.emplace_back(from, *to);
    return to.value_or(from);
  }
  std::uint32_t cur = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint32_t next = (i + 1 == w.size() && to) ? *to : add_vertex();
    edges.push_back({cur, static_cast<std::uint32_t>(w[i].code()), next});
    cur = next;
  }
  return cur;
}

WordGraph::WordGraph(std::size_t letters, std::size_t vertices)
    : letters_(letters), targets_(letters * vertices, absent) {}

std::size_t WordGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < targets_.size(); i += 2) count += targets_[i] != absent ? 1 : 0;
  return count;
}

RawGraph WordGraph::to_raw() const {
  RawGraph raw;
  raw.letters = letters_;
  raw.vertices = vertex_count();
  raw.base = base;
  raw.tip = tip;
  for (std::uint32_t v = 0; v < raw.vertices; ++v) {
    for (std::size_t c = 0; c < letters_; c += 2) {
      auto t = target(v, c);
      if (t != absent) raw.edges.push_back({v, static_cast<std::uint32_t>(c), t});
    }
  }
  return raw;
}

WordGraph fold(const RawGraph& raw) {
  const std::size_t n = std::max<std::size_t>(raw.vertices, 1);
  const std::size_t L = raw.letters;
  constexpr auto absent = WordGraph::absent;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  std::vector<std::uint32_t> out(n * L, absent);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> merges;

  auto find = [&](std::uint32_t v) {
    std::uint32_t root = v;
    while (parent[root] != root) root = parent[root];
    while (parent[v] != root) {
      auto next = parent[v];
      parent[v] = root;
      v = next;
    }
    return root;
  };
  auto link = [&](std::uint32_t u, std::size_t c, std::uint32_t v) {
    u = find(u);
    v = find(v);
    auto& t = out[u * L + c];
    if (t == absent) {
      t = v;
    } else if (find(t) != v) {
      merges.emplace_back(t, v);
    }
  };

  for (const auto& e : raw.edges) {
    if (e.from >= n || e.to >= n || e.code >= L) throw InvalidArgument("raw edge out of range");
    link(e.from, e.code, e.to);
    link(e.to, e.code ^ 1U, e.from);
  }
  for (auto [a, b] : raw.identify) merges.emplace_back(a, b);
  while (!merges.empty()) {
    auto [a, b] = merges.front();
    merges.pop_front();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    for (std::size_t c = 0; c < L; ++c) {
      auto t = out[b * L + c];
      if (t != absent) link(a, c, t);
    }
  }

  // Canonical numbering: breadth-first from the base.
  std::vector<std::uint32_t> id(n, absent);
  std::vector<std::uint32_t> order;
  auto root_base = find(raw.base);
  id[root_base] = 0;
  order.push_back(root_base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < L; ++c) {
      auto t = out[order[i] * L + c];
      if (t == absent) continue;
      t = find(t);
      if (id[t] == absent) {
        id[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  WordGraph g(L, order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < L; ++c) {
      auto t = out[order[i] * L + c];
      if (t != absent) g.set_target(static_cast<std::uint32_t>(i), c, id[find(t)]);
    }
  }
  g.base = 0;
  auto tip = id[find(raw.tip)];
  if (tip == absent) throw InvalidArgument("tip is not connected to the base");
  g.tip = tip;
  return g;
}

WordGraph linear_graph(const Word& w, std::size_t letters) {
  RawGraph raw;
  raw.letters = letters;
  raw.base = raw.add_vertex();
  for (const Letter& x : w) {
    if (x.code() >= letters) throw InvalidArgument("unknown generator");
  }
  raw.tip = raw.add_path(raw.base, w);
  return fold(raw);
}

std::optional<std::uint32_t> reads(const WordGraph& g, std::uint32_t from, const Word& w) {
  std::uint32_t cur = from;
  for (const Letter& x : w) {
    if (x.code() >= g.letter_count()) return std::nullopt;
    cur = g.target(cur, x.code());
    if (cur == WordGraph::absent) return std::nullopt;
  }
  return cur;
}

namespace {

/// Records into `raw` (when given) what one round must attach. Only the
/// part of each relator not already readable from either end is added.
bool plan_expansion(const WordGraph& g, const Presentation& P, RawGraph* raw) {
  bool changed = false;
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t v = 0; v < n; ++v) {
    for (const Word& r : P.relators) {
      std::uint32_t cur = v;
      std::size_t i = 0;
      while (i < r.size()) {
        auto t = g.target(cur, r[i].code());
        if (t == WordGraph::absent) break;
        cur = t;
        ++i;
      }
      if (i == r.size() && cur == v) continue;
      changed = true;
      if (raw == nullptr) return true;
      if (i == r.size()) {
        raw->identify.emplace_back(cur, v);
        continue;
      }
      std::uint32_t back = v;
      std::size_t j = r.size();
      while (j > i) {
        auto t = g.target(back, r[j - 1].code() ^ 1U);
        if (t == WordGraph::absent) break;
        back = t;
        --j;
      }
      raw->add_path(cur, r.subword(i, j - i), back);
    }
  }
  return changed;
}

void check_budget(const WordGraph& candidate, const WordGraph& previous, std::size_t vertex_budget) {
  if (candidate.vertex_count() > vertex_budget) {
    throw GraphBudgetExceeded("approximant exceeds the vertex budget of " + std::to_string(vertex_budget),
                              previous);
  }
}

WordGraph initial_stage(const Presentation& P, const Word& w, std::size_t vertex_budget) {
  WordGraph g = linear_graph(w, P.letter_count());
  check_budget(g, WordGraph(P.letter_count(), 1), vertex_budget);
  g.fixpoint = !plan_expansion(g, P, nullptr);
  return g;
}

}  // namespace

WordGraph expand_round(const WordGraph& g, const Presentation& P, std::size_t vertex_budget) {
  if (g.fixpoint) return g;
  RawGraph raw = g.to_raw();
  if (!plan_expansion(g, P, &raw)) {
    WordGraph same = g;
    same.fixpoint = true;
    return same;
  }
  WordGraph next = fold(raw);
  next.stage = g.stage + 1;
  check_budget(next, g, vertex_budget);
  next.fixpoint = !plan_expansion(next, P, nullptr);
  return next;
}

WordGraph approximant(const Presentation& P, const Word& w, std::size_t rounds, std::size_t vertex_budget) {
  WordGraph g = initial_stage(P, w, vertex_budget);
  for (std::size_t k = 0; k < rounds && !g.fixpoint; ++k) g = expand_round(g, P, vertex_budget);
  return g;
}

ApproximantSequence::ApproximantSequence(const Presentation& P, Word w, std::size_t vertex_budget)
    : P_(P), w_(std::move(w)), vertex_budget_(vertex_budget) {}

const WordGraph* ApproximantSequence::at(std::size_t k) {
  try {
    if (stages_.empty() && !exhausted_) stages_.push_back(initial_stage(P_, w_, vertex_budget_));
    while (stages_.size() <= k && !exhausted_ && !stages_.back().fixpoint) {
      WordGraph next = expand_round(stages_.back(), P_, vertex_budget_);
      stages_.push_back(std::move(next));
    }
  } catch (const BudgetExceeded&) {
    exhausted_ = true;
  }
  if (k < stages_.size()) return &stages_[k];
  if (!stages_.empty() && stages_.back().fixpoint) return &stages_.back();
  return nullptr;
}

namespace {

template <typename Test>
Certificate search_stages(ApproximantSequence& seq, std::size_t rounds, Test test) {
  Certificate cert;
  for (std::size_t k = 0; k <= rounds; ++k) {
    const WordGraph* g = seq.at(k);
    if (g == nullptr) {
      cert.budget_exhausted = true;
      return cert;
    }
    cert.stage = g->stage;
    cert.vertices = g->vertex_count();
    cert.fixpoint = g->fixpoint;
    if (test(*g)) {
      cert.verdict = Tri::yes;
      return cert;
    }
    if (g->fixpoint) {
      cert.verdict = Tri::no;
      return cert;
    }
  }
  return cert;
}

Certificate both(const Certificate& a, const Certificate& b) {
  Certificate c;
  if (a.verdict == Tri::yes && b.verdict == Tri::yes) {
    c.verdict = Tri::yes;
  } else if (a.verdict == Tri::no || b.verdict == Tri::no) {
    c.verdict = Tri::no;
  }
  c.stage = std::max(a.stage, b.stage);
  c.vertices = std::max(a.vertices, b.vertices);
  c.fixpoint = a.fixpoint && b.fixpoint;
  c.budget_exhausted = a.budget_exhausted || b.budget_exhausted;
  return c;
}

}  // namespace

Certificate certify_right_invertible(ApproximantSequence& of_one, const Word& u, std::size_t rounds) {
  return search_stages(of_one, rounds, [&](const WordGraph& g) { return reads(g, g.base, u).has_value(); });
}

Certificate certify_right_invertible(const Presentation& P, const Word& u, StephenBudget budget) {
  ApproximantSequence seq(P, Word{}, budget.vertex_budget);
  return certify_right_invertible(seq, u, budget.rounds);
}

Certificate certify_invertible(ApproximantSequence& of_one, const Word& u, std::size_t rounds) {
  return both(certify_right_invertible(of_one, u, rounds), certify_right_invertible(of_one, invert(u), rounds));
}

Certificate certify_invertible(const Presentation& P, const Word& u, StephenBudget budget) {
  ApproximantSequence seq(P, Word{}, budget.vertex_budget);
  return certify_invertible(seq, u, budget.rounds);
}

Certificate certify_leq(ApproximantSequence& of_lower, const Word& upper, std::size_t rounds) {
  return search_stages(of_lower, rounds, [&](const WordGraph& g) { return reads(g, g.base, upper) == g.tip; });
}

Certificate certify_leq(const Presentation& P, const Word& upper, const Word& lower, StephenBudget budget) {
  ApproximantSequence seq(P, lower, budget.vertex_budget);
  return certify_leq(seq, upper, budget.rounds);
}

Certificate certify_equal(const Presentation& P, const Word& u, const Word& v, StephenBudget budget) {
  return both(certify_leq(P, u, v, budget), certify_leq(P, v, u, budget));
}

bool has_morphism(const WordGraph& from, const WordGraph& to) {
  if (from.letter_count() != to.letter_count()) return false;
  std::vector<std::uint32_t> image(from.vertex_count(), WordGraph::absent);
  image[from.base] = to.base;
  std::deque<std::uint32_t> queue{from.base};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < from.letter_count(); ++c) {
      auto t = from.target(v, c);
      if (t == WordGraph::absent) continue;
      auto t2 = to.target(image[v], c);
      if (t2 == WordGraph::absent) return false;
      if (image[t] == WordGraph::absent) {
        image[t] = t2;
        queue.push_back(t);
      } else if (image[t] != t2) {
        return false;
      }
    }
  }
  return image[from.tip] == to.tip;
}

std::string word_graph_dot(const WordGraph& g, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "digraph stephen {\n  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\"";
    if (v == g.base) out << ", shape=doublecircle";
    if (v == g.tip) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t c = 0; c < g.letter_count(); c += 2) {
      auto t = g.target(v, c);
      if (t != WordGraph::absent) {
        out << "  v" << v << " -> v" << t << " [label=\"" << alphabet.name(c / 2) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sfinv
