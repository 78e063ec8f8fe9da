#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "sfinv/cayley.hpp"
#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/cli/oracles.hpp"
#include "sfinv/error.hpp"

using namespace sfinv;

namespace {

std::vector<FiniteGroup> small_groups() {
  return {cli::parse_group("cyclic 1 a"), cli::parse_group("cyclic 2 a"), cli::parse_group("cyclic 3 a"),
          cli::parse_group("cyclic 4 a"), cli::parse_group("perm a:(0 1) b:(2 3)"),
          cli::parse_group("perm a:(0 1 2) b:(0 1)")};
}

// Every word over the doubled alphabet up to `max_length`.
void for_each_word(std::size_t generators, std::size_t max_length, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (w.size() == max_length) return;
    for (std::size_t code = 0; code < 2 * generators; ++code) {
      w.push_back(Letter::from_code(code));
      rec();
      w.pop_back();
    }
  };
  rec();
}

// Vertices 1, [w_1], [w_1 w_2], ... before the last step, all distinct.
bool visits_distinct(const FiniteGroup& G, const Word& w, bool include_end) {
  std::set<Element> seen;
  Element g = FiniteGroup::identity;
  for (const Letter& x : w) {
    if (!seen.insert(g).second) return false;
    g = G.act(g, x);
  }
  return !include_end || seen.insert(g).second;
}

}  // namespace

TEST(Cayley, SubgraphBasics) {
  FiniteGroup G = cli::parse_group("cyclic 3 a");
  Subgraph d = Subgraph::of(G);
  EXPECT_TRUE(d.empty());
  d.insert({1, 0});
  EXPECT_TRUE(d.contains({1, 0}));
  EXPECT_EQ(d.edge_count(), 1u);
  EXPECT_EQ(edge_key(G, d), "{1a}");
  EXPECT_EQ(vertices(G, d), (std::vector<Element>{0, 1, 2}));
  EXPECT_FALSE(is_connected(G, d));
  d.erase({1, 0});
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(Subgraph::from_mask(G, 0b101).edges().size(), 2u);
}

TEST(Cayley, SpanAndTranslate) {
  FiniteGroup G = cli::parse_group("cyclic 3 a");
  Alphabet a("a");
  EXPECT_EQ(edge_key(G, span_of_word(G, parse_word("aA", a))), "{0a}");
  EXPECT_EQ(edge_key(G, span_of_word(G, parse_word("A", a))), "{2a}");
  EXPECT_EQ(edge_key(G, translate(G, 1, span_of_word(G, parse_word("a", a)))), "{1a}");
  EXPECT_TRUE(span_of_word(G, parse_word("1", a)).empty());
}

TEST(Cayley, SpanIsConnectedAndTranslationInvariant) {
  gen::Rng rng(11);
  for (const FiniteGroup& G : small_groups()) {
    for (int k = 0; k < 200; ++k) {
      Word u = gen::random_word(rng, G.generator_count(), gen::uniform(rng, 0, 8));
      Word v = gen::random_word(rng, G.generator_count(), gen::uniform(rng, 0, 8));
      Subgraph su = span_of_word(G, u);
      ASSERT_TRUE(oracle::connected(G, su));
      ASSERT_EQ(span_of_word(G, u * v), su | translate(G, G.evaluate(u), span_of_word(G, v)));
      ASSERT_EQ(span_of_word(G, invert(u)), translate(G, G.inverse(G.evaluate(u)), su));
    }
  }
}

TEST(Cayley, SimplePathsMatchWordEnumeration) {
  for (const FiniteGroup& G : small_groups()) {
    std::vector<std::set<Word>> expected(G.order());
    for_each_word(G.generator_count(), G.order() - 1, [&](const Word& w) {
      if (visits_distinct(G, w, true)) expected[G.evaluate(w)].insert(w);
    });
    for (Element g = 0; g < G.order(); ++g) {
      PathListing listing = simple_paths(G, g);
      ASSERT_FALSE(listing.truncated);
      std::set<Word> got;
      for (const auto& [w, span] : listing.paths) {
        got.insert(w);
        ASSERT_EQ(span, span_of_word(G, w));
      }
      ASSERT_EQ(got, expected[g]) << G.description() << " g=" << g;
    }
  }
}

TEST(Cayley, SimpleCyclesMatchWordEnumeration) {
  for (const FiniteGroup& G : small_groups()) {
    std::set<Word> expected;
    for_each_word(G.generator_count(), G.order(), [&](const Word& w) {
      if (!w.empty() && is_cyclically_reduced(w) && G.evaluate(w) == FiniteGroup::identity &&
          visits_distinct(G, w, false)) {
        expected.insert(w);
      }
    });
    CycleListing listing = simple_cycles_at_identity(G);
    ASSERT_FALSE(listing.truncated);
    EXPECT_EQ(std::set<Word>(listing.words.begin(), listing.words.end()), expected) << G.description();
    for (const Word& w : listing.words) EXPECT_TRUE(is_cyclic_word(G, w));
  }
}

TEST(Cayley, SearchBudgetTruncates) {
  FiniteGroup S3 = cli::parse_group("perm a:(0 1 2) b:(0 1)");
  PathListing listing = simple_paths(S3, 1, SearchBudget{2, 1000000});
  EXPECT_TRUE(listing.truncated);
  EXPECT_EQ(listing.paths.size(), 2u);
  EXPECT_TRUE(simple_cycles_at_identity(S3, SearchBudget{100000, 3}).truncated);
}

TEST(Cayley, Dagger) {
  FiniteGroup Z3 = cli::parse_group("cyclic 3 a");
  Alphabet a("a");
  EXPECT_TRUE(check_dagger(Z3, {parse_word("aaa", a)}));
  EXPECT_TRUE(check_dagger(Z3, {parse_word("AAA", a)}));
  EXPECT_FALSE(check_dagger(Z3, {parse_word("aaaaaa", a)}));
  EXPECT_FALSE(check_dagger(Z3, {parse_word("aa", a)}));
  EXPECT_FALSE(check_dagger(Z3, {parse_word("aaa", a), parse_word("1", a)}));
}

TEST(Cayley, ClosureMatchesBlocks) {
  gen::Rng rng(12);
  for (const FiniteGroup& G : small_groups()) {
    CyclicClosure closure(G);
    oracle::Blocks b = oracle::blocks(G);
    for (int k = 0; k < 300; ++k) {
      Subgraph d = gen::random_subgraph(rng, G);
      Subgraph c = closure.close(d);
      ASSERT_EQ(c, oracle::closure_by_blocks(G, b, d)) << G.description() << " " << edge_key(G, d);
      ASSERT_TRUE(d.is_subset_of(c));
      ASSERT_EQ(closure.close(c), c);
      ASSERT_TRUE(closure.is_cyclic(c));
      ASSERT_EQ(closure.is_cyclic(d), oracle::cyclic_by_blocks(G, b, d));
    }
  }
}

TEST(Cayley, ClosureExamples) {
  FiniteGroup Z3 = cli::parse_group("cyclic 3 a");
  Alphabet a("a");
  Subgraph one = span_of_word(Z3, parse_word("a", a));
  EXPECT_EQ(edge_key(Z3, cyclic_closure(Z3, one)), "{0a,1a,2a}");
  // In S3 every edge lies on a cycle, and the Cayley graph is 2-connected.
  FiniteGroup S3 = cli::parse_group("perm a:(0 1 2) b:(0 1)");
  Subgraph e = span_of_word(S3, parse_word("b", Alphabet("ab")));
  EXPECT_EQ(cyclic_closure(S3, e).edge_count(), S3.order() * 2);
  EXPECT_TRUE(is_cyclic_subgraph(S3, Subgraph::of(S3)));
}

TEST(Cayley, Dot) {
  FiniteGroup Z3 = cli::parse_group("cyclic 3 a");
  std::string dot = cayley_dot(Z3, nullptr, false);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("label=\"1\""), std::string::npos);
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
  EXPECT_EQ(arrows, 3u);

  Subgraph h = span_of_word(Z3, parse_word("a", Alphabet("a")));
  std::string only = cayley_dot(Z3, &h, true);
  arrows = 0;
  for (std::size_t p = only.find("->"); p != std::string::npos; p = only.find("->", p + 2)) ++arrows;
  EXPECT_EQ(arrows, 1u);
  EXPECT_NE(cayley_dot(Z3, &h, false).find("penwidth=3"), std::string::npos);
}

TEST(Cayley, ClosureOperatorLaws) {
  gen::Rng rng(13);
  for (const FiniteGroup& G : small_groups()) {
    CyclicClosure closure(G);
    for (int k = 0; k < 300; ++k) {
      Subgraph d = gen::random_subgraph(rng, G);
      Subgraph x = d | gen::random_subgraph(rng, G);
      ASSERT_TRUE(closure.close(d).is_subset_of(closure.close(x)));
      Element g = static_cast<Element>(gen::uniform(rng, 0, G.order() - 1));
      ASSERT_EQ(closure.close(translate(G, g, d)), translate(G, g, closure.close(d)));
      Subgraph cd = closure.close(d);
      Subgraph cx = closure.close(gen::random_subgraph(rng, G));
      ASSERT_TRUE(closure.is_cyclic(cd | translate(G, g, cx)));
    }
    // Per-edge closures are translates of the closures at the identity.
    Subgraph empty = Subgraph::of(G);
    for (std::size_t s = 0; s < empty.slot_count(); ++s) {
      PositiveEdge e = empty.edge_at(s);
      Subgraph single = Subgraph::of(G);
      single.insert(e);
      ASSERT_EQ(closure.edge_closure(e), translate(G, e.source, closure.edge_closure({FiniteGroup::identity, e.generator})));
      ASSERT_EQ(closure.edge_closure(e), closure.close(single));
    }
  }
}
