#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/stephen.hpp"
#include "sfinv/witness.hpp"

using namespace sfinv;

namespace {

Word word(const Presentation& P, const char* text) { return parse_word(text, P.alphabet); }

// Quadratic reference fold: repeatedly merge two targets of one (vertex,
// letter) pair until the labelling is deterministic.
struct SlowFold {
  std::vector<std::uint32_t> cls;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> out;
  std::uint32_t base = 0;

  explicit SlowFold(const RawGraph& raw) : cls(raw.vertices) {
    std::iota(cls.begin(), cls.end(), 0U);
    auto merge = [&](std::uint32_t a, std::uint32_t b) {
      std::uint32_t from = cls[b], to = cls[a];
      if (from == to) return false;
      for (auto& c : cls) {
        if (c == from) c = to;
      }
      return true;
    };
    for (const auto& [u, v] : raw.identify) merge(u, v);
    for (bool changed = true; changed;) {
      changed = false;
      out.clear();
      for (const RawGraph::Edge& e : raw.edges) {
        const std::pair<std::uint32_t, std::uint32_t> keys[2] = {{cls[e.from], e.code}, {cls[e.to], e.code ^ 1U}};
        const std::uint32_t targets[2] = {cls[e.to], cls[e.from]};
        for (int side = 0; side < 2 && !changed; ++side) {
          auto [it, fresh] = out.emplace(keys[side], targets[side]);
          if (!fresh && it->second != targets[side]) changed = merge(it->second, targets[side]);
        }
        if (changed) break;
      }
    }
    base = cls[raw.base];
  }

  std::optional<std::uint32_t> reads(const Word& w) const {
    std::uint32_t v = base;
    for (const Letter& x : w) {
      auto it = out.find({v, static_cast<std::uint32_t>(x.code())});
      if (it == out.end()) return std::nullopt;
      v = it->second;
    }
    return v;
  }

  std::size_t reachable() const {
    std::set<std::uint32_t> seen{base};
    std::vector<std::uint32_t> todo{base};
    while (!todo.empty()) {
      std::uint32_t v = todo.back();
      todo.pop_back();
      for (const auto& [key, t] : out) {
        if (key.first == v && seen.insert(t).second) todo.push_back(t);
      }
    }
    return seen.size();
  }
};

}  // namespace

TEST(Stephen, PresentationValidation) {
  Alphabet ab("ab");
  EXPECT_THROW(Presentation(ab, {Word{}}), InvalidArgument);
  EXPECT_THROW(Presentation(Alphabet("a"), {parse_word("ab", ab)}), InvalidArgument);
}

TEST(Stephen, FoldIsDeterministicAndInverseClosed) {
  gen::Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    RawGraph raw = gen::random_raw_graph(rng, 4);
    WordGraph g = fold(raw);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      for (std::size_t code = 0; code < g.letter_count(); ++code) {
        std::uint32_t t = g.target(v, code);
        if (t != WordGraph::absent) ASSERT_EQ(g.target(t, code ^ 1U), v);
      }
    }
  }
}

TEST(Stephen, FoldMatchesSlowReference) {
  gen::Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    RawGraph raw = gen::random_raw_graph(rng, 4);
    WordGraph g = fold(raw);
    SlowFold slow(raw);
    ASSERT_EQ(g.vertex_count(), slow.reachable());
    for (int j = 0; j < 50; ++j) {
      Word w = gen::random_word(rng, 2, gen::uniform(rng, 0, 6));
      ASSERT_EQ(reads(g, g.base, w).has_value(), slow.reads(w).has_value());
    }
  }
}

TEST(Stephen, FoldIsConfluent) {
  gen::Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    RawGraph raw = gen::random_raw_graph(rng, 4);
    WordGraph g = fold(raw);
    for (int j = 0; j < 10; ++j) ASSERT_EQ(fold(gen::shuffled(rng, raw)), g);
  }
}

TEST(Stephen, LinearGraph) {
  Alphabet ab("ab");
  WordGraph g = linear_graph(parse_word("abBA", ab), 4);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.tip, g.base);
  EXPECT_EQ(reads(g, g.base, parse_word("ab", ab)), std::optional<std::uint32_t>(2));
}

TEST(Stephen, SquareRelatorGivesTwoCycle) {
  Presentation P = cli::make_presentation({"aa"}, "");
  WordGraph g = approximant(P, Word{}, 1);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(reads(g, g.base, word(P, "aa")), std::optional<std::uint32_t>(g.base));
  WordGraph more = approximant(P, Word{}, 5);
  EXPECT_TRUE(more.fixpoint);
  EXPECT_EQ(more, g);
}

TEST(Stephen, RotationsReadAtTheirOwnVertices) {
  Presentation P = cli::make_presentation({"abc"}, "");
  WordGraph g = approximant(P, Word{}, 3);
  EXPECT_EQ(reads(g, g.base, word(P, "abc")), std::optional<std::uint32_t>(g.base));
  EXPECT_FALSE(reads(g, g.base, word(P, "bca")).has_value());
  EXPECT_FALSE(reads(g, g.base, word(P, "cab")).has_value());
  auto va = reads(g, g.base, word(P, "a"));
  auto vab = reads(g, g.base, word(P, "ab"));
  ASSERT_TRUE(va && vab);
  EXPECT_EQ(reads(g, *va, word(P, "bca")), va);
  EXPECT_EQ(reads(g, *vab, word(P, "cab")), vab);
}

TEST(Stephen, Certificates) {
  Presentation abc = cli::make_presentation({"abc"}, "");
  EXPECT_EQ(certify_right_invertible(abc, word(abc, "a")).verdict, Tri::yes);
  EXPECT_EQ(certify_right_invertible(abc, word(abc, "ab")).verdict, Tri::yes);
  EXPECT_NE(certify_right_invertible(abc, word(abc, "b")).verdict, Tri::yes);
  EXPECT_EQ(certify_equal(abc, word(abc, "A"), word(abc, "bc")).verdict, Tri::yes);
  EXPECT_EQ(certify_equal(abc, word(abc, "C"), word(abc, "ab")).verdict, Tri::yes);
  EXPECT_EQ(certify_leq(abc, word(abc, "b"), word(abc, "AC")).verdict, Tri::yes);

  Presentation chain = cli::make_presentation({"bcBaDA"}, "");
  for (std::size_t k = 0; k < 3; ++k) {
    Word lower = parse_word(std::string(k, 'c') + "Ba" + std::string(k, 'D'), chain.alphabet);
    Word upper = parse_word(std::string(k + 1, 'c') + "Ba" + std::string(k + 1, 'D'), chain.alphabet);
    Certificate c = certify_leq(chain, upper, lower);
    EXPECT_EQ(c.verdict, Tri::yes) << "k=" << k;
    EXPECT_GT(c.vertices, 0u);
  }
}

TEST(Stephen, NoOnlyAtFixpoint) {
  Presentation P = cli::make_presentation({"aa"}, "ab");
  Certificate c = certify_right_invertible(P, word(P, "b"));
  EXPECT_EQ(c.verdict, Tri::no);
  EXPECT_TRUE(c.fixpoint);
  EXPECT_EQ(certify_invertible(P, word(P, "a")).verdict, Tri::yes);

  // With no rounds at all the graph of 1 is a single vertex: nothing is decided.
  Certificate early = certify_right_invertible(cli::make_presentation({"abc"}, ""), parse_word("b", Alphabet("abc")),
                                               StephenBudget{0, default_vertex_budget});
  EXPECT_EQ(early.verdict, Tri::unknown);
  EXPECT_FALSE(early.fixpoint);
}

TEST(Stephen, VertexBudget) {
  Presentation P = cli::make_presentation({"abAB"}, "");
  EXPECT_THROW(approximant(P, Word{}, 8, 10), GraphBudgetExceeded);
  try {
    approximant(P, Word{}, 8, 10);
  } catch (const GraphBudgetExceeded& e) {
    EXPECT_LE(e.partial().vertex_count(), 10u);
  }
  Certificate c = certify_right_invertible(P, word(P, "b"), StephenBudget{8, 3});
  EXPECT_EQ(c.verdict, Tri::unknown);
  EXPECT_TRUE(c.budget_exhausted);
}

TEST(Stephen, SequenceReusesStages) {
  Presentation P = cli::make_presentation({"abab"}, "");
  ApproximantSequence seq(P, Word{});
  const WordGraph* g2 = seq.at(2);
  ASSERT_NE(g2, nullptr);
  EXPECT_EQ(*g2, approximant(P, Word{}, 2));
  EXPECT_TRUE(has_morphism(*seq.at(1), *g2));
  EXPECT_EQ(certify_right_invertible(seq, word(P, "ab"), 2).verdict, Tri::yes);
}

TEST(Stephen, Dot) {
  Presentation P = cli::make_presentation({"aa"}, "");
  std::string dot = word_graph_dot(approximant(P, Word{}, 1), P.alphabet);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("->"), std::string::npos);
}

TEST(Stephen, ApproximantsGrowByMorphisms) {
  for (const char* relator : {"abab", "abc", "abAB", "bcBaDA", "aab"}) {
    Presentation P = cli::make_presentation({relator}, "");
    for (const char* w : {"1", "a", "ab"}) {
      ApproximantSequence seq(P, parse_word(w, P.alphabet));
      for (std::size_t k = 0; k < 4; ++k) {
        const WordGraph* a = seq.at(k);
        const WordGraph* b = seq.at(k + 1);
        ASSERT_TRUE(a && b);
        ASSERT_TRUE(has_morphism(*a, *b)) << relator << " w=" << w << " k=" << k;
      }
    }
  }
}

TEST(Stephen, RelatorPrefixesRightInvertibleByStageTwo) {
  for (const char* relator : {"ab", "abab", "abc", "aba", "abcabc", "aaa", "bcBaDA", "abAB", "aabbAB"}) {
    Presentation P = cli::make_presentation({relator}, "");
    const Word& r = P.relators.front();
    for (std::size_t j = 1; j < r.size(); ++j) {
      Certificate c = certify_right_invertible(P, r.prefix(j), StephenBudget{2, default_vertex_budget});
      ASSERT_EQ(c.verdict, Tri::yes) << relator << " prefix " << j;
      ASSERT_LE(c.stage, 2u);
    }
  }
}

TEST(Stephen, NeverContradictsWitnesses) {
  gen::Rng rng(44);
  for (const char* relator : {"ab", "abab", "abc", "ababab", "abcabc", "aab", "abAB"}) {
    Presentation P = cli::make_presentation({relator}, "");
    std::vector<WitnessAssignment> witnesses = builtin_witnesses(P);
    ApproximantSequence of_one(P, Word{});
    for (int k = 0; k < 60; ++k) {
      Word u = gen::random_word(rng, P.alphabet.size(), gen::uniform(rng, 1, 5));
      if (certify_right_invertible(of_one, u, 4).verdict != Tri::yes) continue;
      for (const WitnessAssignment& A : witnesses) {
        ASSERT_FALSE(certify_non_right_invertible(A, u)) << relator << " " << format_word(u, P.alphabet) << " " << A.id;
      }
    }
  }
}
