#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/cli/oracles.hpp"
#include "sfinv/error.hpp"
#include "sfinv/expansion.hpp"

using namespace sfinv;

namespace {

std::vector<FiniteGroup> small_groups() {
  return {cli::parse_group("cyclic 1 a"), cli::parse_group("cyclic 2 a"), cli::parse_group("cyclic 3 a"),
          cli::parse_group("cyclic 4 a"), cli::parse_group("perm a:(0 1) b:(2 3)"),
          cli::parse_group("perm a:(0 1 2) b:(0 1)")};
}

}  // namespace

TEST(Expansion, SizesMatchBruteForce) {
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    EXPECT_EQ(M.size(), oracle::count_mm(G)) << G.description();
  }
  EXPECT_EQ(enumerate_mm(cli::parse_group("cyclic 1 a")).size(), 2u);
  EXPECT_EQ(enumerate_mm(cli::parse_group("cyclic 2 a")).size(), 7u);
  EXPECT_EQ(enumerate_mm(cli::parse_group("cyclic 3 a")).size(), 17u);
}

TEST(Expansion, IdentityComesFirst) {
  FiniteGroup Z3 = cli::parse_group("cyclic 3 a");
  FiniteInverseMonoid M = enumerate_mm(Z3);
  EXPECT_EQ(M.identity(), 0u);
  EXPECT_EQ(M.key(0), "{}@0");
  EXPECT_EQ(mm_element_of(Z3, M, 0), mm_identity(Z3));
}

TEST(Expansion, TableAgreesWithDirectProduct) {
  gen::Rng rng(21);
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    for (int k = 0; k < 300; ++k) {
      Word u = gen::random_word(rng, G.generator_count(), gen::uniform(rng, 0, 7));
      Word v = gen::random_word(rng, G.generator_count(), gen::uniform(rng, 0, 7));
      MMElement su = mm_evaluate_word(G, u);
      MMElement sv = mm_evaluate_word(G, v);
      ASSERT_TRUE(is_valid_mm(G, su));
      ASSERT_EQ(su, (MMElement{span_of_word(G, u), G.evaluate(u)}));
      ASSERT_EQ(mm_multiply(G, su, sv), mm_evaluate_word(G, u * v));
      ASSERT_EQ(mm_inverse(G, su), mm_evaluate_word(G, invert(u)));
      auto iu = M.evaluate(u);
      ASSERT_EQ(mm_element_of(G, M, iu), su);
      ASSERT_EQ(M.key(iu), mm_key(G, su));
      ASSERT_EQ(mm_element_of(G, M, M.multiply(iu, M.evaluate(v))), mm_evaluate_word(G, u * v));
    }
  }
}

TEST(Expansion, NaturalOrderIsReverseInclusion) {
  FiniteGroup G = cli::parse_group("perm a:(0 1) b:(2 3)");
  FiniteInverseMonoid M = enumerate_mm(G);
  for (FiniteInverseMonoid::Index x = 0; x < M.size(); ++x) {
    MMElement sx = mm_element_of(G, M, x);
    for (FiniteInverseMonoid::Index y = 0; y < M.size(); ++y) {
      MMElement sy = mm_element_of(G, M, y);
      bool expected = sx.point == sy.point && sy.graph.is_subset_of(sx.graph);
      ASSERT_EQ(M.natural_leq(x, y), expected);
      ASSERT_EQ(mm_natural_leq(sx, sy), expected);
    }
  }
}

TEST(Expansion, EUnitaryButNotFInverse) {
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    EXPECT_TRUE(is_E_unitary(M)) << G.description();
    EXPECT_EQ(min_group_congruence(M).class_count(), G.order());
    // Only the trivial group with its single loop has one path to each point.
    EXPECT_EQ(is_F_inverse(M), G.order() == 1) << G.description();
  }
}

TEST(Expansion, MaximaAreSimplePathSpans) {
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    for (Element g = 0; g < G.order(); ++g) {
      MaximaListing maxima = maximal_sigma_elements(G, g);
      ASSERT_FALSE(maxima.truncated);
      for (const MMElement& s : maxima.elements) ASSERT_EQ(s.point, g);
      // Every element over g lies below one of them, and none lies below another.
      for (FiniteInverseMonoid::Index x = 0; x < M.size(); ++x) {
        MMElement t = mm_element_of(G, M, x);
        if (t.point != g) continue;
        bool below = false;
        for (const MMElement& s : maxima.elements) below = below || mm_natural_leq(t, s);
        ASSERT_TRUE(below) << mm_key(G, t);
      }
      for (const MMElement& s : maxima.elements) {
        for (const MMElement& r : maxima.elements) {
          if (!(s == r)) ASSERT_FALSE(mm_natural_leq(s, r));
        }
      }
    }
  }
  EXPECT_EQ(maximal_sigma_elements(cli::parse_group("cyclic 3 a"), 1).elements.size(), 2u);
}

TEST(Expansion, SlotCap) {
  FiniteGroup S3 = cli::parse_group("perm a:(0 1 2) b:(0 1)");
  EXPECT_THROW(enumerate_mm(S3, 11), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_mm(S3, 12));
}

TEST(Expansion, DumpTextGolden) {
  FiniteInverseMonoid M = enumerate_mm(cli::parse_group("cyclic 2 a"));
  std::string text = dump_text(M);
  EXPECT_EQ(text.substr(0, text.find('\n')), "{}@0\t{}@0\tyes");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
  std::string blob = dump_table_blob(M);
  EXPECT_EQ(blob.size(), 16u + 49u * 4u);
}

TEST(Expansion, InverseMonoidAxiomsOnRandomTriples) {
  gen::Rng rng(22);
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    for (int k = 0; k < 2000; ++k) {
      auto pick = [&] { return static_cast<FiniteInverseMonoid::Index>(gen::uniform(rng, 0, M.size() - 1)); };
      auto s = pick(), t = pick(), u = pick();
      ASSERT_EQ(M.multiply(M.multiply(s, t), u), M.multiply(s, M.multiply(t, u)));
      ASSERT_EQ(M.inverse(M.multiply(s, t)), M.multiply(M.inverse(t), M.inverse(s)));
      ASSERT_EQ(M.multiply(M.multiply(s, M.inverse(s)), s), s);
      auto e = M.multiply(s, M.inverse(s)), f = M.multiply(t, M.inverse(t));
      ASSERT_EQ(M.multiply(e, f), M.multiply(f, e));
    }
  }
}

TEST(Expansion, SigmaIsPointEquality) {
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    std::vector<FiniteInverseMonoid::Index> cls = min_group_congruence(M).canonical();
    // Same partition: class -> point is well defined and injective.
    std::map<FiniteInverseMonoid::Index, Element> point_of_class;
    std::map<Element, FiniteInverseMonoid::Index> class_of_point;
    for (FiniteInverseMonoid::Index x = 0; x < M.size(); ++x) {
      Element p = mm_element_of(G, M, x).point;
      ASSERT_EQ(point_of_class.emplace(cls[x], p).first->second, p);
      ASSERT_EQ(class_of_point.emplace(p, cls[x]).first->second, cls[x]);
    }
  }
}

TEST(Expansion, MaximaEqualOrderMaximalElements) {
  for (const FiniteGroup& G : small_groups()) {
    FiniteInverseMonoid M = enumerate_mm(G);
    for (Element g = 0; g < G.order(); ++g) {
      std::set<std::string> from_table;
      for (FiniteInverseMonoid::Index x = 0; x < M.size(); ++x) {
        if (mm_element_of(G, M, x).point != g) continue;
        bool maximal = true;
        for (FiniteInverseMonoid::Index y = 0; y < M.size() && maximal; ++y) {
          maximal = y == x || !M.natural_leq(x, y);
        }
        if (maximal) from_table.insert(M.key(x));
      }
      std::set<std::string> listed;
      for (const MMElement& s : maximal_sigma_elements(G, g).elements) listed.insert(mm_key(G, s));
      ASSERT_EQ(listed, from_table) << G.description() << " g=" << g;
    }
  }
}
