#include <gtest/gtest.h>

#include <map>

#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/cli/oracles.hpp"
#include "sfinv/error.hpp"
#include "sfinv/pinj.hpp"
#include "sfinv/witness.hpp"

using namespace sfinv;

namespace {

constexpr int probe = 1001;

// The map restricted to [0, probe) as an explicit table.
std::map<int, Integer> table_of(const StructuredPinj& f) {
  std::map<int, Integer> t;
  for (int n = 0; n < probe; ++n) {
    if (auto v = f.apply(n)) t.emplace(n, *v);
  }
  return t;
}

ArithProgression naturals() { return ArithProgression::make(0, 1, 0); }

}  // namespace

TEST(Pinj, NamedMaps) {
  EXPECT_EQ(doubling_map().apply(7), Integer(14));
  EXPECT_EQ(successor_map().apply(0), Integer(1));
  StructuredPinj c = even_or_one_identity();
  EXPECT_EQ(c.apply(1), Integer(1));
  EXPECT_EQ(c.apply(4), Integer(4));
  EXPECT_FALSE(c.apply(3).has_value());
  EXPECT_TRUE(StructuredPinj().nowhere_defined());
  EXPECT_TRUE(is_identity(StructuredPinj::identity()));
  EXPECT_FALSE(is_identity(c));
}

TEST(Pinj, Progressions) {
  ArithProgression odd = ArithProgression::make(1, 2, 4);
  EXPECT_EQ(odd.start, Integer(5));
  EXPECT_TRUE(odd.contains(7));
  EXPECT_FALSE(odd.contains(3));
  EXPECT_FALSE(odd.contains(8));
  AffineRule r = AffineRule::make(4, 2, 2);
  EXPECT_EQ(r.p, Integer(2));
  EXPECT_EQ(r.q, Integer(1));
  EXPECT_EQ(r.d, Integer(1));
}

TEST(Pinj, MakeRejectsInvalidMaps) {
  // n/2 is not integral on odd n.
  EXPECT_THROW(StructuredPinj::affine(naturals(), AffineRule::make(1, 0, 2)), InvalidArgument);
  // n - 5 is negative near 0.
  EXPECT_THROW(StructuredPinj::affine(naturals(), AffineRule::make(1, -5, 1)), InvalidArgument);
  // Overlapping domains.
  EXPECT_THROW(StructuredPinj::make({Branch{naturals(), AffineRule::make(2, 0, 1)},
                                     Branch{ArithProgression::make(0, 2, 0), AffineRule::make(2, 1, 1)}},
                                    {}),
               InvalidArgument);
  // Both branches land on the even numbers.
  EXPECT_THROW(StructuredPinj::make({Branch{ArithProgression::make(0, 2, 0), AffineRule::make(1, 0, 1)},
                                     Branch{ArithProgression::make(1, 2, 0), AffineRule::make(1, 1, 1)}},
                                    {}),
               InvalidArgument);
  // Exceptional point inside a branch domain, and one colliding with an image.
  EXPECT_THROW(StructuredPinj::make({Branch{ArithProgression::make(0, 2, 0), AffineRule::make(1, 0, 1)}}, {{2, 1}}),
               InvalidArgument);
  EXPECT_THROW(StructuredPinj::make({Branch{ArithProgression::make(0, 2, 0), AffineRule::make(1, 0, 1)}}, {{1, 2}}),
               InvalidArgument);
  EXPECT_THROW(ArithProgression::make(0, 0, 0), InvalidArgument);
}

TEST(Pinj, RandomMapsAreInjective) {
  gen::Rng rng(51);
  for (int k = 0; k < 300; ++k) {
    std::map<Integer, int> seen;
    for (const auto& [n, v] : table_of(gen::random_pinj(rng))) {
      ASSERT_GE(v, 0);
      ASSERT_TRUE(seen.emplace(v, n).second) << "two points map to " << v;
    }
  }
}

TEST(Pinj, ComposeIsPointwise) {
  gen::Rng rng(52);
  for (int k = 0; k < 300; ++k) {
    StructuredPinj a = gen::random_pinj(rng);
    StructuredPinj b = gen::random_pinj(rng);
    StructuredPinj ab = compose(a, b);
    for (int n = 0; n < probe; ++n) {
      ASSERT_EQ(ab.apply(n), oracle::apply_chain({a, b}, n)) << format_pinj(a) << " ; " << format_pinj(b) << " at " << n;
    }
  }
}

TEST(Pinj, InverseIsPointwise) {
  gen::Rng rng(53);
  for (int k = 0; k < 300; ++k) {
    StructuredPinj a = gen::random_pinj(rng);
    StructuredPinj inv = invert_pinj(a);
    for (const auto& [n, v] : table_of(a)) ASSERT_EQ(inv.apply(v), Integer(n));
    for (const auto& [m, n] : table_of(inv)) ASSERT_EQ(a.apply(n), Integer(m));
    ASSERT_TRUE(equals(invert_pinj(inv), a));
  }
}

TEST(Pinj, IdempotentsAndInverseLaws) {
  gen::Rng rng(54);
  for (int k = 0; k < 200; ++k) {
    StructuredPinj a = gen::random_pinj(rng);
    StructuredPinj inv = invert_pinj(a);
    StructuredPinj d = domain_idempotent(a);
    ASSERT_TRUE(equals(d, compose(a, inv)));
    ASSERT_TRUE(equals(range_idempotent(a), compose(inv, a)));
    ASSERT_TRUE(equals(compose(d, a), a));
    for (int n = 0; n < probe; ++n) {
      auto v = d.apply(n);
      ASSERT_EQ(v.has_value(), a.apply(n).has_value());
      if (v) ASSERT_EQ(*v, Integer(n));
    }
  }
}

TEST(Pinj, EqualsAgreesWithTables) {
  gen::Rng rng(55);
  for (int k = 0; k < 300; ++k) {
    StructuredPinj a = gen::random_pinj(rng);
    StructuredPinj b = gen::random_pinj(rng);
    bool same = equals(a, b);
    if (same) ASSERT_EQ(table_of(a), table_of(b));
    if (table_of(a) != table_of(b)) ASSERT_FALSE(same);
    // The same map presented with a doubled modulus.
    StructuredPinj round_trip = compose(compose(a, doubling_map()), invert_pinj(doubling_map()));
    ASSERT_TRUE(equals(round_trip, a));
  }
  EXPECT_FALSE(equals(doubling_map(), successor_map()));
}

TEST(Pinj, Format) {
  EXPECT_EQ(format_pinj(doubling_map()), "pinj[ branch(r=0,m=1,s=0 : 2n+0/1) ]");
  EXPECT_EQ(format_pinj(even_or_one_identity()), "pinj[ branch(r=0,m=2,s=0 : 1n+0/1), point(1 -> 1) ]");
  EXPECT_EQ(format_pinj(StructuredPinj()), "pinj[ ]");
}

TEST(Pinj, CompositionIsAssociative) {
  gen::Rng rng(56);
  for (int k = 0; k < 200; ++k) {
    StructuredPinj a = gen::random_pinj(rng), b = gen::random_pinj(rng), c = gen::random_pinj(rng);
    StructuredPinj left = compose(compose(a, b), c);
    StructuredPinj right = compose(a, compose(b, c));
    ASSERT_TRUE(equals(left, right));
    ASSERT_EQ(table_of(left), table_of(right));
    for (int n = 0; n < probe; n += 7) ASSERT_EQ(left.apply(n), oracle::apply_chain({a, b, c}, n));
  }
}

TEST(Pinj, VonNeumannLaw) {
  gen::Rng rng(57);
  for (int k = 0; k < 300; ++k) {
    StructuredPinj a = gen::random_pinj(rng);
    ASSERT_TRUE(equals(compose(compose(a, invert_pinj(a)), a), a)) << format_pinj(a);
  }
}

TEST(Pinj, WitnessImagesKillRelatorInsertions) {
  gen::Rng rng(58);
  for (const char* relator : {"ab", "abab", "ababab", "abc"}) {
    Presentation P = cli::make_presentation({relator}, "");
    const Word& r = P.relators.front();
    for (const WitnessAssignment& A : builtin_witnesses(P)) {
      for (int k = 0; k < 30; ++k) {
        // Insert r at random positions, starting from the empty word.
        Word w;
        for (std::size_t i = 0, n = gen::uniform(rng, 1, 4); i < n; ++i) {
          std::size_t at = gen::uniform(rng, 0, w.size());
          w = w.prefix(at) * r * w.suffix(at);
        }
        ASSERT_TRUE(product_is_identity(A.evaluate(w))) << relator << " " << A.id << " " << format_word(w, P.alphabet);
      }
    }
  }
}
