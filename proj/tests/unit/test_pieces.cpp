#include <gtest/gtest.h>

#include <algorithm>

#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/error.hpp"
#include "sfinv/pieces.hpp"

using namespace sfinv;

namespace {

struct Expected {
  const char* relator;
  FVerdict verdict;
  std::vector<std::string> pieces;  // empty: no factorization reported
  bool group;
  const char* method;
};

const Expected cases[] = {
    {"ab", FVerdict::strongly_f_inverse, {"ab"}, false, "pieces"},
    {"abab", FVerdict::strongly_f_inverse, {"ab", "ab"}, false, "pieces"},
    {"ababab", FVerdict::strongly_f_inverse, {"ab", "ab", "ab"}, false, "pieces"},
    {"abababab", FVerdict::strongly_f_inverse, {"ab", "ab", "ab", "ab"}, false, "pieces"},
    {"abc", FVerdict::not_strongly_f_inverse, {"abc"}, false, "pieces"},
    {"abcabc", FVerdict::not_strongly_f_inverse, {}, false, "pieces"},
    {"aba", FVerdict::strongly_f_inverse, {}, true, "quick"},
    {"a", FVerdict::strongly_f_inverse, {}, true, "quick"},
    {"aa", FVerdict::strongly_f_inverse, {}, true, "quick"},
    {"aaa", FVerdict::strongly_f_inverse, {}, true, "quick"},
};

PieceContext context(const std::string& relator, StephenBudget budget = {}) {
  return PieceContext(cli::make_presentation({relator}, ""), budget);
}

std::vector<std::string> names(const std::vector<Word>& pieces, const Alphabet& a) {
  std::vector<std::string> out;
  for (const Word& p : pieces) out.push_back(format_word(p, a));
  return out;
}

}  // namespace

TEST(Pieces, KnownVerdicts) {
  for (const Expected& e : cases) {
    PieceContext ctx = context(e.relator);
    PieceReport r = analyze(ctx);
    EXPECT_EQ(r.verdict, e.verdict) << e.relator;
    EXPECT_EQ(r.group, e.group) << e.relator;
    EXPECT_EQ(r.method, e.method) << e.relator;
    if (!e.pieces.empty()) {
      ASSERT_TRUE(r.pieces.has_value()) << e.relator;
      EXPECT_EQ(names(*r.pieces, ctx.presentation().alphabet), e.pieces) << e.relator;
    }
    EXPECT_TRUE(cross_validate_against_linked(ctx)) << e.relator;
  }
}

TEST(Pieces, PositionStatusesOfAbab) {
  PieceContext ctx = context("abab");
  PositionStatus p1 = classify_prefix(ctx, 1);
  EXPECT_EQ(p1.kind, PositionKind::not_invertible_prefix);
  EXPECT_EQ(p1.right.verdict, Tri::yes);
  EXPECT_FALSE(p1.witness_id.empty());
  PositionStatus p2 = classify_prefix(ctx, 2);
  EXPECT_EQ(p2.kind, PositionKind::invertible_prefix);
  EXPECT_EQ(p2.left.verdict, Tri::yes);
  EXPECT_EQ(classify_prefix(ctx, 3).kind, PositionKind::not_invertible_prefix);
  EXPECT_THROW(classify_prefix(ctx, 0), InvalidArgument);
  EXPECT_THROW(classify_prefix(ctx, 4), InvalidArgument);
}

TEST(Pieces, TriangleHasOnePieceOfLengthThree) {
  PieceContext ctx = context("abc");
  PieceReport r = decide_strongly_f_inverse(ctx);
  EXPECT_EQ(r.verdict, FVerdict::not_strongly_f_inverse);
  for (const PositionStatus& s : r.statuses) EXPECT_EQ(s.kind, PositionKind::not_invertible_prefix);
}

TEST(Pieces, RejectsBadInput) {
  PieceContext bad = context("abB");
  EXPECT_THROW(decide_strongly_f_inverse(bad), InvalidArgument);
  PieceContext dyck = context("abBA");
  PieceReport r = analyze(dyck);
  EXPECT_EQ(r.method, "quick");
  EXPECT_EQ(r.verdict, FVerdict::strongly_f_inverse);
  PieceContext two(cli::make_presentation({"ab", "ba"}, ""), StephenBudget{});
  EXPECT_THROW(two.relator(), InvalidArgument);
}

TEST(Pieces, Linked) {
  PieceContext abab = context("abab");
  EXPECT_EQ(is_linked(abab).verdict, Tri::yes);
  PieceContext abc = context("abc");
  EXPECT_NE(is_linked(abc).verdict, Tri::yes);
}

TEST(Pieces, NoRoundsMeansNoFalseVerdicts) {
  for (const char* relator : {"abab", "abc", "ababab"}) {
    PieceContext ctx = context(relator, StephenBudget{0, default_vertex_budget});
    PieceReport r = decide_strongly_f_inverse(ctx);
    PieceContext full = context(relator);
    FVerdict truth = decide_strongly_f_inverse(full).verdict;
    if (r.verdict != FVerdict::unknown) EXPECT_EQ(r.verdict, truth) << relator;
    for (const PositionStatus& s : r.statuses) EXPECT_NE(s.kind, PositionKind::invertible_prefix) << relator;
  }
}

TEST(Pieces, FactorizationProperties) {
  gen::Rng rng(71);
  for (int k = 0; k < 150; ++k) {
    Word w = gen::random_cyclically_reduced(rng, 2, 2, 6);
    Alphabet ab("ab");
    PieceContext ctx(Presentation(ab, {w}), StephenBudget{3, 20000});
    PieceReport r = decide_strongly_f_inverse(ctx);
    ASSERT_EQ(r.statuses.size(), w.size() - 1);
    if (r.pieces) {
      Word joined;
      for (const Word& p : *r.pieces) joined = joined * p;
      ASSERT_EQ(joined, w) << format_word(w, ab);
      // Cuts sit exactly at the certified invertible prefixes.
      std::size_t at = 0;
      for (std::size_t i = 0; i + 1 < r.pieces->size(); ++i) {
        at += (*r.pieces)[i].size();
        ASSERT_EQ(r.statuses[at - 1].kind, PositionKind::invertible_prefix);
      }
      bool short_pieces = std::all_of(r.pieces->begin(), r.pieces->end(), [](const Word& p) { return p.size() <= 2; });
      if (r.verdict == FVerdict::strongly_f_inverse) ASSERT_TRUE(short_pieces) << format_word(w, ab);
      if (r.verdict == FVerdict::not_strongly_f_inverse) ASSERT_FALSE(short_pieces) << format_word(w, ab);
    }
    ASSERT_TRUE(cross_validate_against_linked(ctx)) << format_word(w, ab);
  }
}

TEST(Pieces, CertificatesBehindEveryStatus) {
  for (const char* relator : {"ab", "abab", "ababab", "abc", "abcabc", "aab", "abAB"}) {
    PieceContext ctx = context(relator);
    PieceReport r = decide_strongly_f_inverse(ctx);
    for (const PositionStatus& s : r.statuses) {
      if (s.kind == PositionKind::invertible_prefix) {
        EXPECT_EQ(s.right.verdict, Tri::yes) << relator << " " << s.position;
        EXPECT_EQ(s.left.verdict, Tri::yes) << relator << " " << s.position;
      }
      if (s.kind == PositionKind::not_invertible_prefix) EXPECT_FALSE(s.witness_id.empty()) << relator;
    }
  }
}

TEST(Pieces, LargerBudgetsNeverFlipCertifiedVerdicts) {
  for (const char* relator : {"abab", "abc", "ababab", "aab", "abAB", "abcabc"}) {
    std::optional<FVerdict> certified;
    for (std::size_t rounds = 0; rounds <= 5; ++rounds) {
      PieceContext ctx = context(relator, StephenBudget{rounds, default_vertex_budget});
      FVerdict v = decide_strongly_f_inverse(ctx).verdict;
      if (v == FVerdict::unknown) {
        EXPECT_FALSE(certified.has_value()) << relator << " lost its verdict at rounds=" << rounds;
        continue;
      }
      if (certified) EXPECT_EQ(v, *certified) << relator << " rounds=" << rounds;
      certified = v;
    }
  }
}

TEST(Pieces, ShortPiecesMakeConjugateSplitsInverse) {
  for (const char* relator : {"ab", "abab", "ababab"}) {
    PieceContext ctx = context(relator);
    ASSERT_EQ(decide_strongly_f_inverse(ctx).verdict, FVerdict::strongly_f_inverse);
    const Presentation& P = ctx.presentation();
    for (const Word& c : cyclic_conjugates(P.relators.front())) {
      for (const auto& [u, v] : splits(c)) {
        EXPECT_EQ(certify_equal(P, u, invert(v)).verdict, Tri::yes)
            << relator << ": " << format_word(u, P.alphabet) << " = (" << format_word(v, P.alphabet) << ")^-1";
      }
    }
  }
}
