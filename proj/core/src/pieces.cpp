#include "sfinv/pieces.hpp"

#include <algorithm>
#include <set>

#include "sfinv/error.hpp"

namespace sfinv {

const char* to_string(PositionKind k) {
  switch (k) {
    case PositionKind::invertible_prefix:
      return "invertible";
    case PositionKind::not_invertible_prefix:
      return "not-invertible";
    case PositionKind::unknown:
      break;
  }
  return "unknown";
}

const char* to_string(FVerdict v) {
  switch (v) {
    case FVerdict::strongly_f_inverse:
      return "StronglyFInverse";
    case FVerdict::not_strongly_f_inverse:
      return "NotStronglyFInverse";
    case FVerdict::unknown:
      break;
  }
  return "Unknown";
}

PieceContext::PieceContext(Presentation P, StephenBudget budget, std::vector<WitnessAssignment> user_witnesses,
                           bool include_builtin, bool unchecked)
    : P_(std::move(P)), budget_(budget) {
  for (auto& A : user_witnesses) {
    if (unchecked) {
      notes_.push_back("witness " + A.id + " registered without relator validation");
      witnesses_.push_back(std::move(A));
    } else if (validate_witness(P_, A)) {
      for (const auto& w : A.warnings) notes_.push_back("witness " + A.id + ": " + w);
      witnesses_.push_back(std::move(A));
    } else {
      notes_.push_back("witness " + A.id + " rejected: a relator does not evaluate to the identity");
    }
  }
  if (include_builtin) {
    for (auto& A : builtin_witnesses(P_)) witnesses_.push_back(std::move(A));
  }
}

const Word& PieceContext::relator() const {
  if (P_.relators.size() != 1) throw InvalidArgument("piece factorization needs exactly one relator");
  return P_.relators.front();
}

ApproximantSequence& PieceContext::approximant_of(const Word& w) {
  auto& slot = approximants_[w];
  if (!slot) slot = std::make_unique<ApproximantSequence>(P_, w, budget_.vertex_budget);
  return *slot;
}

namespace {

void require_cyclically_reduced(const Word& w, const Alphabet& alphabet) {
  if (is_cyclically_reduced(w)) return;
  std::string msg = "relator " + format_word(w, alphabet) + " is not cyclically reduced";
  if (is_dyck(w)) msg += "; it is a Dyck word, so use the quick verdict path (pieces decide)";
  throw InvalidArgument(msg);
}

}  // namespace

PositionStatus classify_prefix(PieceContext& ctx, std::size_t j) {
  const Word& w = ctx.relator();
  require_cyclically_reduced(w, ctx.presentation().alphabet);
  if (j < 1 || j >= w.size()) throw InvalidArgument("prefix position out of range");
  Word p = w.prefix(j);
  PositionStatus status;
  status.position = j;
  auto& of_one = ctx.approximant_of(Word{});
  status.right = certify_right_invertible(of_one, p, ctx.budget().rounds);
  status.left = certify_right_invertible(of_one, invert(p), ctx.budget().rounds);

  for (const auto& A : ctx.witnesses()) {
    bool not_left = certify_non_left_invertible(A, p);
    bool not_right = certify_non_right_invertible(A, p);
    if ((not_left && status.left.verdict == Tri::yes) || (not_right && status.right.verdict == Tri::yes)) {
      throw SoundnessViolation("prefix " + format_word(p, ctx.presentation().alphabet) +
                               " is Stephen-certified invertible but witness " + A.id + " says otherwise");
    }
    if ((not_left || not_right) && status.witness_id.empty()) status.witness_id = A.id;
  }

  if (status.right.verdict == Tri::yes && status.left.verdict == Tri::yes) {
    status.kind = PositionKind::invertible_prefix;
  } else if (!status.witness_id.empty()) {
    status.kind = PositionKind::not_invertible_prefix;
  } else if (status.right.verdict == Tri::no || status.left.verdict == Tri::no) {
    // The approximant of 1 reached a fixpoint, so it is exact.
    status.kind = PositionKind::not_invertible_prefix;
    status.witness_id = "stephen-fixpoint";
  }
  return status;
}

namespace {

bool uses_every_generator(const Word& w, const Alphabet& alphabet) {
  std::set<std::uint32_t> seen;
  for (const Letter& x : w) seen.insert(x.generator);
  return seen.size() == alphabet.size();
}

void fill_pieces(PieceReport& report) {
  std::vector<Word> pieces;
  std::size_t start = 0;
  for (const auto& s : report.statuses) {
    if (s.kind == PositionKind::invertible_prefix) {
      pieces.push_back(report.word.subword(start, s.position - start));
      start = s.position;
    }
  }
  pieces.push_back(report.word.suffix(start));
  report.pieces = std::move(pieces);
}

}  // namespace

PieceReport factorize(PieceContext& ctx) {
  PieceReport report;
  report.word = ctx.relator();
  require_cyclically_reduced(report.word, ctx.presentation().alphabet);
  bool decided = true;
  for (std::size_t j = 1; j < report.word.size(); ++j) {
    report.statuses.push_back(classify_prefix(ctx, j));
    decided = decided && report.statuses.back().kind != PositionKind::unknown;
  }
  if (decided) fill_pieces(report);
  for (const auto& note : ctx.notes()) report.reasons.push_back(note);
  return report;
}

PieceReport decide_strongly_f_inverse(PieceContext& ctx) {
  PieceReport report = factorize(ctx);
  const Alphabet& alphabet = ctx.presentation().alphabet;
  const std::size_t n = report.word.size();
  if (report.pieces) {
    auto longest = std::max_element(report.pieces->begin(), report.pieces->end(),
                                    [](const Word& a, const Word& b) { return a.size() < b.size(); });
    if (longest->size() <= 2) {
      report.verdict = FVerdict::strongly_f_inverse;
      report.group = longest->size() == 1 && uses_every_generator(report.word, alphabet);
      report.reasons.push_back("every minimal invertible piece has length at most two");
    } else {
      report.verdict = FVerdict::not_strongly_f_inverse;
      report.reasons.push_back("piece " + format_word(*longest, alphabet) + " has length " +
                               std::to_string(longest->size()));
    }
    return report;
  }
  // Partial information: look for a certified piece of length at least 3.
  std::vector<std::size_t> boundaries{0};
  for (const auto& s : report.statuses) {
    if (s.kind == PositionKind::invertible_prefix) boundaries.push_back(s.position);
  }
  boundaries.push_back(n);
  for (std::size_t b = 0; b + 1 < boundaries.size(); ++b) {
    std::size_t j = boundaries[b];
    std::size_t k = boundaries[b + 1];
    if (k - j < 3) continue;
    bool interior_certified = true;
    for (std::size_t i = j + 1; i < k; ++i) {
      interior_certified = interior_certified && report.statuses[i - 1].kind == PositionKind::not_invertible_prefix;
    }
    if (interior_certified) {
      report.verdict = FVerdict::not_strongly_f_inverse;
      report.reasons.push_back("certified piece " + format_word(report.word.subword(j, k - j), alphabet) +
                               " has length " + std::to_string(k - j));
      return report;
    }
  }
  report.reasons.push_back("some cut positions are undecided within the budget");
  return report;
}

LinkedReport is_linked(PieceContext& ctx) {
  const Word& w = ctx.relator();
  const Alphabet& alphabet = ctx.presentation().alphabet;
  LinkedReport report;
  bool all_yes = true;
  bool any_no = false;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    Word a{w[j]};
    Word b{w[j + 1]};
    std::string pair = format_word(a, alphabet) + "," + format_word(b, alphabet);
    std::string refuter;
    for (const auto& A : ctx.witnesses()) {
      if (certify_idempotents_differ(A, a, b)) {
        refuter = A.id;
        break;
      }
    }
    Word r = invert(a) * a;
    Word d = b * invert(b);
    Certificate up = certify_leq(ctx.approximant_of(d), r, ctx.budget().rounds);
    Certificate down = certify_leq(ctx.approximant_of(r), d, ctx.budget().rounds);
    bool equal = up.verdict == Tri::yes && down.verdict == Tri::yes;
    if (equal && !refuter.empty()) {
      throw SoundnessViolation("pair " + pair + " is Stephen-certified matching but witness " + refuter +
                               " separates it");
    }
    if (equal) {
      report.reasons.push_back("pair " + pair + " matches (stage " + std::to_string(std::max(up.stage, down.stage)) +
                               ")");
    } else if (!refuter.empty()) {
      any_no = true;
      all_yes = false;
      report.reasons.push_back("pair " + pair + " does not match (witness " + refuter + ")");
    } else if (up.verdict == Tri::no || down.verdict == Tri::no) {
      any_no = true;
      all_yes = false;
      report.reasons.push_back("pair " + pair + " does not match (exact approximant)");
    } else {
      all_yes = false;
      report.reasons.push_back("pair " + pair + " undecided");
    }
  }
  report.verdict = any_no ? Tri::no : all_yes ? Tri::yes : Tri::unknown;
  return report;
}

std::optional<PieceReport> quick_verdicts(PieceContext& ctx) {
  const Word& w = ctx.relator();
  const Alphabet& alphabet = ctx.presentation().alphabet;
  PieceReport report;
  report.word = w;
  report.method = "quick";
  if (alphabet.size() == 1 && std::all_of(w.begin(), w.end(), [&](const Letter& x) { return x == w.front(); })) {
    report.verdict = FVerdict::strongly_f_inverse;
    report.group = true;
    report.reasons.push_back("single generator, relator is a power: the monoid is the cyclic group of order " +
                             std::to_string(w.size()));
    return report;
  }
  if (is_dyck(w)) {
    report.verdict = FVerdict::strongly_f_inverse;
    report.reasons.push_back("relator is a Dyck word");
    return report;
  }
  if (!is_cyclically_reduced(w)) return std::nullopt;
  std::set<std::uint32_t> generators;
  for (const Letter& x : w) generators.insert(x.generator);
  auto& of_one = ctx.approximant_of(Word{});
  const std::size_t rounds = std::min<std::size_t>(quick_stage_limit, ctx.budget().rounds);
  for (auto g : generators) {
    if (certify_invertible(of_one, Word{Letter{g, false}}, rounds).verdict != Tri::yes) return std::nullopt;
  }
  report.verdict = FVerdict::strongly_f_inverse;
  report.group = generators.size() == alphabet.size();
  report.reasons.push_back("every letter of the relator is invertible");
  return report;
}

PieceReport analyze(PieceContext& ctx) {
  if (auto quick = quick_verdicts(ctx)) return *quick;
  return decide_strongly_f_inverse(ctx);
}

bool cross_validate_against_linked(PieceContext& ctx) {
  if (!is_cyclically_reduced(ctx.relator())) return true;
  PieceReport decided = decide_strongly_f_inverse(ctx);
  if (decided.verdict == FVerdict::unknown) return true;
  LinkedReport linked = is_linked(ctx);
  if (linked.verdict == Tri::unknown) return true;
  return (decided.verdict == FVerdict::strongly_f_inverse) == (linked.verdict == Tri::yes);
}

}  // namespace sfinv
