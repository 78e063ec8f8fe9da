#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfinv/stephen.hpp"
#include "sfinv/witness.hpp"

namespace sfinv {

enum class PositionKind { invertible_prefix, not_invertible_prefix, unknown };
const char* to_string(PositionKind k);

/// Status of the cut after the first `position` letters of the relator.
struct PositionStatus {
  std::size_t position = 0;
  PositionKind kind = PositionKind::unknown;
  Certificate right;  // prefix right invertible
  Certificate left;   // prefix left invertible (inverse right invertible)
  std::string witness_id;
};

enum class FVerdict { strongly_f_inverse, not_strongly_f_inverse, unknown };
const char* to_string(FVerdict v);

struct PieceReport {
  Word word;
  std::vector<PositionStatus> statuses;
  std::optional<std::vector<Word>> pieces;
  FVerdict verdict = FVerdict::unknown;
  bool group = false;
  /// "pieces" for the factorization procedure, "quick" for syntactic shortcuts.
  std::string method = "pieces";
  std::vector<std::string> reasons;
};

struct LinkedReport {
  Tri verdict = Tri::unknown;
  std::vector<std::string> reasons;
};

/// Shared state for piece computations on one presentation: budgets, the
/// witness registry, and cached Stephen approximants.
class PieceContext {
 public:
  /// User witnesses are validated against P unless `unchecked`; invalid
  /// ones are dropped with a note. Built-ins are added when requested.
  PieceContext(Presentation P, StephenBudget budget, std::vector<WitnessAssignment> user_witnesses = {},
               bool include_builtin = true, bool unchecked = false);

  const Presentation& presentation() const { return P_; }
  /// The single relator; throws InvalidArgument for multi-relator input.
  const Word& relator() const;
  const StephenBudget& budget() const { return budget_; }
  const std::vector<WitnessAssignment>& witnesses() const { return witnesses_; }
  const std::vector<std::string>& notes() const { return notes_; }
  ApproximantSequence& approximant_of(const Word& w);

 private:
  Presentation P_;
  StephenBudget budget_;
  std::vector<WitnessAssignment> witnesses_;
  std::vector<std::string> notes_;
  std::map<Word, std::unique_ptr<ApproximantSequence>> approximants_;
};

/// 1 ≤ j ≤ |w|-1; w must be cyclically reduced. Throws SoundnessViolation
/// when a Stephen certificate and a witness contradict each other.
PositionStatus classify_prefix(PieceContext& ctx, std::size_t j);
/// Cuts at every certified invertible prefix.
PieceReport factorize(PieceContext& ctx);
PieceReport decide_strongly_f_inverse(PieceContext& ctx);
/// r(a_j) = d(a_{j+1}) for adjacent letters.
LinkedReport is_linked(PieceContext& ctx);
/// Stage bound for the "every letter invertible" shortcut. In aba = 1 the
/// letter b first reads from the base at stage 2.
constexpr std::size_t quick_stage_limit = 2;

/// Syntactic shortcuts: a single generator with relator a^k, a Dyck relator,
/// or every letter invertible at a small stage.
std::optional<PieceReport> quick_verdicts(PieceContext& ctx);
/// quick_verdicts, falling back to decide_strongly_f_inverse.
PieceReport analyze(PieceContext& ctx);
/// Certified verdicts of the two procedures agree (vacuous when either is
/// unknown).
bool cross_validate_against_linked(PieceContext& ctx);

}  // namespace sfinv
