#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sfinv/cayley.hpp"
#include "sfinv/expansion.hpp"
#include "sfinv/stephen.hpp"

namespace sfinv::cli {

struct WitnessSource {
  std::string id;
  std::string text;
};

struct BatteryConfig {
  StephenBudget stephen{};
  SearchBudget search{};
  std::size_t slot_cap = default_slot_cap;
  std::size_t closure_budget = CyclicClosure::default_budget;
  std::uint64_t seed = 0x5f1e7a11;
  /// Attached to every battery presentation whose alphabet they parse over.
  std::vector<WitnessSource> witnesses;
  /// Registered without relator validation (fault injection).
  std::vector<WitnessSource> unchecked_witnesses;

  std::size_t random_triples = 10000;
  std::size_t random_composites = 1000;
  std::size_t merge_orders = 1000;
  std::size_t fuzzed_prefixes = 1000;
  std::size_t random_subgraphs = 1000;
};

struct CaseResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0;
  bool soundness_violation = false;
};

struct CriterionSummary {
  int id = 0;
  std::string title;
  bool pass = true;
  std::size_t cases = 0;
  std::size_t failed = 0;
  double elapsed_ms = 0;
};

struct BatteryReport {
  std::vector<CaseResult> cases;
  std::vector<CriterionSummary> criteria;
  bool all_passed = true;
  bool soundness_violation = false;
};

/// (id, title) for criteria 1..9, in order.
const std::vector<std::pair<int, std::string>>& criterion_titles();

/// Runs the selected criteria (all when `only` is empty) in a fixed order.
/// `progress` sees every case as it completes.
BatteryReport run_battery(const BatteryConfig& config, const std::vector<int>& only = {},
                          const std::function<void(const CaseResult&)>& progress = {});

}  // namespace sfinv::cli
