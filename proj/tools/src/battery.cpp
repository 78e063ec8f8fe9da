#include "sfinv/cli/battery.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/cli/oracles.hpp"
#include "sfinv/error.hpp"
#include "sfinv/msf.hpp"
#include "sfinv/pieces.hpp"
#include "sfinv/witness.hpp"

namespace sfinv::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct NamedGroup {
  std::string name;
  std::string description;
};

// The verification battery: Z₂, Z₃, Z₄ on one generator, Z₂×Z₂ and S₃ on two.
const std::vector<NamedGroup>& verification_groups() {
  static const std::vector<NamedGroup> groups = {
      {"Z2", "cyclic 2 a"},
      {"Z3", "cyclic 3 a"},
      {"Z4", "cyclic 4 a"},
      {"Z2xZ2", "perm a:(0 1) b:(2 3)"},
      {"S3", "perm a:(0 1 2) b:(0 1)"},
  };
  return groups;
}

std::vector<NamedGroup> groups_with_trivial() {
  std::vector<NamedGroup> all{{"trivial", "cyclic 1 a"}};
  for (const auto& g : verification_groups()) all.push_back(g);
  return all;
}

struct PieceCase {
  std::string relator;
  FVerdict verdict;
  std::optional<std::vector<std::string>> pieces;
  std::optional<bool> group;
  std::string method;
  std::string note;
};

const std::vector<PieceCase>& piece_cases() {
  static const std::vector<PieceCase> cases = {
      {"ab", FVerdict::strongly_f_inverse, std::vector<std::string>{"ab"}, false, "pieces", ""},
      {"abab", FVerdict::strongly_f_inverse, std::vector<std::string>{"ab", "ab"}, false, "pieces", ""},
      {"ababab", FVerdict::strongly_f_inverse, std::vector<std::string>{"ab", "ab", "ab"}, false, "pieces", ""},
      {"abababab", FVerdict::strongly_f_inverse, std::vector<std::string>{"ab", "ab", "ab", "ab"}, false, "pieces",
       ""},
      {"abc", FVerdict::not_strongly_f_inverse, std::vector<std::string>{"abc"}, false, "pieces",
       "F-inverse by theory (not computed)"},
      {"aba", FVerdict::strongly_f_inverse, std::nullopt, true, "", ""},
      {"abcabc", FVerdict::not_strongly_f_inverse, std::nullopt, false, "pieces",
       "F-inverse by theory (not computed)"},
      {"a", FVerdict::strongly_f_inverse, std::nullopt, true, "quick", "cyclic group Z1"},
      {"aa", FVerdict::strongly_f_inverse, std::nullopt, true, "quick", "cyclic group Z2"},
      {"aaa", FVerdict::strongly_f_inverse, std::nullopt, true, "quick", "cyclic group Z3"},
      {"abBA", FVerdict::strongly_f_inverse, std::nullopt, std::nullopt, "quick", "Dyck relator"},
  };
  return cases;
}

// Relators whose proper prefixes must be right invertible at stage <= 2.
std::vector<std::string> stephen_relators() {
  std::vector<std::string> out;
  for (const auto& c : piece_cases()) out.push_back(c.relator);
  out.push_back("bcBaDA");
  return out;
}

std::string join_words(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::string out = "[";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += format_word(words[i], alphabet);
  }
  return out + "]";
}

class Runner {
 public:
  Runner(const BatteryConfig& config, const std::function<void(const CaseResult&)>& progress)
      : config_(config), progress_(progress), rng_(config.seed) {}

  BatteryReport report;

  void run(int criterion) {
    switch (criterion) {
      case 1: return criterion_pre1();
      case 2: return criterion_iso();
      case 3: return criterion_expansion();
      case 4: return criterion_f_inverse();
      case 5: return criterion_pieces();
      case 6: return criterion_witnesses();
      case 7: return criterion_stephen();
      case 8: return criterion_soundness();
      case 9: return criterion_closure();
      default: throw InvalidArgument("no criterion " + std::to_string(criterion));
    }
  }

 private:
  // Runs one case; the body returns an empty string on success, otherwise
  // the failure detail. `info` receives extra detail either way.
  template <typename Body>
  void check(int criterion, std::string name, Body body) {
    CaseResult c;
    c.criterion = criterion;
    c.name = std::move(name);
    auto start = Clock::now();
    std::string info;
    try {
      std::string failure = body(info);
      c.pass = failure.empty();
      c.detail = c.pass ? info : failure;
    } catch (const SoundnessViolation& e) {
      c.pass = false;
      c.soundness_violation = true;
      c.detail = std::string("soundness violation: ") + e.what();
    } catch (const Error& e) {
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    c.elapsed_ms = ms_since(start);
    if (progress_) progress_(c);
    report.cases.push_back(std::move(c));
  }

  VerifyOptions verify_options() const { return {config_.slot_cap, config_.search, config_.closure_budget}; }

  std::vector<WitnessAssignment> user_witnesses(const Presentation& P) const {
    std::vector<WitnessAssignment> out;
    for (const auto& src : config_.witnesses) {
      try {
        WitnessAssignment A = parse_witness(src.text, P.alphabet, src.id);
        if (validate_witness(P, A)) out.push_back(std::move(A));
      } catch (const Error&) {
        // Written for another alphabet.
      }
    }
    for (const auto& src : config_.unchecked_witnesses) {
      try {
        out.push_back(parse_witness(src.text, P.alphabet, src.id));
      } catch (const Error&) {
      }
    }
    return out;
  }

  std::unique_ptr<PieceContext> context(const Presentation& P, StephenBudget budget) const {
    return std::make_unique<PieceContext>(P, budget, user_witnesses(P), true, true);
  }

  void criterion_pre1() {
    for (const auto& g : verification_groups()) {
      check(1, "pre1 " + g.name, [&](std::string& info) -> std::string {
        FiniteGroup G = parse_group(g.description);
        auto start = Clock::now();
        Pre1Report r = verify_pre1(G, verify_options());
        double ms = ms_since(start);
        info = "|M|=" + std::to_string(r.mm_size) + " |M/xi|=" + std::to_string(r.xi_classes) +
               " theta pairs=" + std::to_string(r.theta_pair_count);
        if (r.verdict != Tri::yes) return std::string("verdict ") + to_string(r.verdict) + ": " + r.detail;
        if (ms >= 10000) return "took " + std::to_string(ms) + " ms (limit 10000)";
        return "";
      });
    }
  }

  void criterion_iso() {
    for (const auto& g : verification_groups()) {
      check(2, "S-circ isomorphism " + g.name, [&](std::string& info) -> std::string {
        IsoReport r = verify_s_circ_iso(parse_group(g.description), verify_options());
        info = "|M/xi|=" + std::to_string(r.xi_classes) + " |S|=" + std::to_string(r.s_circ_size);
        if (r.verdict != Tri::yes) return std::string("verdict ") + to_string(r.verdict) + ": " + r.detail;
        return "";
      });
    }
    const std::map<std::string, std::size_t> expected = {{"trivial", 2}, {"Z2", 3}, {"Z3", 4}};
    for (const auto& g : groups_with_trivial()) {
      check(2, "S-circ size " + g.name, [&](std::string& info) -> std::string {
        FiniteGroup G = parse_group(g.description);
        CyclicClosure closure(G, config_.closure_budget);
        std::size_t size = enumerate_msf(closure, config_.slot_cap).size();
        std::size_t oracle = oracle::count_s_circ(G);
        info = "size " + std::to_string(size);
        if (size != oracle) return "enumerated " + std::to_string(size) + ", oracle " + std::to_string(oracle);
        if (auto it = expected.find(g.name); it != expected.end() && size != it->second) {
          return "size " + std::to_string(size) + ", expected " + std::to_string(it->second);
        }
        return "";
      });
    }
  }

  void criterion_expansion() {
    struct SizeCase {
      NamedGroup group;
      std::size_t expected;
    };
    for (const auto& sc : {SizeCase{{"Z2", "cyclic 2 a"}, 7}, SizeCase{{"Z3", "cyclic 3 a"}, 17}}) {
      check(3, "expansion size " + sc.group.name, [&](std::string& info) -> std::string {
        FiniteGroup G = parse_group(sc.group.description);
        const std::size_t expected = sc.expected;
        std::size_t size = enumerate_mm(G, config_.slot_cap).size();
        std::size_t oracle = oracle::count_mm(G);
        info = "size " + std::to_string(size);
        if (size != oracle) return "enumerated " + std::to_string(size) + ", oracle " + std::to_string(oracle);
        if (size != expected) return "size " + std::to_string(size) + ", expected " + std::to_string(expected);
        return "";
      });
    }
    for (const auto& g : {NamedGroup{"Z3", "cyclic 3 a"}, NamedGroup{"Z2xZ2", "perm a:(0 1) b:(2 3)"}}) {
      check(3, "inverse monoid axioms " + g.name, [&](std::string& info) -> std::string {
        FiniteGroup G = parse_group(g.description);
        FiniteInverseMonoid M = enumerate_mm(G, config_.slot_cap);
        using Index = FiniteInverseMonoid::Index;
        auto pick = [&] { return static_cast<Index>(gen::uniform(rng_, 0, M.size() - 1)); };
        for (std::size_t k = 0; k < config_.random_triples; ++k) {
          Index s = pick(), t = pick(), u = pick();
          auto mul = [&](Index x, Index y) { return M.multiply(x, y); };
          auto fail = [&](const char* law) {
            return std::string(law) + " fails at (" + M.key(s) + ", " + M.key(t) + ", " + M.key(u) + ")";
          };
          if (mul(mul(s, t), u) != mul(s, mul(t, u))) return fail("associativity");
          if (mul(mul(s, M.inverse(s)), s) != s) return fail("s s^-1 s = s");
          if (M.inverse(M.inverse(s)) != s) return fail("involution");
          if (M.inverse(mul(s, t)) != mul(M.inverse(t), M.inverse(s))) return fail("(st)^-1 = t^-1 s^-1");
          Index e = mul(s, M.inverse(s)), f = mul(t, M.inverse(t));
          if (mul(e, f) != mul(f, e)) return fail("idempotents commute");
          MMElement ds = mm_element_of(G, M, s), dt = mm_element_of(G, M, t);
          if (mm_key(G, mm_multiply(G, ds, dt)) != M.key(mul(s, t))) return fail("table agrees with (D,g)(E,h)");
          if (M.natural_leq(s, t) != mm_natural_leq(ds, dt)) return fail("natural order is reverse inclusion");
        }
        info = std::to_string(config_.random_triples) + " triples over " + std::to_string(M.size()) + " elements";
        return "";
      });
    }
  }

  void criterion_f_inverse() {
    check(4, "M(Z2) not F-inverse", [&](std::string&) -> std::string {
      if (is_F_inverse(enumerate_mm(parse_group("cyclic 2 a"), config_.slot_cap))) return "reported F-inverse";
      return "";
    });
    for (const auto& g : groups_with_trivial()) {
      check(4, "MsF strongly F-inverse " + g.name, [&](std::string&) -> std::string {
        FiniteGroup G = parse_group(g.description);
        CyclicClosure closure(G, config_.closure_budget);
        FiniteInverseMonoid S = enumerate_msf(closure, config_.slot_cap);
        if (!is_F_inverse(S)) return "not F-inverse";
        StronglyFReport r = is_strongly_F_inverse_quotient(S, G, config_.search.max_extensions);
        if (r.verdict != Tri::yes) return std::string("strongly F-inverse: ") + to_string(r.verdict) + " " + r.detail;
        return "";
      });
    }
  }

  void criterion_pieces() {
    auto start = Clock::now();
    for (const auto& pc : piece_cases()) {
      check(5, "pieces " + pc.relator, [&](std::string& info) -> std::string {
        Presentation P = make_presentation({pc.relator}, "");
        auto ctx = context(P, config_.stephen);
        PieceReport r = analyze(*ctx);
        info = std::string(to_string(r.verdict)) + " via " + r.method;
        if (r.pieces) info += " pieces " + join_words(*r.pieces, P.alphabet);
        if (!pc.note.empty()) info += " (" + pc.note + ")";
        if (r.verdict == FVerdict::unknown) return "lost certification: verdict Unknown";
        if (r.verdict != pc.verdict) return "verdict " + std::string(to_string(r.verdict));
        if (!pc.method.empty() && r.method != pc.method) return "decided via " + r.method + ", expected " + pc.method;
        if (pc.group && r.group != *pc.group) return std::string("group flag ") + (r.group ? "true" : "false");
        if (pc.pieces) {
          if (!r.pieces) return "no full factorization";
          std::vector<std::string> got;
          for (const auto& p : *r.pieces) got.push_back(format_word(p, P.alphabet));
          if (got != *pc.pieces) return "pieces " + join_words(*r.pieces, P.alphabet);
        }
        for (const auto& s : r.statuses) {
          if (s.kind == PositionKind::unknown) return "position " + std::to_string(s.position) + " not certified";
        }
        return "";
      });
    }
    double total = ms_since(start);
    check(5, "piece battery time", [&](std::string& info) -> std::string {
      info = std::to_string(static_cast<long>(total)) + " ms";
      if (total >= 30000) return "took " + std::to_string(total) + " ms (limit 30000)";
      return "";
    });
  }

  void criterion_witnesses() {
    check(6, "a c a^-1 is the identity", [&](std::string&) -> std::string {
      StructuredPinj a = doubling_map();
      StructuredPinj x = compose(compose(a, even_or_one_identity()), invert_pinj(a));
      if (!is_identity(x)) return "got " + format_pinj(x);
      return "";
    });
    for (int n : {2, 3, 5}) {
      std::string relator;
      for (int k = 0; k < n; ++k) relator += "ab";
      check(6, "(ab)^" + std::to_string(n) + " product witness", [&](std::string& info) -> std::string {
        Presentation P = make_presentation({relator}, "");
        for (const auto& A : builtin_witnesses(P)) {
          if (A.id.rfind("shift-zmod", 0) != 0) continue;
          info = A.id;
          if (!check_relators(P, A)) return A.id + " does not satisfy the relator";
          return "";
        }
        return "no shift x cyclic witness registered";
      });
    }
    check(6, "r(a) differs from d(c)", [&](std::string&) -> std::string {
      if (equals(range_idempotent(doubling_map()), domain_idempotent(even_or_one_identity()))) return "equal";
      return "";
    });
    check(6, "symbolic vs pointwise composites", [&](std::string& info) -> std::string {
      const std::vector<StructuredPinj> named = {doubling_map(), even_or_one_identity(), successor_map(),
                                                 invert_pinj(doubling_map()), invert_pinj(successor_map())};
      for (std::size_t k = 0; k < config_.random_composites; ++k) {
        std::vector<StructuredPinj> chain;
        for (std::size_t len = gen::uniform(rng_, 2, 4); len > 0; --len) {
          StructuredPinj x = gen::uniform(rng_, 0, 2) == 0 ? named[gen::uniform(rng_, 0, named.size() - 1)]
                                                           : gen::random_pinj(rng_);
          if (gen::uniform(rng_, 0, 3) == 0) x = invert_pinj(x);
          chain.push_back(std::move(x));
        }
        StructuredPinj composite = chain.front();
        for (std::size_t i = 1; i < chain.size(); ++i) composite = compose(composite, chain[i]);
        StructuredPinj back = invert_pinj(composite);
        StructuredPinj dom = domain_idempotent(composite);
        for (long n = 0; n <= 1000; ++n) {
          auto expected = oracle::apply_chain(chain, n);
          auto got = composite.apply(n);
          if (expected != got) return "composite " + std::to_string(k) + " differs at n=" + std::to_string(n);
          if (expected && back.apply(*expected) != Integer(n)) {
            return "inverse of composite " + std::to_string(k) + " differs at n=" + std::to_string(n);
          }
          if (dom.apply(n) != (expected ? std::optional<Integer>(n) : std::nullopt)) {
            return "domain idempotent of composite " + std::to_string(k) + " differs at n=" + std::to_string(n);
          }
        }
      }
      info = std::to_string(config_.random_composites) + " composites on [0,1000]";
      return "";
    });
  }

  std::size_t certificate_rounds() const { return std::min<std::size_t>(2, config_.stephen.rounds); }

  std::string certificate_failure(const Certificate& c) const {
    if (c.verdict == Tri::yes) return "";
    return std::string("lost certification: verdict ") + to_string(c.verdict) + " after stage " +
           std::to_string(c.stage) + (c.budget_exhausted ? " (vertex budget exhausted)" : "");
  }

  StephenBudget budget_with_rounds(std::size_t rounds) const { return {rounds, config_.stephen.vertex_budget}; }

  void criterion_stephen() {
    for (const auto& r : stephen_relators()) {
      check(7, "prefixes of " + r + " right invertible", [&](std::string& info) -> std::string {
        Presentation P = make_presentation({r}, "");
        ApproximantSequence of_one(P, Word{}, config_.stephen.vertex_budget);
        const Word& w = P.relators.front();
        std::size_t worst = 0;
        for (std::size_t j = 1; j < w.size(); ++j) {
          Certificate c = certify_right_invertible(of_one, w.prefix(j), certificate_rounds());
          if (auto f = certificate_failure(c); !f.empty()) return format_word(w.prefix(j), P.alphabet) + ": " + f;
          worst = std::max(worst, c.stage);
        }
        info = "max stage " + std::to_string(worst);
        return "";
      });
    }
    Presentation abc = make_presentation({"abc"}, "");
    auto word = [](const Presentation& P, const std::string& text) { return parse_word(text, P.alphabet); };
    for (const auto& uv : {std::pair<std::string, std::string>{"A", "bc"}, {"C", "ab"}}) {
      check(7, "abc=1: " + uv.first + " = " + uv.second, [&](std::string& info) -> std::string {
        Certificate c = certify_equal(abc, word(abc, uv.first), word(abc, uv.second), config_.stephen);
        info = "stage " + std::to_string(c.stage);
        return certificate_failure(c);
      });
    }
    check(7, "abc=1: AC <= b", [&](std::string& info) -> std::string {
      Certificate c = certify_leq(abc, word(abc, "b"), word(abc, "AC"), config_.stephen);
      info = "stage " + std::to_string(c.stage);
      return certificate_failure(c);
    });
    Presentation chain = make_presentation({"bcBaDA"}, "");
    for (std::size_t k = 0; k <= 3; ++k) {
      // c^j b^-1 a d^-j
      auto chain_word = [&](std::size_t j) { return word(chain, std::string(j, 'c') + "Ba" + std::string(j, 'D')); };
      check(7, "bcBaDA=1: chain step k=" + std::to_string(k), [&](std::string& info) -> std::string {
        Certificate c = certify_leq(chain, chain_word(k + 1), chain_word(k), config_.stephen);
        info = "stage " + std::to_string(c.stage) + " (strictness not certified)";
        return certificate_failure(c);
      });
    }
    check(7, "fold confluence", [&](std::string& info) -> std::string {
      const std::size_t per_graph = 20;
      std::size_t orders = 0;
      while (orders < config_.merge_orders) {
        std::size_t letters = 2 * gen::uniform(rng_, 1, 3);
        RawGraph raw = gen::random_raw_graph(rng_, letters);
        WordGraph reference = fold(raw);
        for (std::size_t k = 0; k < per_graph && orders < config_.merge_orders; ++k, ++orders) {
          if (!(fold(gen::shuffled(rng_, raw)) == reference)) {
            return "merge order " + std::to_string(orders) + " folds to a different graph";
          }
        }
      }
      info = std::to_string(orders) + " merge orders";
      return "";
    });
  }

  // No subword may be Stephen-certified (right) invertible while a witness
  // certifies the opposite.
  std::string cross_check_subwords(PieceContext& ctx, const Word& w) {
    auto& of_one = ctx.approximant_of(Word{});
    const auto& alphabet = ctx.presentation().alphabet;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        for (const Word& u : {w.subword(i, len), invert(w.subword(i, len))}) {
          Certificate right = certify_right_invertible(of_one, u, ctx.budget().rounds);
          if (right.verdict != Tri::yes) continue;
          Certificate both = certify_invertible(of_one, u, ctx.budget().rounds);
          for (const auto& A : ctx.witnesses()) {
            if (certify_non_right_invertible(A, u)) {
              throw SoundnessViolation(format_word(u, alphabet) + " is certified right invertible but witness " +
                                       A.id + " says otherwise");
            }
            if (both.verdict == Tri::yes && certify_non_left_invertible(A, u)) {
              throw SoundnessViolation(format_word(u, alphabet) + " is certified invertible but witness " + A.id +
                                       " says otherwise");
            }
          }
        }
      }
    }
    return "";
  }

  void criterion_soundness() {
    for (const auto& pc : piece_cases()) {
      check(8, "certificates agree on " + pc.relator, [&](std::string& info) -> std::string {
        Presentation P = make_presentation({pc.relator}, "");
        auto ctx = context(P, config_.stephen);
        const Word& w = P.relators.front();
        if (is_cyclically_reduced(w)) {
          for (std::size_t j = 1; j < w.size(); ++j) classify_prefix(*ctx, j);
        }
        info = std::to_string(ctx->witnesses().size()) + " witnesses";
        return cross_check_subwords(*ctx, w);
      });
    }
    check(8, "fuzzed prefixes", [&](std::string& info) -> std::string {
      StephenBudget reduced{std::min<std::size_t>(3, config_.stephen.rounds),
                            std::min<std::size_t>(20000, config_.stephen.vertex_budget)};
      std::map<Word, std::unique_ptr<PieceContext>> contexts;
      std::size_t certified = 0;
      for (std::size_t k = 0; k < config_.fuzzed_prefixes; ++k) {
        Word w = gen::random_cyclically_reduced(rng_, gen::uniform(rng_, 2, 3), 2, 7);
        auto& ctx = contexts[w];
        if (!ctx) ctx = context(make_presentation({format_word(w, Alphabet("abc"))}, ""), reduced);
        // Generators missing from w are dropped by the inferred alphabet, so
        // positions come from the context's own copy of the relator.
        const Word& r = ctx->relator();
        std::size_t j = gen::uniform(rng_, 1, r.size() - 1);
        PositionStatus s = classify_prefix(*ctx, j);
        if (s.kind == PositionKind::invertible_prefix) ++certified;
        cross_check_subwords(*ctx, r.prefix(j));
      }
      info = std::to_string(config_.fuzzed_prefixes) + " prefixes over " + std::to_string(contexts.size()) +
             " relators, " + std::to_string(certified) + " certified invertible";
      return "";
    });
    for (const auto& pc : piece_cases()) {
      Presentation P = make_presentation({pc.relator}, "");
      if (!is_cyclically_reduced(P.relators.front())) continue;
      check(8, "pieces and linked agree on " + pc.relator, [&](std::string&) -> std::string {
        auto ctx = context(P, config_.stephen);
        if (!cross_validate_against_linked(*ctx)) {
          throw SoundnessViolation("piece verdict and linked criterion disagree on " + pc.relator);
        }
        return "";
      });
    }
  }

  void criterion_closure() {
    for (const auto& g : groups_with_trivial()) {
      check(9, "closure laws " + g.name, [&](std::string& info) -> std::string {
        FiniteGroup G = parse_group(g.description);
        CyclicClosure closure(G, config_.closure_budget);
        oracle::Blocks blocks = oracle::blocks(G);
        for (std::size_t k = 0; k < config_.random_subgraphs; ++k) {
          Subgraph d = gen::uniform(rng_, 0, 1) ? gen::random_subgraph(rng_, G)
                                                : gen::random_connected_subgraph(rng_, G, gen::uniform(rng_, 1, 12));
          Subgraph e = d | gen::random_subgraph(rng_, G);
          Subgraph cd = closure.close(d);
          std::string at = " at " + edge_key(G, d);
          if (!(cd == oracle::closure_by_blocks(G, blocks, d))) return "differs from the block oracle" + at;
          if (!d.is_subset_of(cd)) return "not extensive" + at;
          if (!(closure.close(cd) == cd)) return "not idempotent" + at;
          if (!closure.is_cyclic(cd)) return "closure not cyclic" + at;
          if (!cd.is_subset_of(closure.close(e))) return "not monotone" + at;
          auto h = static_cast<Element>(gen::uniform(rng_, 0, G.order() - 1));
          if (!(closure.close(translate(G, h, d)) == translate(G, h, cd))) return "not G-equivariant" + at;
        }
        info = std::to_string(config_.random_subgraphs) + " subgraphs";
        return "";
      });
    }
  }

  const BatteryConfig& config_;
  const std::function<void(const CaseResult&)>& progress_;
  gen::Rng rng_;
};

}  // namespace

const std::vector<std::pair<int, std::string>>& criterion_titles() {
  static const std::vector<std::pair<int, std::string>> titles = {
      {1, "xi_G equals theta_G# on the verification battery"},
      {2, "MsF(G,X) is isomorphic to the S-circ model"},
      {3, "expansion sizes and inverse monoid axioms"},
      {4, "F-inverse and strongly F-inverse predicates"},
      {5, "piece battery verdicts"},
      {6, "witness exactness"},
      {7, "Stephen certificates and fold confluence"},
      {8, "soundness cross-checks"},
      {9, "cyclic closure laws"},
  };
  return titles;
}

BatteryReport run_battery(const BatteryConfig& config, const std::vector<int>& only,
                          const std::function<void(const CaseResult&)>& progress) {
  Runner runner(config, progress);
  for (const auto& [id, title] : criterion_titles()) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto start = Clock::now();
    std::size_t first = runner.report.cases.size();
    runner.run(id);
    CriterionSummary s;
    s.id = id;
    s.title = title;
    s.elapsed_ms = ms_since(start);
    for (std::size_t i = first; i < runner.report.cases.size(); ++i) {
      const auto& c = runner.report.cases[i];
      ++s.cases;
      if (!c.pass) {
        ++s.failed;
        s.pass = false;
      }
      runner.report.soundness_violation |= c.soundness_violation;
    }
    runner.report.all_passed &= s.pass;
    runner.report.criteria.push_back(std::move(s));
  }
  return std::move(runner.report);
}

}  // namespace sfinv::cli
