#include "sfinv/msf.hpp"

#include <algorithm>

#include "sfinv/error.hpp"

namespace sfinv {

MMElement msf_evaluate_word(const CyclicClosure& closure, const Word& w) {
  const FiniteGroup& G = closure.group();
  return {closure.close(span_of_word(G, w)), G.evaluate(w)};
}

MMElement msf_multiply(const CyclicClosure& closure, const MMElement& s, const MMElement& t) {
  MMElement product = mm_multiply(closure.group(), s, t);
#ifndef NDEBUG
  if (!closure.is_cyclic(product.graph)) throw SoundnessViolation("union of cyclic subgraphs is not cyclic");
#endif
  return product;
}

FiniteInverseMonoid enumerate_msf(const CyclicClosure& closure, std::size_t slot_cap) {
  const FiniteGroup& G = closure.group();
  std::vector<MMElement> letters;
  for (std::size_t c = 0; c < G.letter_count(); ++c) {
    letters.push_back(msf_evaluate_word(closure, Word{Letter::from_code(c)}));
  }
  return detail::enumerate_pairs(
      G, slot_cap, "MsF(" + G.description() + ")", [&](const Subgraph& g) { return closure.is_cyclic(g); },
      [&](const MMElement& s, const MMElement& t) { return msf_multiply(closure, s, t); }, letters);
}

ThetaListing theta_pairs(const FiniteGroup& G, SearchBudget budget) {
  ThetaListing out;
  auto cycles = simple_cycles_at_identity(G, budget);
  out.truncated = cycles.truncated;
  for (const Word& w : cycles.words) {
    if (w.size() < 2) continue;
    for (auto& [u, v] : splits(w)) out.pairs.push_back({std::move(u), std::move(v)});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  return out;
}

namespace {

FiniteInverseMonoid::Index index_in(const FiniteInverseMonoid& M, const FiniteGroup& G, const MMElement& s) {
  auto i = M.index_of(mm_key(G, s));
  if (!i) throw InvalidArgument("element " + mm_key(G, s) + " is not in " + M.name());
  return *i;
}

}  // namespace

CongruenceResult xi_congruence(const FiniteInverseMonoid& Mexp, const FiniteGroup& G, SearchBudget budget) {
  std::vector<std::pair<Congruence::Index, Congruence::Index>> pairs;
  bool truncated = false;
  for (Element g = 0; g < G.order(); ++g) {
    auto maxima = maximal_sigma_elements(G, g, budget);
    truncated = truncated || maxima.truncated;
    if (maxima.elements.empty()) continue;
    auto first = index_in(Mexp, G, maxima.elements.front());
    for (std::size_t k = 1; k < maxima.elements.size(); ++k) {
      pairs.emplace_back(first, index_in(Mexp, G, maxima.elements[k]));
    }
  }
  return {congruence_generated(Mexp, pairs), truncated, pairs.size()};
}

CongruenceResult theta_sharp_congruence(const FiniteInverseMonoid& Mexp, const FiniteGroup& G,
                                        SearchBudget budget) {
  auto theta = theta_pairs(G, budget);
  std::vector<std::pair<Congruence::Index, Congruence::Index>> pairs;
  for (const auto& [u, v] : theta.pairs) {
    pairs.emplace_back(index_in(Mexp, G, mm_evaluate_word(G, u)), index_in(Mexp, G, mm_evaluate_word(G, invert(v))));
  }
  return {congruence_generated(Mexp, pairs), theta.truncated, pairs.size()};
}

Pre1Report verify_pre1(const FiniteGroup& G, const VerifyOptions& options) {
  Pre1Report report;
  FiniteInverseMonoid Mexp = enumerate_mm(G, options.slot_cap);
  report.mm_size = Mexp.size();
  auto xi = xi_congruence(Mexp, G, options.search);
  auto theta = theta_sharp_congruence(Mexp, G, options.search);
  report.xi_classes = xi.congruence.class_count();
  report.theta_classes = theta.congruence.class_count();
  report.theta_pair_count = theta.generating_pairs;
  auto a = xi.congruence.canonical();
  auto b = theta.congruence.canonical();
  for (FiniteInverseMonoid::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      report.first_mismatch = Mexp.key(i);
      report.detail = "element " + Mexp.key(i) + " lies with " + Mexp.key(a[i]) + " under xi but with " +
                      Mexp.key(b[i]) + " under theta#";
      break;
    }
  }
  if (xi.truncated || theta.truncated) {
    report.verdict = Tri::unknown;
    if (report.detail.empty()) report.detail = "path or cycle enumeration truncated by budget";
  } else {
    report.verdict = report.first_mismatch ? Tri::no : Tri::yes;
  }
  return report;
}

IsoReport verify_s_circ_iso(const FiniteGroup& G, const VerifyOptions& options) {
  IsoReport report;
  CyclicClosure closure(G, options.closure_budget);
  FiniteInverseMonoid Mexp = enumerate_mm(G, options.slot_cap);
  FiniteInverseMonoid S = enumerate_msf(closure, options.slot_cap);
  auto xi = xi_congruence(Mexp, G, options.search);
  report.mm_size = Mexp.size();
  report.xi_classes = xi.congruence.class_count();
  report.s_circ_size = S.size();
  if (xi.truncated) {
    report.detail = "simple-path enumeration truncated by budget";
    return report;
  }
  auto fail = [&](std::string why) {
    report.verdict = Tri::no;
    report.detail = std::move(why);
    return report;
  };

  std::vector<FiniteInverseMonoid::Index> phi(Mexp.size());
  for (FiniteInverseMonoid::Index i = 0; i < Mexp.size(); ++i) {
    MMElement s = mm_element_of(G, Mexp, i);
    phi[i] = index_in(S, G, {closure.close(s.graph), s.point});
  }
  auto canon = xi.congruence.canonical();
  std::vector<std::optional<FiniteInverseMonoid::Index>> class_of_image(S.size());
  for (FiniteInverseMonoid::Index i = 0; i < Mexp.size(); ++i) {
    if (phi[i] != phi[canon[i]]) {
      return fail("not well defined: " + Mexp.key(i) + " and " + Mexp.key(canon[i]) + " have different closures");
    }
    auto& seen = class_of_image[phi[i]];
    if (seen && *seen != canon[i]) {
      return fail("not injective: classes of " + Mexp.key(*seen) + " and " + Mexp.key(canon[i]) + " both map to " +
                  S.key(phi[i]));
    }
    seen = canon[i];
  }
  for (FiniteInverseMonoid::Index j = 0; j < S.size(); ++j) {
    if (!class_of_image[j]) return fail("not surjective: " + S.key(j) + " has no preimage");
  }
  std::vector<FiniteInverseMonoid::Index> reps;
  for (FiniteInverseMonoid::Index i = 0; i < Mexp.size(); ++i) {
    if (canon[i] == i) reps.push_back(i);
  }
  for (auto a : reps) {
    for (auto b : reps) {
      if (phi[Mexp.multiply(a, b)] != S.multiply(phi[a], phi[b])) {
        return fail("not multiplicative at " + Mexp.key(a) + " * " + Mexp.key(b));
      }
    }
  }
  report.verdict = Tri::yes;
  return report;
}

}  // namespace sfinv
