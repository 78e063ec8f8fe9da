#include "sfinv/pinj.hpp"

#include <algorithm>
#include <sstream>

#include "sfinv/error.hpp"

namespace sfinv {

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Integer lcm(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

/// Inverse of a modulo m, for gcd(a, m) = 1.
Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Integer quot = old_r / r;
    Integer tmp = old_r - quot * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quot * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  return mod_floor(old_s, m);
}

std::optional<ArithProgression> intersect(const ArithProgression& a, const ArithProgression& b) {
  Integer g = gcd(a.modulus, b.modulus);
  Integer diff = b.residue - a.residue;
  if (mod_floor(diff, g) != 0) return std::nullopt;
  Integer mb = b.modulus / g;
  Integer t = mod_floor((diff / g) * mod_inverse(a.modulus / g, mb), mb);
  Integer L = a.modulus * mb;
  return ArithProgression::make(mod_floor(a.residue + a.modulus * t, L), L, std::max(a.start, b.start));
}

bool same_function(const AffineRule& x, const AffineRule& y) { return x.p * y.d == y.p * x.d && x.q * y.d == y.q * x.d; }

std::string rule_text(const AffineRule& r) {
  std::ostringstream out;
  out << r.p << "n" << (r.q < 0 ? "-" : "+") << (r.q < 0 ? Integer(-r.q) : r.q) << "/" << r.d;
  return out.str();
}

}  // namespace

ArithProgression ArithProgression::make(Integer residue, Integer modulus, Integer start) {
  if (modulus < 1) throw InvalidArgument("progression modulus must be positive");
  if (start < 0) start = 0;
  residue = mod_floor(residue, modulus);
  start += mod_floor(residue - start, modulus);
  return {std::move(residue), std::move(modulus), std::move(start)};
}

bool ArithProgression::contains(const Integer& n) const { return n >= start && mod_floor(n - residue, modulus) == 0; }

AffineRule AffineRule::make(Integer p, Integer q, Integer d) {
  if (p < 1 || d < 1) throw InvalidArgument("affine rule needs p >= 1 and d >= 1");
  Integer g = gcd(gcd(p, q), d);
  return {p / g, q / g, d / g};
}

ArithProgression Branch::image() const {
  Integer first = rule.apply(domain.start);
  Integer m = rule.p * domain.modulus / rule.d;
  return ArithProgression::make(mod_floor(first, m), m, first);
}

StructuredPinj StructuredPinj::make(std::vector<Branch> branches, std::vector<std::pair<Integer, Integer>> exceptions) {
  for (auto& b : branches) {
    b.domain = ArithProgression::make(b.domain.residue, b.domain.modulus, b.domain.start);
    b.rule = AffineRule::make(b.rule.p, b.rule.q, b.rule.d);
    const auto& [p, q, d] = b.rule;
    if (mod_floor(p * b.domain.start + q, d) != 0 || mod_floor(p * b.domain.modulus, d) != 0) {
      throw InvalidArgument("affine rule " + rule_text(b.rule) + " is not integral on its progression");
    }
    if (p * b.domain.start + q < 0) throw InvalidArgument("affine rule " + rule_text(b.rule) + " leaves ℕ");
  }
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      if (intersect(branches[i].domain, branches[j].domain)) throw InvalidArgument("branch domains overlap");
      if (intersect(branches[i].image(), branches[j].image())) throw InvalidArgument("branch images overlap");
    }
  }
  std::sort(exceptions.begin(), exceptions.end());
  for (std::size_t i = 0; i < exceptions.size(); ++i) {
    const auto& [n, v] = exceptions[i];
    if (n < 0 || v < 0) throw InvalidArgument("exceptional points must lie in ℕ");
    if (i > 0 && exceptions[i - 1].first == n) throw InvalidArgument("exceptional point repeated");
    for (std::size_t j = 0; j < i; ++j) {
      if (exceptions[j].second == v) throw InvalidArgument("exceptional values repeated");
    }
    for (const auto& b : branches) {
      if (b.domain.contains(n)) throw InvalidArgument("exceptional point inside a branch domain");
      if (b.image().contains(v)) throw InvalidArgument("exceptional value inside a branch image");
    }
  }
  std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
    return std::tie(a.domain.modulus, a.domain.residue, a.domain.start) <
           std::tie(b.domain.modulus, b.domain.residue, b.domain.start);
  });
  StructuredPinj out;
  out.branches_ = std::move(branches);
  out.exceptions_ = std::move(exceptions);
  return out;
}

StructuredPinj StructuredPinj::identity() { return identity_on(ArithProgression::make(0, 1, 0)); }

StructuredPinj StructuredPinj::identity_on(const ArithProgression& domain) {
  return affine(domain, AffineRule::make(1, 0, 1));
}

StructuredPinj StructuredPinj::affine(const ArithProgression& domain, const AffineRule& rule) {
  return make({Branch{domain, rule}}, {});
}

std::optional<Integer> StructuredPinj::apply(const Integer& n) const {
  for (const auto& [point, value] : exceptions_) {
    if (point == n) return value;
  }
  for (const auto& b : branches_) {
    if (b.domain.contains(n)) return b.rule.apply(n);
  }
  return std::nullopt;
}

StructuredPinj compose(const StructuredPinj& alpha, const StructuredPinj& beta) {
  std::vector<Branch> branches;
  std::vector<std::pair<Integer, Integer>> exceptions;
  for (const auto& A : alpha.branches()) {
    ArithProgression image = A.image();
    for (const auto& B : beta.branches()) {
      auto meet = intersect(image, B.domain);
      if (!meet) continue;
      // Pull the meet back through A's rule.
      Integer start = (A.rule.d * meet->start - A.rule.q) / A.rule.p;
      Integer modulus = meet->modulus * A.rule.d / A.rule.p;
      branches.push_back({ArithProgression::make(start, modulus, start),
                          AffineRule::make(B.rule.p * A.rule.p, B.rule.p * A.rule.q + B.rule.q * A.rule.d,
                                           A.rule.d * B.rule.d)});
    }
    for (const auto& [x, y] : beta.exceptions()) {
      if (image.contains(x)) exceptions.emplace_back((A.rule.d * x - A.rule.q) / A.rule.p, y);
    }
  }
  for (const auto& [n, v] : alpha.exceptions()) {
    if (auto w = beta.apply(v)) exceptions.emplace_back(n, *w);
  }
  return StructuredPinj::make(std::move(branches), std::move(exceptions));
}

StructuredPinj invert_pinj(const StructuredPinj& alpha) {
  std::vector<Branch> branches;
  for (const auto& b : alpha.branches()) {
    branches.push_back({b.image(), AffineRule::make(b.rule.d, -b.rule.q, b.rule.p)});
  }
  std::vector<std::pair<Integer, Integer>> exceptions;
  for (const auto& [n, v] : alpha.exceptions()) exceptions.emplace_back(v, n);
  return StructuredPinj::make(std::move(branches), std::move(exceptions));
}

StructuredPinj domain_idempotent(const StructuredPinj& alpha) { return compose(alpha, invert_pinj(alpha)); }

StructuredPinj range_idempotent(const StructuredPinj& alpha) { return compose(invert_pinj(alpha), alpha); }

bool equals(const StructuredPinj& alpha, const StructuredPinj& beta) {
  static const Integer modulus_cap = 4000000;
  Integer L = 1;
  Integer T = 0;
  for (const auto* f : {&alpha, &beta}) {
    for (const auto& b : f->branches()) {
      L = lcm(L, b.domain.modulus);
      T = std::max(T, b.domain.start + 1);
    }
    for (const auto& e : f->exceptions()) T = std::max(T, e.first + 1);
  }
  if (L > modulus_cap) throw BudgetExceeded("common modulus too large for comparison");
  for (Integer n = 0; n < T; ++n) {
    if (alpha.apply(n) != beta.apply(n)) return false;
  }
  auto branch_at = [](const StructuredPinj& f, const Integer& n) -> const Branch* {
    for (const auto& b : f.branches()) {
      if (b.domain.contains(n)) return &b;
    }
    return nullptr;
  };
  for (Integer rho = 0; rho < L; ++rho) {
    Integer n = T + mod_floor(rho - T, L);
    const Branch* a = branch_at(alpha, n);
    const Branch* b = branch_at(beta, n);
    if ((a == nullptr) != (b == nullptr)) return false;
    if (a != nullptr && !same_function(a->rule, b->rule)) return false;
  }
  return true;
}

bool is_identity(const StructuredPinj& alpha) { return equals(alpha, StructuredPinj::identity()); }

std::string format_pinj(const StructuredPinj& alpha) {
  std::ostringstream out;
  out << "pinj[";
  bool first = true;
  for (const auto& b : alpha.branches()) {
    out << (first ? " " : ", ") << "branch(r=" << b.domain.residue << ",m=" << b.domain.modulus
        << ",s=" << b.domain.start << " : " << rule_text(b.rule) << ")";
    first = false;
  }
  for (const auto& [n, v] : alpha.exceptions()) {
    out << (first ? " " : ", ") << "point(" << n << " -> " << v << ")";
    first = false;
  }
  out << " ]";
  return out.str();
}

StructuredPinj doubling_map() {
  return StructuredPinj::affine(ArithProgression::make(0, 1, 0), AffineRule::make(2, 0, 1));
}

StructuredPinj even_or_one_identity() {
  return StructuredPinj::make({Branch{ArithProgression::make(0, 2, 0), AffineRule::make(1, 0, 1)}},
                              {{Integer(1), Integer(1)}});
}

StructuredPinj successor_map() {
  return StructuredPinj::affine(ArithProgression::make(0, 1, 0), AffineRule::make(1, 1, 1));
}

}  // namespace sfinv
