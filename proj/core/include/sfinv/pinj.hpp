#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sfinv {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// {n ≥ start : n ≡ residue (mod modulus)}, stored with `start` raised to
/// the least member.
struct ArithProgression {
  Integer residue;
  Integer modulus{1};
  Integer start;

  static ArithProgression make(Integer residue, Integer modulus, Integer start);
  bool contains(const Integer& n) const;
  bool operator==(const ArithProgression&) const = default;
};

/// n ↦ (p·n + q) / d with p, d ≥ 1, stored reduced by gcd(p, q, d).
struct AffineRule {
  Integer p{1};
  Integer q;
  Integer d{1};

  static AffineRule make(Integer p, Integer q, Integer d);
  Integer apply(const Integer& n) const { return (p * n + q) / d; }
  bool operator==(const AffineRule&) const = default;
};

struct Branch {
  ArithProgression domain;
  AffineRule rule;
  /// Image progression of the branch.
  ArithProgression image() const;
};

/// Exact partial injection of ℕ: affine branches on arithmetic progressions
/// plus finitely many exceptional points. Maps compose left to right:
/// compose(α, β) is "first α, then β".
class StructuredPinj {
 public:
  StructuredPinj() = default;  // nowhere defined

  /// Validates divisibility, non-negativity, disjoint domains and disjoint
  /// images; throws InvalidArgument otherwise.
  static StructuredPinj make(std::vector<Branch> branches, std::vector<std::pair<Integer, Integer>> exceptions);

  static StructuredPinj identity();
  /// Identity on the given progression.
  static StructuredPinj identity_on(const ArithProgression& domain);
  /// Affine map on the whole progression.
  static StructuredPinj affine(const ArithProgression& domain, const AffineRule& rule);

  const std::vector<Branch>& branches() const { return branches_; }
  const std::vector<std::pair<Integer, Integer>>& exceptions() const { return exceptions_; }
  bool nowhere_defined() const { return branches_.empty() && exceptions_.empty(); }

  std::optional<Integer> apply(const Integer& n) const;

 private:
  std::vector<Branch> branches_;
  std::vector<std::pair<Integer, Integer>> exceptions_;  // sorted by point
};

/// n ↦ β(α(n)).
StructuredPinj compose(const StructuredPinj& alpha, const StructuredPinj& beta);
StructuredPinj invert_pinj(const StructuredPinj& alpha);
/// d(α) = αα⁻¹, the identity on dom α.
StructuredPinj domain_idempotent(const StructuredPinj& alpha);
/// r(α) = α⁻¹α, the identity on im α.
StructuredPinj range_idempotent(const StructuredPinj& alpha);

/// Semantic equality via a common modulus and threshold. Throws
/// BudgetExceeded when the common modulus is unreasonably large.
bool equals(const StructuredPinj& alpha, const StructuredPinj& beta);
bool is_identity(const StructuredPinj& alpha);

/// `pinj[ branch(r=0,m=1,s=0 : 2n+0/1), point(1 -> 1) ]`
std::string format_pinj(const StructuredPinj& alpha);

/// Common named maps: ã(n) = 2n, c̃ = id on 2ℕ ∪ {1}, successor.
StructuredPinj doubling_map();
StructuredPinj even_or_one_identity();
StructuredPinj successor_map();

}  // namespace sfinv
