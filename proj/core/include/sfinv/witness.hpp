#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sfinv/inverse_monoid.hpp"
#include "sfinv/pinj.hpp"
#include "sfinv/stephen.hpp"

namespace sfinv {

/// Element of an explicit finite inverse monoid, used as a product factor.
struct FiniteComponent {
  std::shared_ptr<const FiniteInverseMonoid> monoid;
  FiniteInverseMonoid::Index index = 0;
};

using Component = std::variant<StructuredPinj, FiniteComponent>;

/// Element of a direct product of partial-injection monoids and finite
/// inverse monoids. All elements combined in one computation share a shape.
struct ProductElement {
  std::vector<Component> components;
};

/// Z_n with generator d as an inverse monoid (element k is d^k).
std::shared_ptr<const FiniteInverseMonoid> cyclic_monoid(std::uint32_t n);

ProductElement product_identity_like(const ProductElement& shape);
/// Left to right, componentwise. Throws InvalidArgument on shape mismatch.
ProductElement product_compose(const ProductElement& a, const ProductElement& b);
ProductElement product_invert(const ProductElement& a);
bool product_is_identity(const ProductElement& a);
bool product_equals(const ProductElement& a, const ProductElement& b);
std::string format_product(const ProductElement& a);

/// Images of the generators in some product monoid. `validated` is set only
/// by validate_witness.
struct WitnessAssignment {
  std::string id;
  Alphabet alphabet;
  std::vector<ProductElement> images;
  bool validated = false;
  std::vector<std::string> warnings;

  ProductElement evaluate(const Word& w) const;
};

/// Every relator evaluates to the identity in every component.
bool check_relators(const Presentation& P, const WitnessAssignment& A);
/// check_relators plus shape and nowhere-defined diagnostics; sets
/// `validated` on success.
bool validate_witness(const Presentation& P, WitnessAssignment& A);

/// r(image of u) ≠ 1: u is not left invertible.
bool certify_non_left_invertible(const WitnessAssignment& A, const Word& u);
/// d(image of u) ≠ 1: u is not right invertible.
bool certify_non_right_invertible(const WitnessAssignment& A, const Word& u);
/// r(image u) ≠ d(image v) in some component.
bool certify_idempotents_differ(const WitnessAssignment& A, const Word& u, const Word& v);

/// Built-in registry, filtered to the assignments that validate against P:
/// the shift × Z_n product for (x₁⋯x_k)ⁿ, the first/middle/last letter
/// classifier over candidate piece cuts, and the ã, c̃, ã⁻¹ triangle.
std::vector<WitnessAssignment> builtin_witnesses(const Presentation& P);

/// Witness file: one `<generator> -> <component> [x <component>]...` line per
/// generator, where a component is `pinj[ ... ]` or `zmod(<n>, <k>)`.
WitnessAssignment parse_witness(const std::string& text, const Alphabet& alphabet, std::string id);
std::string format_witness(const WitnessAssignment& A);

}  // namespace sfinv
