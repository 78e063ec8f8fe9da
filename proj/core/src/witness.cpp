#include "sfinv/witness.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "sfinv/error.hpp"

namespace sfinv {

std::shared_ptr<const FiniteInverseMonoid> cyclic_monoid(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const FiniteInverseMonoid>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    FiniteGroup g = FiniteGroup::cyclic(n, Alphabet("d"));
    g.set_description("zmod(" + std::to_string(n) + ")");
    slot = std::make_shared<const FiniteInverseMonoid>(group_as_monoid(g));
  }
  return slot;
}

namespace {

bool same_monoid(const FiniteComponent& a, const FiniteComponent& b) {
  return a.monoid == b.monoid || (a.monoid->name() == b.monoid->name() && a.monoid->size() == b.monoid->size());
}

void check_shape(const ProductElement& a, const ProductElement& b) {
  bool ok = a.components.size() == b.components.size();
  for (std::size_t i = 0; ok && i < a.components.size(); ++i) {
    const auto& x = a.components[i];
    const auto& y = b.components[i];
    if (x.index() != y.index()) {
      ok = false;
    } else if (const auto* fx = std::get_if<FiniteComponent>(&x)) {
      ok = same_monoid(*fx, std::get<FiniteComponent>(y));
    }
  }
  if (!ok) throw InvalidArgument("product elements have different shapes");
}

template <typename PinjOp, typename FiniteOp>
ProductElement map_components(const ProductElement& a, PinjOp pinj_op, FiniteOp finite_op) {
  ProductElement out;
  for (const auto& c : a.components) {
    if (const auto* p = std::get_if<StructuredPinj>(&c)) {
      out.components.emplace_back(pinj_op(*p));
    } else {
      const auto& f = std::get<FiniteComponent>(c);
      out.components.emplace_back(FiniteComponent{f.monoid, finite_op(f)});
    }
  }
  return out;
}

}  // namespace

ProductElement product_identity_like(const ProductElement& shape) {
  return map_components(
      shape, [](const StructuredPinj&) { return StructuredPinj::identity(); },
      [](const FiniteComponent& f) { return f.monoid->identity(); });
}

ProductElement product_compose(const ProductElement& a, const ProductElement& b) {
  check_shape(a, b);
  ProductElement out;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (const auto* p = std::get_if<StructuredPinj>(&a.components[i])) {
      out.components.emplace_back(compose(*p, std::get<StructuredPinj>(b.components[i])));
    } else {
      const auto& f = std::get<FiniteComponent>(a.components[i]);
      const auto& g = std::get<FiniteComponent>(b.components[i]);
      out.components.emplace_back(FiniteComponent{f.monoid, f.monoid->multiply(f.index, g.index)});
    }
  }
  return out;
}

ProductElement product_invert(const ProductElement& a) {
  return map_components(
      a, [](const StructuredPinj& p) { return invert_pinj(p); },
      [](const FiniteComponent& f) { return f.monoid->inverse(f.index); });
}

bool product_is_identity(const ProductElement& a) {
  for (const auto& c : a.components) {
    if (const auto* p = std::get_if<StructuredPinj>(&c)) {
      if (!is_identity(*p)) return false;
    } else {
      const auto& f = std::get<FiniteComponent>(c);
      if (f.index != f.monoid->identity()) return false;
    }
  }
  return true;
}

bool product_equals(const ProductElement& a, const ProductElement& b) {
  check_shape(a, b);
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (const auto* p = std::get_if<StructuredPinj>(&a.components[i])) {
      if (!equals(*p, std::get<StructuredPinj>(b.components[i]))) return false;
    } else if (std::get<FiniteComponent>(a.components[i]).index != std::get<FiniteComponent>(b.components[i]).index) {
      return false;
    }
  }
  return true;
}

namespace {

std::string format_component(const Component& c) {
  if (const auto* p = std::get_if<StructuredPinj>(&c)) return format_pinj(*p);
  const auto& f = std::get<FiniteComponent>(c);
  const std::string& name = f.monoid->name();
  if (name.rfind("zmod(", 0) == 0) {
    return name.substr(0, name.size() - 1) + ", " + f.monoid->key(f.index).substr(1) + ")";
  }
  return "finite(" + name + ", " + f.monoid->key(f.index) + ")";
}

}  // namespace

std::string format_product(const ProductElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (i > 0) out += " x ";
    out += format_component(a.components[i]);
  }
  return out;
}

ProductElement WitnessAssignment::evaluate(const Word& w) const {
  if (images.empty()) throw InvalidArgument("witness has no generator images");
  ProductElement out = product_identity_like(images.front());
  for (const Letter& x : w) {
    if (x.generator >= images.size()) throw InvalidArgument("unknown generator");
    const ProductElement& g = images[x.generator];
    out = product_compose(out, x.inverse ? product_invert(g) : g);
  }
  return out;
}

bool check_relators(const Presentation& P, const WitnessAssignment& A) {
  if (!(A.alphabet == P.alphabet) || A.images.size() != P.alphabet.size()) {
    throw InvalidArgument("witness " + A.id + " does not cover the presentation's alphabet");
  }
  for (const auto& img : A.images) check_shape(A.images.front(), img);
  for (const Word& r : P.relators) {
    if (!product_is_identity(A.evaluate(r))) return false;
  }
  return true;
}

bool validate_witness(const Presentation& P, WitnessAssignment& A) {
  A.validated = false;
  A.warnings.clear();
  for (std::size_t g = 0; g < A.images.size(); ++g) {
    for (const auto& c : A.images[g].components) {
      if (const auto* p = std::get_if<StructuredPinj>(&c); p && p->nowhere_defined()) {
        A.warnings.push_back(std::string("generator ") + A.alphabet.name(g) + " maps to the nowhere-defined map");
      }
    }
  }
  A.validated = check_relators(P, A);
  return A.validated;
}

namespace {

bool any_component_not_identity(const ProductElement& e) {
  for (const auto& c : e.components) {
    ProductElement single{{c}};
    if (!product_is_identity(single)) return true;
  }
  return false;
}

}  // namespace

bool certify_non_left_invertible(const WitnessAssignment& A, const Word& u) {
  ProductElement x = A.evaluate(u);
  return any_component_not_identity(product_compose(product_invert(x), x));
}

bool certify_non_right_invertible(const WitnessAssignment& A, const Word& u) {
  ProductElement x = A.evaluate(u);
  return any_component_not_identity(product_compose(x, product_invert(x)));
}

bool certify_idempotents_differ(const WitnessAssignment& A, const Word& u, const Word& v) {
  ProductElement x = A.evaluate(u);
  ProductElement y = A.evaluate(v);
  return !product_equals(product_compose(product_invert(x), x), product_compose(y, product_invert(y)));
}

namespace {

/// Assigns letter images to generators; fails on conflicting demands.
class AssignmentBuilder {
 public:
  AssignmentBuilder(const Alphabet& alphabet, ProductElement identity)
      : alphabet_(alphabet), identity_(std::move(identity)), images_(alphabet.size()) {}

  bool assign(Letter x, const ProductElement& image) {
    ProductElement for_generator = x.inverse ? product_invert(image) : image;
    auto& slot = images_[x.generator];
    if (!slot) {
      slot = std::move(for_generator);
      return true;
    }
    return product_equals(*slot, for_generator);
  }

  WitnessAssignment finish(std::string id) const {
    WitnessAssignment A;
    A.id = std::move(id);
    A.alphabet = alphabet_;
    for (const auto& img : images_) A.images.push_back(img ? *img : identity_);
    return A;
  }

 private:
  Alphabet alphabet_;
  ProductElement identity_;
  std::vector<std::optional<ProductElement>> images_;
};

ProductElement pinj_only(StructuredPinj p) { return ProductElement{{std::move(p)}}; }

std::optional<WitnessAssignment> shift_witness(const Presentation& P, const Word& r) {
  std::size_t k = 1;
  while (k < r.size() && !(r.size() % k == 0 && r.prefix(k).power(r.size() / k) == r)) ++k;
  if (k < 2) return std::nullopt;
  auto n = static_cast<std::uint32_t>(r.size() / k);
  auto zn = cyclic_monoid(n);
  auto element = [&](StructuredPinj p, std::uint32_t power) {
    return ProductElement{{std::move(p), FiniteComponent{zn, power % n}}};
  };
  AssignmentBuilder builder(P.alphabet, element(StructuredPinj::identity(), 0));
  bool ok = builder.assign(r[0], element(successor_map(), 1)) &&
            builder.assign(r[k - 1], element(invert_pinj(successor_map()), 0));
  for (std::size_t i = 1; ok && i + 1 < k; ++i) ok = builder.assign(r[i], element(StructuredPinj::identity(), 0));
  if (!ok) return std::nullopt;
  return builder.finish("shift-zmod" + std::to_string(n));
}

/// Letter roles under the piece classifier: first letters go to ã, last
/// letters to ã⁻¹, middle letters to c̃.
std::vector<WitnessAssignment> classifier_witnesses(const Presentation& P, const Word& r) {
  std::vector<WitnessAssignment> out;
  if (r.size() < 2 || r.size() > 20) return out;
  const StructuredPinj a = doubling_map();
  const StructuredPinj a_inv = invert_pinj(a);
  const StructuredPinj c = even_or_one_identity();
  std::set<std::vector<int>> seen;
  const std::uint32_t cut_positions = static_cast<std::uint32_t>(r.size() - 1);
  for (std::uint32_t cuts = 0; cuts < (1U << cut_positions); ++cuts) {
    // role per generator: 0 unset, 1 ã, 2 ã⁻¹, 3 c̃
    std::vector<int> role(P.alphabet.size(), 0);
    bool ok = true;
    std::size_t piece_start = 0;
    for (std::size_t i = 0; ok && i < r.size(); ++i) {
      bool ends_piece = i + 1 == r.size() || ((cuts >> i) & 1U) != 0;
      bool starts_piece = i == piece_start;
      if (starts_piece && ends_piece) {
        ok = false;  // single-letter piece
        break;
      }
      int want = starts_piece ? 1 : ends_piece ? 2 : 3;
      if (want != 3 && r[i].inverse) want = 3 - want;
      int& slot = role[r[i].generator];
      if (slot != 0 && slot != want) ok = false;
      slot = want;
      if (ends_piece) piece_start = i + 1;
    }
    if (!ok || !seen.insert(role).second) continue;
    std::vector<ProductElement> images;
    for (int g : role) {
      images.push_back(pinj_only(g == 1 ? a : g == 2 ? a_inv : g == 3 ? c : StructuredPinj::identity()));
    }
    std::string id = "classifier[";
    bool first = true;
    for (std::uint32_t i = 0; i < cut_positions; ++i) {
      if ((cuts >> i) & 1U) {
        id += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
      }
    }
    id += "]";
    WitnessAssignment A;
    A.id = std::move(id);
    A.alphabet = P.alphabet;
    A.images = std::move(images);
    out.push_back(std::move(A));
  }
  return out;
}

std::optional<WitnessAssignment> triangle_witness(const Presentation& P, const Word& r) {
  if (r.size() != 3) return std::nullopt;
  AssignmentBuilder builder(P.alphabet, pinj_only(StructuredPinj::identity()));
  bool ok = builder.assign(r[0], pinj_only(doubling_map())) &&
            builder.assign(r[1], pinj_only(even_or_one_identity())) &&
            builder.assign(r[2], pinj_only(invert_pinj(doubling_map())));
  if (!ok) return std::nullopt;
  return builder.finish("triangle");
}

}  // namespace

std::vector<WitnessAssignment> builtin_witnesses(const Presentation& P) {
  std::vector<WitnessAssignment> candidates;
  for (const Word& r : P.relators) {
    if (auto A = shift_witness(P, r)) candidates.push_back(std::move(*A));
    for (auto& A : classifier_witnesses(P, r)) candidates.push_back(std::move(A));
    if (auto A = triangle_witness(P, r)) candidates.push_back(std::move(*A));
  }
  std::vector<WitnessAssignment> out;
  std::set<std::string> ids;
  for (auto& A : candidates) {
    if (!ids.insert(A.id).second) continue;
    if (validate_witness(P, A)) out.push_back(std::move(A));
  }
  return out;
}

namespace {

class WitnessParser {
 public:
  explicit WitnessParser(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  bool peek(std::string_view token) {
    skip();
    return text_.substr(pos_, token.size()) == token;
  }
  void expect(std::string_view token) {
    if (!peek(token)) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }
  Integer integer() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Integer v(std::string(text_.substr(start, pos_ - start)));
    return negative ? Integer(-v) : v;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at column " + std::to_string(pos_ + 1) + " in: " + std::string(text_));
  }

  StructuredPinj pinj() {
    expect("pinj[");
    std::vector<Branch> branches;
    std::vector<std::pair<Integer, Integer>> points;
    if (!accept("]")) {
      do {
        if (accept("branch(")) {
          expect("r=");
          Integer r = integer();
          expect(",");
          expect("m=");
          Integer m = integer();
          expect(",");
          expect("s=");
          Integer s = integer();
          expect(":");
          Integer p = integer();
          expect("n");
          skip();
          Integer q = integer();
          expect("/");
          Integer d = integer();
          expect(")");
          if (m < 1 || p < 1 || d < 1) fail("modulus, p and d must be positive");
          branches.push_back({ArithProgression::make(r, m, s), AffineRule::make(p, q, d)});
        } else if (accept("point(")) {
          Integer n = integer();
          expect("->");
          Integer v = integer();
          expect(")");
          points.emplace_back(n, v);
        } else {
          fail("expected 'branch(' or 'point('");
        }
      } while (accept(","));
      expect("]");
    }
    try {
      return StructuredPinj::make(std::move(branches), std::move(points));
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
  }

  Component component() {
    if (peek("pinj[")) return pinj();
    expect("zmod(");
    Integer n = integer();
    expect(",");
    Integer k = integer();
    expect(")");
    if (n < 1 || n > 100000) fail("zmod order out of range");
    auto zn = cyclic_monoid(static_cast<std::uint32_t>(n));
    return FiniteComponent{zn, static_cast<FiniteInverseMonoid::Index>(((k % n) + n) % n)};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WitnessAssignment parse_witness(const std::string& text, const Alphabet& alphabet, std::string id) {
  WitnessAssignment A;
  A.id = std::move(id);
  A.alphabet = alphabet;
  std::vector<std::optional<ProductElement>> images(alphabet.size());
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    WitnessParser parser(line);
    if (parser.done()) continue;
    parser.skip();
    auto first = line.find_first_not_of(" \t\r");
    auto generator = alphabet.index_of(line[first]);
    if (!generator) throw ParseError(std::string("unknown generator '") + line[first] + "' in witness line: " + line);
    WitnessParser body(std::string_view(line).substr(first + 1));
    body.expect("->");
    ProductElement element;
    do {
      element.components.push_back(body.component());
    } while (body.accept("x"));
    if (!body.done()) body.fail("unexpected trailing text");
    if (images[*generator]) throw ParseError(std::string("generator '") + line[first] + "' assigned twice");
    images[*generator] = std::move(element);
  }
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (!images[g]) throw ParseError(std::string("witness does not assign generator '") + alphabet.name(g) + "'");
    A.images.push_back(std::move(*images[g]));
  }
  for (const auto& img : A.images) check_shape(A.images.front(), img);
  return A;
}

std::string format_witness(const WitnessAssignment& A) {
  std::string out;
  for (std::size_t g = 0; g < A.images.size(); ++g) {
    out += A.alphabet.name(g);
    out += " -> ";
    out += format_product(A.images[g]);
    out += '\n';
  }
  return out;
}

}  // namespace sfinv
