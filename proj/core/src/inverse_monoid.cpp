#include "sfinv/inverse_monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sfinv/cayley.hpp"
#include "sfinv/error.hpp"

namespace sfinv {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    case Tri::unknown:
      break;
  }
  return "unknown";
}

FiniteInverseMonoid::FiniteInverseMonoid(MonoidData data, Alphabet alphabet)
    : name_(std::move(data.name)),
      alphabet_(std::move(alphabet)),
      keys_(std::move(data.keys)),
      identity_(data.identity),
      letter_images_(std::move(data.letter_images)),
      right_(std::move(data.right)),
      left_(std::move(data.left)),
      inverse_(std::move(data.inverse)) {
  const std::size_t n = keys_.size();
  const std::size_t letters = 2 * alphabet_.size();
  if (n == 0 || identity_ >= n) throw InvalidArgument("monoid needs an identity element");
  if (letter_images_.size() != letters || right_.size() != letters || left_.size() != letters) {
    throw InvalidArgument("monoid data does not match the alphabet");
  }
  if (inverse_.size() != n) throw InvalidArgument("inverse map has the wrong size");
  for (std::size_t c = 0; c < letters; ++c) {
    if (right_[c].size() != n || left_[c].size() != n) throw InvalidArgument("action has the wrong size");
  }
  for (Index i = 0; i < n; ++i) {
    if (!by_key_.emplace(keys_[i], i).second) throw InvalidArgument("duplicate element key " + keys_[i]);
  }

  words_.assign(n, Word{});
  std::vector<bool> seen(n, false);
  seen[identity_] = true;
  std::deque<Index> queue{identity_};
  std::size_t reached = 1;
  while (!queue.empty()) {
    Index a = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < letters; ++c) {
      Index b = right_[c][a];
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        words_[b] = words_[a] * Word{Letter::from_code(c)};
        queue.push_back(b);
      }
    }
  }
  if (reached != n) throw InvalidArgument("monoid is not generated by the letter images");

  if (n <= dense_limit) {
    table_.resize(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) table_[a * n + b] = evaluate_from(a, words_[b]);
    }
  }
  idempotent_.resize(n);
  for (Index a = 0; a < n; ++a) idempotent_[a] = multiply(a, a) == a;
  validate();
}

void FiniteInverseMonoid::validate() const {
  const std::size_t n = size();
  for (std::size_t c = 0; c < letter_count(); ++c) {
    if (right_[c][identity_] != letter_images_[c] || left_[c][identity_] != letter_images_[c]) {
      throw InvalidArgument("letter actions disagree with letter images");
    }
    if (letter_images_[c ^ 1U] != inverse_[letter_images_[c]]) {
      throw InvalidArgument("inverse letters do not map to inverse elements");
    }
  }
  for (Index a = 0; a < n; ++a) {
    Index b = inverse_[a];
    if (b >= n || multiply(multiply(a, b), a) != a || multiply(multiply(b, a), b) != b) {
      throw InvalidArgument("element " + keys_[a] + " violates the inverse laws");
    }
  }
  for (std::size_t c = 0; c < letter_count(); ++c) {
    for (Index a = 0; a < n; ++a) {
      if (left_[c][a] != multiply(letter_images_[c], a)) {
        throw InvalidArgument("left action disagrees with multiplication");
      }
    }
  }
  auto es = idempotents();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (multiply(es[i], es[j]) != multiply(es[j], es[i])) {
        throw InvalidArgument("idempotents " + keys_[es[i]] + " and " + keys_[es[j]] + " do not commute");
      }
    }
  }
}

FiniteInverseMonoid FiniteInverseMonoid::from_table(std::string name, const std::vector<std::vector<Index>>& table,
                                                    Alphabet alphabet, const std::vector<Index>& letter_images,
                                                    std::vector<std::string> keys) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("table is not square");
    for (auto v : row) {
      if (v >= n) throw InvalidArgument("table entry out of range");
    }
  }
  std::optional<Index> identity;
  for (Index e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidArgument("table has no identity element");
  MonoidData data;
  data.name = std::move(name);
  data.identity = *identity;
  data.letter_images = letter_images;
  if (keys.empty()) {
    for (Index i = 0; i < n; ++i) keys.push_back(std::to_string(i));
  }
  data.keys = std::move(keys);
  for (Index a = 0; a < n; ++a) {
    std::optional<Index> inv;
    for (Index b = 0; b < n && !inv; ++b) {
      if (table[table[a][b]][a] == a && table[table[b][a]][b] == b) inv = b;
    }
    if (!inv) throw InvalidArgument("element " + std::to_string(a) + " has no inverse");
    data.inverse.push_back(*inv);
  }
  data.right.assign(letter_images.size(), std::vector<Index>(n));
  data.left.assign(letter_images.size(), std::vector<Index>(n));
  for (std::size_t c = 0; c < letter_images.size(); ++c) {
    if (letter_images[c] >= n) throw InvalidArgument("letter image out of range");
    for (Index a = 0; a < n; ++a) {
      data.right[c][a] = table[a][letter_images[c]];
      data.left[c][a] = table[letter_images[c]][a];
    }
  }
  FiniteInverseMonoid M(std::move(data), std::move(alphabet));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (M.multiply(a, b) != table[a][b]) throw InvalidArgument("table is not associative");
    }
  }
  return M;
}

std::optional<FiniteInverseMonoid::Index> FiniteInverseMonoid::index_of(const std::string& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

FiniteInverseMonoid::Index FiniteInverseMonoid::multiply(Index a, Index b) const {
  if (!table_.empty()) return table_[std::size_t{a} * size() + b];
  return evaluate_from(a, words_[b]);
}

FiniteInverseMonoid::Index FiniteInverseMonoid::evaluate_from(Index start, const Word& w) const {
  Index a = start;
  for (const Letter& x : w) {
    if (x.code() >= letter_count()) throw InvalidArgument("unknown generator");
    a = right_[x.code()][a];
  }
  return a;
}

std::vector<FiniteInverseMonoid::Index> FiniteInverseMonoid::idempotents() const {
  std::vector<Index> out;
  for (Index a = 0; a < size(); ++a) {
    if (idempotent_[a]) out.push_back(a);
  }
  return out;
}

bool FiniteInverseMonoid::natural_leq(Index x, Index y) const {
  return multiply(multiply(x, inverse_[x]), y) == x;
}

Congruence::Congruence(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), Index{0}); }

Congruence::Index Congruence::find(Index a) const {
  Index root = a;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[a] != root) {
    Index next = parent_[a];
    parent_[a] = root;
    a = next;
  }
  return root;
}

bool Congruence::unite(Index a, Index b) {
  Index ra = find(a);
  Index rb = find(b);
  if (ra == rb) return false;
  if (rb < ra) std::swap(ra, rb);
  parent_[rb] = ra;  // the smaller index stays root
  return true;
}

std::size_t Congruence::class_count() const {
  std::size_t count = 0;
  for (Index a = 0; a < parent_.size(); ++a) count += find(a) == a ? 1 : 0;
  return count;
}

std::vector<Congruence::Index> Congruence::canonical() const {
  std::vector<Index> out(parent_.size());
  for (Index a = 0; a < parent_.size(); ++a) out[a] = find(a);
  return out;
}

Congruence congruence_generated(const FiniteInverseMonoid& M,
                                const std::vector<std::pair<Congruence::Index, Congruence::Index>>& pairs) {
  Congruence c(M.size());
  std::deque<std::pair<Congruence::Index, Congruence::Index>> queue;
  for (auto [a, b] : pairs) {
    if (a >= M.size() || b >= M.size()) throw InvalidArgument("pair index out of range");
    if (c.unite(a, b)) queue.emplace_back(a, b);
  }
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (std::size_t code = 0; code < M.letter_count(); ++code) {
      auto ra = M.right(a, code);
      auto rb = M.right(b, code);
      if (c.unite(ra, rb)) queue.emplace_back(ra, rb);
      auto la = M.left(code, a);
      auto lb = M.left(code, b);
      if (c.unite(la, lb)) queue.emplace_back(la, lb);
    }
  }
  return c;
}

FiniteInverseMonoid quotient(const FiniteInverseMonoid& M, const Congruence& c) {
  if (c.size() != M.size()) throw InvalidArgument("congruence does not match the monoid");
  auto canon = c.canonical();
  std::vector<FiniteInverseMonoid::Index> new_index(M.size(), 0);
  std::vector<FiniteInverseMonoid::Index> reps;
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) {
    if (canon[a] == a) {
      new_index[a] = static_cast<FiniteInverseMonoid::Index>(reps.size());
      reps.push_back(a);
    }
  }
  auto cls = [&](FiniteInverseMonoid::Index a) { return new_index[canon[a]]; };
  MonoidData data;
  data.name = M.name() + "/~";
  data.identity = cls(M.identity());
  for (auto r : reps) {
    data.keys.push_back("[" + M.key(r) + "]");
    data.inverse.push_back(cls(M.inverse(r)));
  }
  data.right.assign(M.letter_count(), {});
  data.left.assign(M.letter_count(), {});
  for (std::size_t code = 0; code < M.letter_count(); ++code) {
    data.letter_images.push_back(cls(M.letter(code)));
    for (auto r : reps) {
      data.right[code].push_back(cls(M.right(r, code)));
      data.left[code].push_back(cls(M.left(code, r)));
    }
  }
  return FiniteInverseMonoid(std::move(data), M.alphabet());
}

Congruence min_group_congruence(const FiniteInverseMonoid& M) {
  std::vector<std::pair<Congruence::Index, Congruence::Index>> pairs;
  for (auto e : M.idempotents()) pairs.emplace_back(e, M.identity());
  Congruence sigma = congruence_generated(M, pairs);
  // The quotient must be a group: every class containing an idempotent is
  // the identity class, and every class is invertible there.
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) {
    if (!sigma.same(M.multiply(a, M.inverse(a)), M.identity())) {
      throw SoundnessViolation("minimum group congruence quotient is not a group");
    }
  }
  return sigma;
}

bool is_E_unitary(const FiniteInverseMonoid& M) {
  Congruence sigma = min_group_congruence(M);
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) {
    if (sigma.same(a, M.identity()) != M.is_idempotent(a)) return false;
  }
  return true;
}

bool is_F_inverse(const FiniteInverseMonoid& M) {
  Congruence sigma = min_group_congruence(M);
  auto canon = sigma.canonical();
  std::vector<std::vector<FiniteInverseMonoid::Index>> classes(M.size());
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) classes[canon[a]].push_back(a);
  for (const auto& members : classes) {
    if (members.empty()) continue;
    bool has_max = false;
    for (auto top : members) {
      has_max = std::all_of(members.begin(), members.end(), [&](auto x) { return M.natural_leq(x, top); });
      if (has_max) break;
    }
    if (!has_max) return false;
  }
  return true;
}

FiniteInverseMonoid group_as_monoid(const FiniteGroup& G) {
  MonoidData data;
  data.name = G.description().empty() ? "group" : G.description();
  data.identity = FiniteGroup::identity;
  for (FiniteGroup::Element g = 0; g < G.order(); ++g) {
    data.keys.push_back("g" + std::to_string(g));
    data.inverse.push_back(G.inverse(g));
  }
  data.right.assign(G.letter_count(), {});
  data.left.assign(G.letter_count(), {});
  for (std::size_t code = 0; code < G.letter_count(); ++code) {
    auto image = G.act_code(FiniteGroup::identity, code);
    data.letter_images.push_back(image);
    for (FiniteGroup::Element g = 0; g < G.order(); ++g) {
      data.right[code].push_back(G.act_code(g, code));
      data.left[code].push_back(G.multiply(image, g));
    }
  }
  return FiniteInverseMonoid(std::move(data), G.alphabet());
}

StronglyFReport is_strongly_F_inverse_quotient(const FiniteInverseMonoid& M, const FiniteGroup& G,
                                               std::size_t path_budget) {
  if (!(M.alphabet() == G.alphabet())) throw InvalidArgument("monoid and group use different alphabets");
  Congruence sigma = min_group_congruence(M);
  auto canon = sigma.canonical();
  if (sigma.class_count() != G.order()) {
    throw InvalidArgument("maximum group image of " + M.name() + " is not " + G.description());
  }
  std::vector<std::optional<FiniteGroup::Element>> image(M.size());
  std::vector<bool> hit(G.order(), false);
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) {
    auto g = G.evaluate(M.word_of(a));
    auto& slot = image[canon[a]];
    if (!slot) {
      slot = g;
      if (hit[g]) throw InvalidArgument("maximum group image of " + M.name() + " is not " + G.description());
      hit[g] = true;
    } else if (*slot != g) {
      throw InvalidArgument("maximum group image of " + M.name() + " is not " + G.description());
    }
  }

  StronglyFReport report;
  bool truncated = false;
  for (FiniteGroup::Element g = 0; g < G.order(); ++g) {
    auto listing = simple_paths(G, g, SearchBudget{std::size_t(-1), path_budget});
    truncated = truncated || listing.truncated;
    if (listing.paths.empty()) continue;
    auto first = M.evaluate(listing.paths.front().first);
    for (const auto& [w, span] : listing.paths) {
      if (M.evaluate(w) != first) {
        report.verdict = Tri::no;
        report.witness_point = g;
        report.detail = "simple paths " + format_word(listing.paths.front().first, G.alphabet()) + " and " +
                        format_word(w, G.alphabet()) + " to element " + std::to_string(g) +
                        " evaluate differently";
        return report;
      }
    }
  }
  report.verdict = truncated ? Tri::unknown : Tri::yes;
  if (truncated) report.detail = "simple-path enumeration truncated by budget";
  return report;
}

std::string dump_text(const FiniteInverseMonoid& M) {
  std::string out;
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) {
    out += M.key(a);
    out += '\t';
    out += M.key(M.inverse(a));
    out += '\t';
    out += M.is_idempotent(a) ? "yes" : "no";
    out += '\n';
  }
  return out;
}

namespace {

void put_le(std::string& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xFFU));
}

}  // namespace

std::string dump_table_blob(const FiniteInverseMonoid& M) {
  std::string out = "IMTB";
  put_le(out, 1, 4);
  put_le(out, M.size(), 8);
  out.reserve(16 + M.size() * M.size() * 4);
  for (FiniteInverseMonoid::Index a = 0; a < M.size(); ++a) {
    for (FiniteInverseMonoid::Index b = 0; b < M.size(); ++b) put_le(out, M.multiply(a, b), 4);
  }
  return out;
}

}  // namespace sfinv
