#include "sfinv/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "sfinv/error.hpp"

namespace sfinv {

namespace {

bool is_bijection(const std::vector<std::uint32_t>& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (auto image : perm) {
    if (image >= perm.size() || hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(Alphabet alphabet, std::vector<std::vector<Element>> positive_actions)
    : alphabet_(std::move(alphabet)) {
  if (positive_actions.size() != alphabet_.size()) {
    throw InvalidArgument("one action per generator required");
  }
  order_ = positive_actions.empty() ? 1 : positive_actions.front().size();
  if (order_ == 0) throw InvalidArgument("group must be non-empty");
  right_.assign(letter_count(), {});
  for (std::size_t x = 0; x < positive_actions.size(); ++x) {
    const auto& action = positive_actions[x];
    if (action.size() != order_ || !is_bijection(action)) throw InvalidArgument("invalid permutation");
    std::vector<Element> inverse_action(order_);
    for (Element g = 0; g < order_; ++g) inverse_action[action[g]] = g;
    right_[2 * x] = action;
    right_[2 * x + 1] = std::move(inverse_action);
  }

  // Discovery words: breadth-first over positive letters from the identity.
  words_.assign(order_, Word{});
  std::vector<bool> seen(order_, false);
  std::deque<Element> queue{identity};
  seen[identity] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Element g = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < alphabet_.size(); ++x) {
      Element h = right_[2 * x][g];
      if (!seen[h]) {
        seen[h] = true;
        ++reached;
        words_[h] = words_[g] * Word{Letter{x, false}};
        queue.push_back(h);
      }
    }
  }
  if (reached != order_) throw InvalidArgument("not X-generated");

  inverse_.resize(order_);
  for (Element g = 0; g < order_; ++g) inverse_[g] = evaluate(invert(words_[g]));

  if (order_ <= left_table_limit) {
    left_table_.resize(order_ * order_);
    for (Element h = 0; h < order_; ++h) {
      for (Element g = 0; g < order_; ++g) left_table_[h * order_ + g] = evaluate_from(h, words_[g]);
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n, Alphabet alphabet) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  if (alphabet.size() != 1) throw InvalidArgument("cyclic group takes exactly one generator");
  std::vector<Element> plus_one(n);
  for (Element g = 0; g < n; ++g) plus_one[g] = (g + 1) % n;
  FiniteGroup group(std::move(alphabet), {plus_one});
  group.set_description("cyclic " + std::to_string(n) + " " + std::string(1, group.alphabet().name(0)));
  return group;
}

FiniteGroup FiniteGroup::from_permutations(Alphabet alphabet,
                                           const std::vector<std::vector<std::uint32_t>>& perms,
                                           std::size_t budget) {
  if (perms.size() != alphabet.size()) throw InvalidArgument("one permutation per generator required");
  std::size_t degree = 0;
  for (const auto& p : perms) degree = std::max(degree, p.size());
  std::vector<std::vector<std::uint32_t>> padded;
  for (const auto& p : perms) {
    if (!is_bijection(p)) throw InvalidArgument("invalid permutation");
    auto q = p;
    for (std::size_t i = q.size(); i < degree; ++i) q.push_back(static_cast<std::uint32_t>(i));
    padded.push_back(std::move(q));
  }

  // Elements are permutations; g·x is "first g, then x".
  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::map<Perm, Element> index{{id, 0}};
  std::vector<Perm> elements{id};
  std::vector<std::vector<Element>> actions(perms.size());
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (std::size_t x = 0; x < padded.size(); ++x) {
      Perm product(degree);
      for (std::size_t i = 0; i < degree; ++i) product[i] = padded[x][elements[next][i]];
      auto [it, inserted] = index.emplace(product, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= budget) throw BudgetExceeded("group too large");
        elements.push_back(std::move(product));
      }
      actions[x].push_back(it->second);
    }
  }
  return FiniteGroup(std::move(alphabet), std::move(actions));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                    Alphabet alphabet, const std::vector<Element>& generators,
                                    std::size_t budget) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("empty table");
  if (n > budget) throw BudgetExceeded("group too large");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("table is not square");
    for (auto v : row) {
      if (v >= n) throw InvalidArgument("table entry out of range");
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i) {
      throw InvalidArgument("element 0 is not a two-sided identity (fails at " + std::to_string(i) + ")");
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::uint32_t j = 0; j < n && !found; ++j) found = table[i][j] == 0 && table[j][i] == 0;
    if (!found) throw InvalidArgument("element " + std::to_string(i) + " has no two-sided inverse");
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw InvalidArgument("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ")");
        }
      }
    }
  }
  if (generators.size() != alphabet.size()) throw InvalidArgument("one element per generator required");
  std::vector<std::vector<Element>> actions;
  for (Element gen : generators) {
    if (gen >= n) throw InvalidArgument("generator element out of range");
    std::vector<Element> action(n);
    for (Element g = 0; g < n; ++g) action[g] = table[g][gen];
    actions.push_back(std::move(action));
  }
  FiniteGroup group(std::move(alphabet), std::move(actions));
  return group;
}

FiniteGroup::Element FiniteGroup::multiply(Element h, Element g) const {
  if (!left_table_.empty()) return left_table_[h * order_ + g];
  return evaluate_from(h, words_[g]);
}

FiniteGroup::Element FiniteGroup::evaluate_from(Element start, const Word& w) const {
  Element g = start;
  for (const Letter& x : w) {
    if (x.generator >= alphabet_.size()) throw InvalidArgument("unknown generator");
    g = right_[x.code()][g];
  }
  return g;
}

std::vector<std::uint32_t> parse_cycles(const std::string& cycles, std::size_t size) {
  std::vector<std::vector<std::uint32_t>> parsed;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[i]))) ++i;
  };
  skip();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw ParseError("expected '(' in cycle notation: " + cycles);
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (i >= cycles.size()) throw ParseError("unterminated cycle: " + cycles);
      if (cycles[i] == ')') {
        ++i;
        break;
      }
      if (cycles[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        throw ParseError("expected a point in cycle notation: " + cycles);
      }
      std::uint32_t value = 0;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        value = value * 10 + static_cast<std::uint32_t>(cycles[i] - '0');
        ++i;
      }
      cycle.push_back(value);
      size = std::max<std::size_t>(size, value + 1);
    }
    parsed.push_back(std::move(cycle));
    skip();
  }
  std::vector<std::uint32_t> perm(size);
  for (std::size_t p = 0; p < size; ++p) perm[p] = static_cast<std::uint32_t>(p);
  std::vector<bool> moved(size, false);
  for (const auto& cycle : parsed) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (moved[cycle[k]]) throw ParseError("point repeated in cycle notation: " + cycles);
      moved[cycle[k]] = true;
      perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return perm;
}

}  // namespace sfinv
