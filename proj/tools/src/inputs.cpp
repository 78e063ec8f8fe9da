#include "sfinv/cli/inputs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "sfinv/error.hpp"

namespace sfinv::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::uint32_t parse_count(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      text.size() > 9) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + text + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(text));
}

FiniteGroup parse_perm(std::string_view text) {
  // Split at every `<letter>:`; everything up to the next one is cycle text.
  std::map<char, std::string> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    if (i + 1 >= text.size() || !std::islower(static_cast<unsigned char>(text[i])) || text[i + 1] != ':') {
      throw ParseError("expected '<letter>:' in permutation group description");
    }
    char name = text[i];
    i += 2;
    std::size_t end = i;
    while (end < text.size() && !(std::islower(static_cast<unsigned char>(text[end])) && end + 1 < text.size() &&
                                  text[end + 1] == ':')) {
      ++end;
    }
    if (cycles.count(name)) throw ParseError(std::string("generator given twice: ") + name);
    cycles[name] = trim(text.substr(i, end - i));
    i = end;
  }
  if (cycles.empty()) throw ParseError("permutation group needs at least one generator");
  std::string names;
  std::vector<std::vector<std::uint32_t>> perms;
  std::size_t size = 1;
  for (const auto& [name, text_of] : cycles) {
    names.push_back(name);
    perms.push_back(parse_cycles(text_of, 0));
    size = std::max(size, perms.back().size());
  }
  for (auto& p : perms) {
    for (auto k = static_cast<std::uint32_t>(p.size()); k < size; ++k) p.push_back(k);
  }
  return FiniteGroup::from_permutations(Alphabet(names), perms);
}

}  // namespace

FiniteGroup parse_group(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    if (!joined.empty()) joined.push_back(' ');
    joined += t;
  }
  return parse_group(joined);
}

FiniteGroup parse_group(std::string_view text) {
  std::string description = trim(text);
  std::istringstream in(description);
  std::string kind;
  in >> kind;
  if (kind == "group") in >> kind;
  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);

  FiniteGroup G = [&] {
    if (kind == "cyclic") {
      std::istringstream args(rest);
      std::string n, letter, extra;
      args >> n >> letter;
      if (letter.size() != 1 || (args >> extra)) throw ParseError("usage: cyclic <n> <generator-letter>");
      std::uint32_t order = parse_count(n, "the cyclic group order");
      if (order == 0) throw ParseError("cyclic group order must be positive");
      return FiniteGroup::cyclic(order, Alphabet(letter));
    }
    if (kind == "perm") return parse_perm(rest);
    if (kind == "table") {
      if (rest.empty()) throw ParseError("usage: table <file>");
      return parse_group_table(read_file(rest));
    }
    throw ParseError("unknown group kind '" + kind + "' (expected cyclic, perm or table)");
  }();
  std::string canonical = description.rfind("group", 0) == 0 ? trim(description.substr(5)) : description;
  G.set_description(canonical);
  return G;
}

FiniteGroup parse_group_table(std::string_view contents) {
  std::string text;
  std::istringstream lines{std::string(contents)};
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    text += line + '\n';
  }
  std::istringstream in(text);
  std::string token;
  if (!(in >> token)) throw ParseError("table file is empty");
  std::uint32_t n = parse_count(token, "the table size");
  if (n == 0) throw ParseError("table size must be positive");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (auto& row : table) {
    for (auto& cell : row) {
      if (!(in >> token)) throw ParseError("table file ends inside the table");
      cell = parse_count(token, "a table entry");
    }
  }
  if (!(in >> token) || token != "gens:") throw ParseError("expected 'gens:' after the table");
  std::map<char, std::uint32_t> gens;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq != 1 || !std::islower(static_cast<unsigned char>(token[0]))) {
      throw ParseError("expected '<letter>=<index>' in gens line, got '" + token + "'");
    }
    if (!gens.emplace(token[0], parse_count(token.substr(2), "a generator index")).second) {
      throw ParseError(std::string("generator given twice: ") + token[0]);
    }
  }
  if (gens.empty()) throw ParseError("gens line lists no generators");
  std::string names;
  std::vector<FiniteGroup::Element> images;
  for (auto [name, index] : gens) {
    names.push_back(name);
    images.push_back(index);
  }
  return FiniteGroup::from_table(table, Alphabet(names), images);
}

Presentation parse_presentation(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  std::string line;
  std::optional<std::string> generators;
  std::vector<std::string> relators;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "generators") {
      if (generators) throw ParseError("line " + std::to_string(line_no) + ": generators given twice");
      generators = value;
    } else if (key == "relator") {
      relators.push_back(value);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (relators.empty()) throw ParseError("presentation has no relator");
  return make_presentation(relators, generators.value_or(""));
}

Presentation make_presentation(const std::vector<std::string>& relators, const std::string& generators) {
  if (relators.empty()) throw ParseError("no relator given");
  Alphabet alphabet = parse_alphabet(generators);
  if (alphabet.empty()) {
    std::string all;
    for (const auto& r : relators) all += r;
    alphabet = Alphabet::infer(all);
  }
  std::vector<Word> words;
  for (const auto& r : relators) words.push_back(parse_word(r, alphabet));
  return Presentation(alphabet, std::move(words));
}

Alphabet parse_alphabet(std::string_view text) {
  std::string names;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
    names.push_back(c);
  }
  return Alphabet(names);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_presentation(const Presentation& P) {
  std::string out = "Inv<";
  for (std::size_t i = 0; i < P.alphabet.size(); ++i) {
    if (i) out += ",";
    out.push_back(P.alphabet.name(i));
  }
  out += " |";
  for (std::size_t i = 0; i < P.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += format_word(P.relators[i], P.alphabet) + "=1";
  }
  return out + ">";
}

}  // namespace sfinv::cli
