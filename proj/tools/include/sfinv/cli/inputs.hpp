#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfinv/groups.hpp"
#include "sfinv/stephen.hpp"

namespace sfinv::cli {

/// Group description, optionally prefixed by `group`:
///   cyclic <n> <letter>
///   perm <letter>:(cycle)(cycle)... <letter>:(...)...
///   table <file>
/// The table file holds n, then n rows of n indices, then `gens: a=1 b=2`;
/// `#` starts a comment.
FiniteGroup parse_group(std::string_view text);
FiniteGroup parse_group(const std::vector<std::string>& tokens);
FiniteGroup parse_group_table(std::string_view contents);

/// `generators = a b c` and one `relator = ...` line per relator. Blank
/// lines and `#` comments are skipped. Without a generators line the
/// alphabet is inferred from the relators.
Presentation parse_presentation(std::string_view contents);
/// Inline form; `generators` may be empty (inferred) or list letters with
/// optional spaces.
Presentation make_presentation(const std::vector<std::string>& relators, const std::string& generators);

/// Generator letters, optionally separated by spaces or commas.
Alphabet parse_alphabet(std::string_view text);

std::string read_file(const std::string& path);
std::string format_presentation(const Presentation& P);

}  // namespace sfinv::cli
