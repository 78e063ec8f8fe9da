#pragma once

#include <string>

#include <json.hpp>

#include "sfinv/cli/battery.hpp"
#include "sfinv/msf.hpp"
#include "sfinv/pieces.hpp"
#include "sfinv/stephen.hpp"

namespace sfinv::cli {

using Json = nlohmann::ordered_json;

constexpr int schema_version = 1;

/// {"schema_version": 1, "kind": kind}
Json record(const std::string& kind);

Json certificate_json(const std::string& query, const Certificate& c);
Json piece_report_json(const std::string& kind, const PieceReport& r, const Alphabet& alphabet,
                       const std::vector<std::string>& notes);
Json linked_json(const LinkedReport& r, const Word& w, const Alphabet& alphabet);
Json battery_json(const BatteryReport& r);

/// Plain-text rendering of any record: a per-kind layout where one exists,
/// otherwise `key: value` lines.
std::string render_table(const Json& j);

}  // namespace sfinv::cli
