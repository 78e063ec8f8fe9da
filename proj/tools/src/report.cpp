#include "sfinv/cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace sfinv::cli {

Json record(const std::string& kind) {
  Json j;
  j["schema_version"] = schema_version;
  j["kind"] = kind;
  return j;
}

Json certificate_json(const std::string& query, const Certificate& c) {
  Json j = record("certificate");
  j["query"] = query;
  j["verdict"] = to_string(c.verdict);
  j["stage"] = c.stage;
  j["vertices"] = c.vertices;
  j["fixpoint"] = c.fixpoint;
  j["budget_exhausted"] = c.budget_exhausted;
  return j;
}

namespace {

Json position_json(const PositionStatus& s, const Word& w, const Alphabet& alphabet) {
  Json j;
  j["position"] = s.position;
  j["prefix"] = format_word(w.prefix(s.position), alphabet);
  j["status"] = to_string(s.kind);
  j["right_invertible"] = to_string(s.right.verdict);
  j["right_stage"] = s.right.stage;
  j["left_invertible"] = to_string(s.left.verdict);
  j["left_stage"] = s.left.stage;
  j["witness"] = s.witness_id.empty() ? Json(nullptr) : Json(s.witness_id);
  return j;
}

}  // namespace

Json piece_report_json(const std::string& kind, const PieceReport& r, const Alphabet& alphabet,
                       const std::vector<std::string>& notes) {
  Json j = record(kind);
  j["relator"] = format_word(r.word, alphabet);
  j["verdict"] = to_string(r.verdict);
  j["group"] = r.group;
  j["method"] = r.method;
  if (r.pieces) {
    Json pieces = Json::array();
    for (const auto& p : *r.pieces) pieces.push_back(format_word(p, alphabet));
    j["pieces"] = pieces;
  } else {
    j["pieces"] = nullptr;
  }
  Json positions = Json::array();
  for (const auto& s : r.statuses) positions.push_back(position_json(s, r.word, alphabet));
  j["positions"] = positions;
  j["reasons"] = r.reasons;
  j["notes"] = notes;
  return j;
}

Json linked_json(const LinkedReport& r, const Word& w, const Alphabet& alphabet) {
  Json j = record("pieces-linked");
  j["relator"] = format_word(w, alphabet);
  j["verdict"] = to_string(r.verdict);
  j["reasons"] = r.reasons;
  return j;
}

Json battery_json(const BatteryReport& r) {
  Json j = record("battery");
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["criterion"] = c.criterion;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["detail"] = c.detail;
    cj["soundness_violation"] = c.soundness_violation;
    cj["elapsed_ms"] = c.elapsed_ms;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  Json criteria = Json::array();
  std::size_t passed = 0;
  for (const auto& s : r.criteria) {
    Json sj;
    sj["id"] = s.id;
    sj["title"] = s.title;
    sj["status"] = s.pass ? "pass" : "fail";
    sj["cases"] = s.cases;
    sj["failed"] = s.failed;
    sj["elapsed_ms"] = s.elapsed_ms;
    criteria.push_back(sj);
    passed += s.pass ? 1 : 0;
  }
  Json summary;
  summary["criteria"] = criteria;
  summary["passed"] = passed;
  summary["failed"] = r.criteria.size() - passed;
  summary["all_passed"] = r.all_passed;
  summary["soundness_violation"] = r.soundness_violation;
  j["summary"] = summary;
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_generic(std::ostringstream& out, const Json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key == "schema_version" || key == "kind") continue;
    if (value.is_array() && !value.empty() && !value.front().is_object()) {
      out << key << ":";
      for (const auto& v : value) out << " " << scalar(v);
      out << "\n";
    } else if (value.is_array() && !value.empty()) {
      out << key << ":\n";
      for (const auto& v : value) {
        out << " ";
        for (const auto& [k, x] : v.items()) out << " " << k << "=" << scalar(x);
        out << "\n";
      }
    } else if (value.is_object()) {
      out << key << ":";
      for (const auto& [k, x] : value.items()) out << " " << k << "=" << scalar(x);
      out << "\n";
    } else {
      out << key << ": " << scalar(value) << "\n";
    }
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream out;
  const std::string kind = j.value("kind", "");
  if (kind == "pieces-factorize" || kind == "pieces-decide") {
    out << "relator " << scalar(j["relator"]) << "  verdict " << scalar(j["verdict"]) << "  via "
        << scalar(j["method"]) << (j["group"].get<bool>() ? "  (group)" : "") << "\n";
    if (!j["positions"].empty()) {
      out << std::left << std::setw(5) << "pos" << std::setw(12) << "prefix" << std::setw(16) << "status"
          << std::setw(10) << "right" << std::setw(10) << "left"
          << "witness\n";
      for (const auto& p : j["positions"]) {
        out << std::left << std::setw(5) << scalar(p["position"]) << std::setw(12) << scalar(p["prefix"])
            << std::setw(16) << scalar(p["status"]) << std::setw(10)
            << (scalar(p["right_invertible"]) + "@" + scalar(p["right_stage"])) << std::setw(10)
            << (scalar(p["left_invertible"]) + "@" + scalar(p["left_stage"])) << scalar(p["witness"]) << "\n";
      }
    }
    if (j["pieces"].is_array()) {
      out << "pieces:";
      for (const auto& p : j["pieces"]) out << " " << scalar(p);
      out << "\n";
    }
    for (const auto& r : j["reasons"]) out << "- " << scalar(r) << "\n";
    for (const auto& n : j["notes"]) out << "note: " << scalar(n) << "\n";
    return out.str();
  }
  if (kind == "battery") {
    for (const auto& c : j["cases"]) {
      out << (c["status"] == "pass" ? "PASS " : "FAIL ") << scalar(c["criterion"]) << "  " << scalar(c["name"]);
      if (!c["detail"].get<std::string>().empty()) out << "  (" << scalar(c["detail"]) << ")";
      out << "\n";
    }
    for (const auto& s : j["summary"]["criteria"]) {
      out << "criterion " << scalar(s["id"]) << " " << (s["status"] == "pass" ? "PASS" : "FAIL") << "  "
          << scalar(s["title"]) << "\n";
    }
    return out.str();
  }
  render_generic(out, j);
  return out.str();
}

}  // namespace sfinv::cli
