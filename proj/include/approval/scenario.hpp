// Copyright 2026 The Approval Heuristics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Election scenarios: a focal voter's utilities over a fixed candidate list,
// the tallies before they vote, and the lexicographic priority order. The
// seat count is chosen per evaluation.
//
// On disk a scenario is one JSON object:
//
//   {
//     "id": "s1",
//     "candidates": ["A", "B", "C", "D", "E"],
//     "utilities": [0.05, 0.1, 0, 0, 0.25],
//     "tallies": [3, 3, 4, 3, 3],
//     "lex_priority": ["A", "B", "C", "D", "E"],
//     "notes": ""
//   }
//
// Every field is required except "notes"; unknown fields are rejected.

#ifndef APPROVAL_SCENARIO_HPP
#define APPROVAL_SCENARIO_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "approval/election.hpp"
#include "approval/error.hpp"

namespace approval {

struct Scenario {
  std::string id;
  std::vector<std::string> candidates;
  UtilityFunction utilities;
  std::vector<std::int64_t> base_tallies;
  /// Candidate indices, highest priority first.
  std::vector<std::size_t> lex_priority;
  std::string notes;

  /// Throws unless the vectors agree in length and the priority order is a
  /// permutation.
  void validate() const {
    const std::size_t m = candidates.size();
    if (utilities.size() != m) {
      throw Error(ErrorCode::kLengthMismatch, "scenario '" + id + "': " + std::to_string(utilities.size()) +
                                                  " utilities for " + std::to_string(m) + " candidates");
    }
    if (base_tallies.size() != m) {
      throw Error(ErrorCode::kLengthMismatch, "scenario '" + id + "': " + std::to_string(base_tallies.size()) +
                                                  " tallies for " + std::to_string(m) + " candidates");
    }
    if (lex_priority.size() != m) {
      throw Error(ErrorCode::kLengthMismatch, "scenario '" + id + "': lex_priority lists " +
                                                  std::to_string(lex_priority.size()) + " of " +
                                                  std::to_string(m) + " candidates");
    }
    // The state constructor checks labels, tallies and the permutation.
    (void)ElectionState(candidates, base_tallies, 0, TieBreakKind::kLexicographic, lex_priority);
  }

  ElectionState state(std::size_t seats, TieBreakKind tiebreak = TieBreakKind::kLexicographic) const {
    validate();
    return ElectionState(candidates, base_tallies, seats, tiebreak, lex_priority);
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline const std::vector<std::string>& builtin_ids() {
  static const std::vector<std::string> ids = {"s1", "s2", "s3", "s4", "s4-design"};
  return ids;
}

inline bool is_builtin(std::string_view id) {
  for (const auto& b : builtin_ids()) {
    if (b == id) return true;
  }
  return false;
}

/// Built-in scenarios (five candidates, priority A > B > C > D > E).
inline Scenario builtin(std::string_view id) {
  const std::vector<std::string> labels = {"A", "B", "C", "D", "E"};
  const std::vector<std::size_t> priority = {0, 1, 2, 3, 4};
  auto make = [&](std::string sid, std::vector<double> u, std::vector<std::int64_t> t, std::string notes) {
    Scenario s{std::move(sid), labels, UtilityFunction(u), std::move(t), priority, std::move(notes)};
    s.validate();
    return s;
  };
  if (id == "s1") {
    return make("s1", {0.05, 0.10, 0, 0, 0.25}, {3, 3, 4, 3, 3}, "Lone leader C with zero utility.");
  }
  if (id == "s2") {
    return make("s2", {0.05, 0.10, 0.01, 0, 0.25}, {3, 3, 4, 3, 3},
                "As s1 but the leader carries a trivial utility of 0.01, so the truthful profile is "
                "{A,B,C,E} (worth 0.06 / 0.16 with two / three winners) and truth* drops C.");
  }
  if (id == "s3") {
    return make("s3", {0.05, 0.10, 0, 0, 0.25}, {1, 1, 4, 4, 1},
                "Two zero-utility leaders; no ballot changes the two-winner outcome. Under the "
                "lexicographic rule follow-the-leader [C] elects {C,D,A} with three winners (0.05).");
  }
  if (id == "s4") {
    return make("s4", {0.05, 0.10, 0, -1, 0.25}, {3, 3, 4, 4, 4},
                "Disliked candidate D. Tallies as shown to voters (E = 4). The two-winner truthful "
                "vote is worth 0.30 here; 0.15 only holds for the s4-design tallies.");
  }
  if (id == "s4-design") {
    return make("s4-design", {0.05, 0.10, 0, -1, 0.25}, {3, 3, 4, 4, 3},
                "Variant of s4 with E = 3. The two-winner truthful vote is worth 0.15 here and 0.30 "
                "under s4.");
  }
  throw Error(ErrorCode::kNotFound, "no built-in scenario '" + std::string(id) + "'");
}

inline nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  s.validate();
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["candidates"] = s.candidates;
  j["utilities"] = s.utilities.values();
  j["tallies"] = s.base_tallies;
  std::vector<std::string> priority;
  for (std::size_t c : s.lex_priority) priority.push_back(s.candidates[c]);
  j["lex_priority"] = priority;
  j["notes"] = s.notes;
  return j;
}

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const nlohmann::json& require(const nlohmann::json& obj, const char* field, const std::string& where) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    throw Error(ErrorCode::kParse, where + ": missing required field '" + field + "'");
  }
  return *it;
}

inline const nlohmann::json& require_array(const nlohmann::json& obj, const char* field,
                                           const std::string& where) {
  const auto& v = require(obj, field, where);
  if (!v.is_array()) throw Error(ErrorCode::kParse, where + ": field '" + field + "' must be an array");
  return v;
}

}  // namespace detail

/// `where` names the source (a path) in diagnostics.
inline Scenario scenario_from_json(const nlohmann::json& j, const std::string& where = "scenario") {
  if (!j.is_object()) throw Error(ErrorCode::kParse, where + ": top level must be a JSON object");
  static const std::vector<std::string> known = {"id", "candidates", "utilities", "tallies", "lex_priority",
                                                 "notes"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(ErrorCode::kParse, where + ": unknown field '" + key + "'");
    }
  }

  Scenario s;
  const auto& id = detail::require(j, "id", where);
  if (!id.is_string()) throw Error(ErrorCode::kParse, where + ": field 'id' must be a string");
  s.id = id.get<std::string>();

  for (const auto& [i, v] : detail::require_array(j, "candidates", where).items()) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParse, where + ": field 'candidates'[" + i + "] must be a string");
    }
    s.candidates.push_back(v.get<std::string>());
  }

  std::vector<double> utilities;
  for (const auto& [i, v] : detail::require_array(j, "utilities", where).items()) {
    if (!v.is_number()) {
      throw Error(ErrorCode::kParse, where + ": field 'utilities'[" + i + "] must be a number");
    }
    try {
      utilities.push_back(v.get<double>());
      (void)to_micros(utilities.back());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": field 'utilities'[" + i + "]: " + e.what());
    }
  }
  s.utilities = UtilityFunction(utilities);

  for (const auto& [i, v] : detail::require_array(j, "tallies", where).items()) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw Error(ErrorCode::kParse, where + ": field 'tallies'[" + i + "] must be a non-negative integer");
    }
    s.base_tallies.push_back(v.get<std::int64_t>());
  }

  for (const auto& [i, v] : detail::require_array(j, "lex_priority", where).items()) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParse, where + ": field 'lex_priority'[" + i + "] must be a candidate label");
    }
    const auto label = v.get<std::string>();
    const auto it = std::find(s.candidates.begin(), s.candidates.end(), label);
    if (it == s.candidates.end()) {
      throw Error(ErrorCode::kParse, where + ": field 'lex_priority'[" + i + "] names unknown candidate '" +
                                         label + "'");
    }
    s.lex_priority.push_back(static_cast<std::size_t>(it - s.candidates.begin()));
  }

  if (const auto it = j.find("notes"); it != j.end()) {
    if (!it->is_string()) throw Error(ErrorCode::kParse, where + ": field 'notes' must be a string");
    s.notes = it->get<std::string>();
  }

  try {
    s.validate();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kLengthMismatch) throw;
    throw Error(ErrorCode::kParse, where + ": " + e.what());
  }
  return s;
}

inline Scenario parse_scenario(std::string_view text, const std::string& where = "scenario") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, where + ": malformed JSON at " + detail::line_col(text, e.byte) + ": " +
                                       e.what());
  }
  return scenario_from_json(j, where);
}

inline Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

inline void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  const std::string text = scenario_to_json(s).dump(2) + "\n";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

}  // namespace approval

#endif  // APPROVAL_SCENARIO_HPP
