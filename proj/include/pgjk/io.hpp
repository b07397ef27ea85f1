// Copyright 2026 The pgjk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * \file pgjk/io.hpp
 *
 * \brief JSON game files.
 *
 * \code
 * { "kind": "jk", "n": 3, "j": 3, "k": 3, "table": [0, 0, ...] }
 * { "kind": "jk", "n": 3, "j": 3, "k": 3,
 *   "weighted": { "weights": ["3", "2", "1"], "thresholds": ["7", "12"] } }
 * { "kind": "simple", "n": 3, "winning": [[1], [2, 3]] }
 * { "kind": "tu", "n": 2, "worth": { "1": "1/2", "2": "0", "1,2": "1" } }
 * \endcode
 *
 * Tables are in profile-index order. Simple games list generators and are
 * closed upward. TU keys are comma-separated 1-based members; the empty
 * coalition may be omitted. Rationals are "p/q" strings, or "p" / plain
 * integers when the denominator is 1.
 */

#ifndef PGJK_IO_HPP
#define PGJK_IO_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pgjk/critical_sets.hpp"
#include "pgjk/errors.hpp"
#include "pgjk/game_core.hpp"
#include "pgjk/rational.hpp"

namespace pgjk {

using AnyGame = std::variant<JKGame, SimpleGame, TUGame>;

namespace detail {

using nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& where,
                                      const std::string& what) {
  throw GameError(Errc::ParseError, where + ": " + what);
}

inline const json& field(const json& doc, const char* name,
                         const std::string& where) {
  if (!doc.is_object() || !doc.contains(name)) {
    schema_error(where, std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

inline int int_field(const json& doc, const char* name,
                     const std::string& where) {
  const json& value = field(doc, name, where);
  if (!value.is_number_integer()) {
    schema_error(where, std::string("\"") + name + "\" must be an integer");
  }
  return value.get<int>();
}

inline Rational rational_of(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const GameError& e) {
      schema_error(where, e.what());
    }
  }
  schema_error(where, "expected an exact rational (\"p/q\" or an integer), got " +
                          value.dump());
}

inline std::vector<Rational> rationals_of(const json& value,
                                          const std::string& where) {
  if (!value.is_array()) schema_error(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_of(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline Coalition coalition_of(const json& members, const std::string& where) {
  if (!members.is_array()) schema_error(where, "a coalition is an array of players");
  std::vector<int> players;
  for (const auto& p : members) {
    if (!p.is_number_integer()) schema_error(where, "players are integers");
    players.push_back(p.get<int>());
  }
  return Coalition::of(players);
}

inline Coalition coalition_of_key(const std::string& key,
                                  const std::string& where) {
  std::vector<int> players;
  std::stringstream in(key);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(' ');
    const auto last = token.find_last_not_of(' ');
    if (first == std::string::npos) schema_error(where, "empty member in \"" + key + "\"");
    token = token.substr(first, last - first + 1);
    if (!is_integer_literal(token) || token.front() == '-' || token.front() == '+') {
      schema_error(where, "bad member \"" + token + "\" in key \"" + key + "\"");
    }
    players.push_back(std::stoi(token));
  }
  return Coalition::of(players);
}

}  // namespace detail

inline AnyGame game_from_json(const nlohmann::json& doc,
                              std::uint64_t cap = kDefaultTableCap) {
  using detail::schema_error;
  const std::string where = "game";
  const nlohmann::json& kind = detail::field(doc, "kind", where);
  if (!kind.is_string()) schema_error(where, "\"kind\" must be a string");
  const std::string k_name = kind.get<std::string>();
  const int n = detail::int_field(doc, "n", where);

  if (k_name == "jk") {
    const int j = detail::int_field(doc, "j", where);
    const int k = detail::int_field(doc, "k", where);
    const bool has_table = doc.contains("table");
    const bool has_weighted = doc.contains("weighted");
    if (has_table == has_weighted) {
      schema_error(where, "a jk game needs exactly one of \"table\" and \"weighted\"");
    }
    if (has_table) {
      const auto& t = doc.at("table");
      if (!t.is_array()) schema_error("table", "expected an array");
      std::vector<Level> table;
      table.reserve(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_number_integer()) {
          schema_error("table[" + std::to_string(i) + "]", "expected an integer");
        }
        table.push_back(t[i].get<Level>());
      }
      return make_table_game(n, j, k, std::move(table), cap);
    }
    const auto& w = doc.at("weighted");
    auto weights = detail::rationals_of(detail::field(w, "weights", "weighted"),
                                        "weighted.weights");
    auto thresholds = detail::rationals_of(
        detail::field(w, "thresholds", "weighted"), "weighted.thresholds");
    if (weights.size() != static_cast<std::size_t>(n)) {
      throw GameError(Errc::ArityMismatch,
                      "n = " + std::to_string(n) + " but " +
                          std::to_string(weights.size()) + " weights");
    }
    return make_weighted_game(std::move(weights), std::move(thresholds), j, k,
                              cap);
  }

  if (k_name == "simple") {
    const auto& winning = detail::field(doc, "winning", where);
    if (!winning.is_array()) schema_error("winning", "expected an array");
    std::vector<Coalition> generators;
    for (std::size_t i = 0; i < winning.size(); ++i) {
      generators.push_back(detail::coalition_of(
          winning[i], "winning[" + std::to_string(i) + "]"));
    }
    return make_simple_game(n, generators, Closure::upward, cap);
  }

  if (k_name == "tu") {
    const auto& worth = detail::field(doc, "worth", where);
    if (!worth.is_object()) schema_error("worth", "expected an object");
    std::map<Coalition, Rational> table;
    for (const auto& [key, value] : worth.items()) {
      const std::string at = "worth[\"" + key + "\"]";
      const Coalition s = detail::coalition_of_key(key, at);
      if (!table.emplace(s, detail::rational_of(value, at)).second) {
        schema_error(at, "coalition " + to_string(s) + " given twice");
      }
    }
    return make_tu_game(n, table, cap);
  }

  schema_error(where, "unknown kind \"" + k_name + "\"");
}

/// Reads a game file. Syntax errors carry the path and byte offset.
inline AnyGame load_game(const std::filesystem::path& path,
                         std::uint64_t cap = kDefaultTableCap) {
  std::ifstream in(path);
  if (!in) {
    throw GameError(Errc::ParseError, path.string() + ": cannot open file");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw GameError(Errc::ParseError, path.string() + " at byte " +
                                          std::to_string(e.byte) + ": " +
                                          e.what());
  }
  try {
    return game_from_json(doc, cap);
  } catch (const GameError& e) {
    if (e.code() != Errc::ParseError) throw;
    throw GameError(Errc::ParseError, path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const JKGame& game) {
  nlohmann::ordered_json doc;
  doc["kind"] = "jk";
  doc["n"] = game.players();
  doc["j"] = game.input_levels();
  doc["k"] = game.output_levels();
  if (const auto& rule = game.provenance()) {
    nlohmann::ordered_json weighted;
    weighted["weights"] = nlohmann::ordered_json::array();
    for (const auto& w : rule->weights) weighted["weights"].push_back(to_string(w));
    weighted["thresholds"] = nlohmann::ordered_json::array();
    for (const auto& t : rule->thresholds) {
      weighted["thresholds"].push_back(to_string(t));
    }
    doc["weighted"] = std::move(weighted);
  } else {
    doc["table"] = std::vector<Level>(game.table().begin(), game.table().end());
  }
  return doc;
}

/// Writes the minimal winning coalitions as generators.
inline nlohmann::ordered_json to_json(const SimpleGame& game) {
  nlohmann::ordered_json doc;
  doc["kind"] = "simple";
  doc["n"] = game.players();
  doc["winning"] = nlohmann::ordered_json::array();
  for (Coalition s : minimal_winning_coalitions(game)) {
    doc["winning"].push_back(s.members());
  }
  return doc;
}

/// Canonical key order: by size, then lexicographic by members.
inline std::vector<Coalition> canonical_coalition_order(int n) {
  std::vector<Coalition> order;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    order.emplace_back(mask);
  }
  std::sort(order.begin(), order.end(), [](Coalition a, Coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return order;
}

inline std::string coalition_key(Coalition s) {
  std::string key;
  for (int p : s.members()) key += (key.empty() ? "" : ",") + std::to_string(p);
  return key;
}

inline nlohmann::ordered_json to_json(const TUGame& game) {
  nlohmann::ordered_json doc;
  doc["kind"] = "tu";
  doc["n"] = game.players();
  nlohmann::ordered_json worth = nlohmann::ordered_json::object();
  for (Coalition s : canonical_coalition_order(game.players())) {
    worth[coalition_key(s)] = to_string(game.worth(s));
  }
  doc["worth"] = std::move(worth);
  return doc;
}

inline nlohmann::ordered_json to_json(const AnyGame& game) {
  return std::visit([](const auto& g) { return to_json(g); }, game);
}

inline std::string dump_game(const AnyGame& game) {
  return to_json(game).dump(2) + "\n";
}

}  // namespace pgjk

#endif  // PGJK_IO_HPP
