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
 * \file pgjk/report.hpp
 *
 * \brief Text rendering of reports, as aligned tables or as JSON.
 *
 * Machine output is JSON with a fixed key order and rationals as "p/q"
 * strings. Table output may append a decimal approximation in parentheses.
 */

#ifndef PGJK_REPORT_HPP
#define PGJK_REPORT_HPP

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pgjk/algebra.hpp"
#include "pgjk/average_game.hpp"
#include "pgjk/critical_sets.hpp"
#include "pgjk/indices.hpp"
#include "pgjk/io.hpp"

namespace pgjk {

enum class Format { table, machine };

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Column layout

/// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) {
    rows_.push_back(std::move(header));
  }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

/// "p/q (0.1234)" for fractions, "p" for integers.
inline std::string display(const Rational& r) {
  std::string s = to_string(r);
  if (boost::multiprecision::denominator(r) != 1) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.4g)", to_double(r));
    s += buf;
  }
  return s;
}

// ---------------------------------------------------------------------------
// JSON fragments

inline ojson rationals_json(const std::vector<Rational>& values) {
  ojson out = ojson::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline ojson mcv_json(const MCVSet& mcv) {
  ojson out = ojson::array();
  for (const auto& e : mcv) {
    ojson row;
    row["profile"] = e.profile.levels();
    row["worth"] = e.worth;
    out.push_back(std::move(row));
  }
  return out;
}

inline ojson coalitions_json(const std::vector<Coalition>& sets) {
  ojson out = ojson::array();
  for (Coalition s : sets) out.push_back(s.members());
  return out;
}

inline ojson listing_json(const CriticalListing& listing) {
  return std::visit(
      [](const auto& l) -> ojson {
        if constexpr (std::is_same_v<std::decay_t<decltype(l)>, MCVSet>) {
          return mcv_json(l);
        } else {
          return coalitions_json(l);
        }
      },
      listing);
}

inline ojson to_json(const IndexReport& report, bool with_listing = true) {
  ojson out;
  out["variant"] = std::string(to_string(report.kind));
  out["players"] = report.labels;
  out["values"] = rationals_json(report.player_values);
  out["potential"] = to_string(report.potential);
  out["lambda_total"] = to_string(report.lambda_total);
  if (with_listing) out["listing"] = listing_json(report.listing);
  return out;
}

inline ojson to_json(const MergeReport& report) {
  ojson out;
  out["mergeable"] = report.mergeable;
  out["violations"] = ojson::array();
  for (const auto& v : report.violations) {
    ojson row;
    row["x"] = v.x.levels();
    row["x_prime"] = v.x_prime.levels();
    row["clause"] = std::string(to_string(v.clause));
    out["violations"].push_back(std::move(row));
  }
  return out;
}

inline ojson to_json(const AxiomReport& report) {
  ojson out = ojson::array();
  for (const auto& a : report.verdicts) {
    ojson row;
    row["axiom"] = a.axiom;
    row["status"] = std::string(to_string(a.status));
    row["detail"] = a.detail;
    out.push_back(std::move(row));
  }
  return out;
}

inline ojson to_json(const PgvComparison& c) {
  ojson out;
  out["average_game"] = to_json(c.average.tu);
  out["scale"] = to_string(c.average.scale);
  out["pgv_of_average"] = rationals_json(c.pgv_of_average.player_values);
  out["jk_value"] = rationals_json(c.jk_value.player_values);
  out["variant"] = rationals_json(c.variant.player_values);
  out["equal_after_normalization"] = c.equal_after_normalization;
  out["degenerate"] = c.degenerate;
  return out;
}

// ---------------------------------------------------------------------------
// Text

inline std::string render_mcv(const MCVSet& mcv) {
  if (mcv.empty()) return "no minimal critical vectors\n";
  TextTable t({"vector", "worth"});
  for (const auto& e : mcv) t.add({to_string(e.profile), std::to_string(e.worth)});
  return t.str();
}

inline std::string render(const IndexReport& report, Format format) {
  if (format == Format::machine) return to_json(report).dump(2) + "\n";
  TextTable t({"player", std::string(to_string(report.kind))});
  for (std::size_t i = 0; i < report.player_values.size(); ++i) {
    t.add({std::to_string(report.labels[i]), display(report.player_values[i])});
  }
  std::string out = t.str();
  out += "potential     " + display(report.potential) + "\n";
  out += "lambda_total  " + display(report.lambda_total) + "\n";
  return out;
}

inline std::string render(const MCVSet& mcv, Format format) {
  if (format == Format::machine) return mcv_json(mcv).dump(2) + "\n";
  return render_mcv(mcv);
}

inline std::string render(const MergeReport& report, Format format) {
  if (format == Format::machine) return to_json(report).dump(2) + "\n";
  std::string out = report.mergeable ? "mergeable\n" : "not mergeable\n";
  if (!report.violations.empty()) {
    TextTable t({"x", "x'", "clause"});
    for (const auto& v : report.violations) {
      t.add({to_string(v.x), to_string(v.x_prime), std::string(to_string(v.clause))});
    }
    out += t.str();
  }
  return out;
}

inline std::string render(const AxiomReport& report, Format format) {
  if (format == Format::machine) return to_json(report).dump(2) + "\n";
  TextTable t({"axiom", "status", "detail"});
  for (const auto& a : report.verdicts) {
    t.add({a.axiom, std::string(to_string(a.status)), a.detail});
  }
  return t.str();
}

inline std::string render(const AverageGameResult& average, Format format) {
  if (format == Format::machine) return to_json(average.tu).dump(2) + "\n";
  TextTable t({"coalition", "worth"});
  t.add({"{}", "0"});
  for (Coalition s : canonical_coalition_order(average.tu.players())) {
    t.add({to_string(s), display(average.tu.worth(s))});
  }
  return t.str();
}

inline std::string render(const PgvComparison& c, Format format) {
  if (format == Format::machine) return to_json(c).dump(2) + "\n";
  std::string out = render(c.average, Format::table);
  out += "\n";
  TextTable t({"player", "pgv_of_average", "jk_value", "variant"});
  for (std::size_t i = 0; i < c.jk_value.player_values.size(); ++i) {
    t.add({std::to_string(c.jk_value.labels[i]),
           display(c.pgv_of_average.player_values[i]),
           display(c.jk_value.player_values[i]),
           display(c.variant.player_values[i])});
  }
  out += t.str();
  if (c.degenerate) {
    out += "comparison degenerate: a value vector is identically zero\n";
  } else {
    out += std::string("equal after normalization: ") +
           (c.equal_after_normalization ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace pgjk

#endif  // PGJK_REPORT_HPP
