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
 * \file pgjk/cli.hpp
 *
 * \brief The `pgjk` command line: argument parsing and command dispatch.
 *
 * Exit status: 0 on success, 1 on a validation or domain error, 2 on a
 * usage error.
 */

#ifndef PGJK_CLI_HPP
#define PGJK_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgjk/algebra.hpp"
#include "pgjk/average_game.hpp"
#include "pgjk/critical_sets.hpp"
#include "pgjk/game_core.hpp"
#include "pgjk/indices.hpp"
#include "pgjk/io.hpp"
#include "pgjk/report.hpp"

namespace pgjk::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

struct AnalysisRequest {
  std::string command;
  std::vector<std::string> inputs;
  Format format = Format::table;
  CoalitionFamily family = CoalitionFamily::mcc;
  std::optional<std::string> output;
  bool oracle = false;
  std::uint64_t cap = kDefaultTableCap;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "analyze", "mcv", "potential", "merge", "average", "axioms", "embed"};
  return names;
}

namespace detail {

struct Outcome {
  std::string text;
  int code = kOk;
  std::vector<std::string> errors;
};

inline const JKGame& require_jk(const AnyGame& game, const std::string& command) {
  if (const auto* v = std::get_if<JKGame>(&game)) return *v;
  throw GameError(Errc::UnsupportedGameKind,
                  "`" + command + "` needs a (j,k) game (\"kind\": \"jk\")");
}

inline std::string game_kind(const AnyGame& game) {
  switch (game.index()) {
    case 0: return "jk";
    case 1: return "simple";
    default: return "tu";
  }
}

inline std::string describe(const JKGame& v) {
  std::string s = "(" + std::to_string(v.input_levels()) + "," +
                  std::to_string(v.output_levels()) + ") simple game with " +
                  std::to_string(v.players()) + " players\n";
  if (const auto& rule = v.provenance()) {
    s += "weighted rule: weights";
    for (const auto& w : rule->weights) s += " " + to_string(w);
    s += "; thresholds";
    for (const auto& t : rule->thresholds) s += " " + to_string(t);
    s += "\n";
  }
  return s;
}

inline ojson header(const std::string& command, const AnyGame& game) {
  ojson out;
  out["command"] = command;
  out["kind"] = game_kind(game);
  std::visit([&](const auto& g) { out["n"] = g.players(); }, game);
  if (const auto* v = std::get_if<JKGame>(&game)) {
    out["j"] = v->input_levels();
    out["k"] = v->output_levels();
  }
  return out;
}

inline std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

// --- analyze ---------------------------------------------------------------

inline Outcome analyze(const AnyGame& game, const AnalysisRequest& req) {
  Outcome result;
  std::vector<IndexReport> reports;
  std::optional<CriticalListing> listing;
  std::string preface;

  auto normalized = [&](auto&& compute) {
    try {
      reports.push_back(compute());
    } catch (const GameError& e) {
      if (e.code() != Errc::TrivialGame) throw;
      result.errors.push_back(e.what());
      result.code = kDomainError;
    }
  };

  if (const auto* v = std::get_if<JKGame>(&game)) {
    preface = describe(*v);
    reports.push_back(public_good_value_jk(*v));
    reports.push_back(variant_value(*v));
    normalized([&] { return normalized_variant(*v); });
    listing = reports.front().listing;
  } else if (const auto* s = std::get_if<SimpleGame>(&game)) {
    preface = "simple game with " + std::to_string(s->players()) + " players\n";
    reports.push_back(pgi_raw(*s));
    normalized([&] { return pgi_normalized(*s); });
    reports.push_back(pgv_tu(as_tu(*s)));
    listing = reports.front().listing;
  } else {
    const auto& tu = std::get<TUGame>(game);
    preface = "TU game with " + std::to_string(tu.players()) + " players (" +
              (tu.is_monotone() ? "monotone" : "not monotone") + ")\n";
    reports.push_back(pgv_tu(tu, req.family));
    listing = reports.front().listing;
  }

  if (req.format == Format::machine) {
    ojson doc = header("analyze", game);
    if (const auto* tu = std::get_if<TUGame>(&game)) {
      doc["monotone"] = tu->is_monotone();
      doc["family"] = std::string(to_string(req.family));
    }
    doc["players"] = reports.front().labels;
    doc["reports"] = ojson::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r, false));
    doc["potential"] = to_string(reports.front().potential);
    doc["lambda_total"] = to_string(reports.front().lambda_total);
    doc["listing"] = listing_json(*listing);
    doc["errors"] = result.errors;
    result.text = dump(doc);
    return result;
  }

  std::vector<std::string> head = {"player"};
  for (const auto& r : reports) head.emplace_back(to_string(r.kind));
  TextTable t(head);
  const auto& labels = reports.front().labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::vector<std::string> row = {std::to_string(labels[i])};
    for (const auto& r : reports) row.push_back(display(r.player_values[i]));
    t.add(std::move(row));
  }
  result.text = preface + t.str();
  result.text += "potential     " + display(reports.front().potential) + "\n";
  result.text += "lambda_total  " + display(reports.front().lambda_total) + "\n";
  const std::size_t count = std::visit([](const auto& l) { return l.size(); }, *listing);
  result.text += "critical structures  " + std::to_string(count) + "\n";
  return result;
}

// --- mcv -------------------------------------------------------------------

inline Outcome mcv(const AnyGame& game, const AnalysisRequest& req) {
  Outcome result;
  ojson doc = header("mcv", game);
  std::string text;

  if (const auto* v = std::get_if<JKGame>(&game)) {
    const MCVSet fast = minimal_critical_vectors(*v);
    doc["mcv"] = mcv_json(fast);
    text = render_mcv(fast);
    if (req.oracle) {
      const bool agree = minimal_critical_vectors_oracle(*v) == fast;
      doc["oracle_agrees"] = agree;
      text += std::string("oracle: ") + (agree ? "agrees" : "DISAGREES") + "\n";
      if (!agree) result.code = kDomainError;
    }
  } else if (const auto* s = std::get_if<SimpleGame>(&game)) {
    const auto mwc = minimal_winning_coalitions(*s);
    doc["mwc"] = coalitions_json(mwc);
    if (mwc.empty()) {
      text = "no minimal winning coalitions\n";
    } else {
      TextTable t({"coalition"});
      for (Coalition c : mwc) t.add({to_string(c)});
      text = t.str();
    }
  } else {
    const auto& tu = std::get<TUGame>(game);
    const auto sets = req.family == CoalitionFamily::mcc
                          ? minimal_critical_coalitions(tu)
                          : real_gaining_coalitions(tu);
    doc["family"] = std::string(to_string(req.family));
    ojson rows = ojson::array();
    TextTable t({"coalition", "worth"});
    for (Coalition c : sets) {
      ojson row;
      row["coalition"] = c.members();
      row["worth"] = to_string(tu.worth(c));
      rows.push_back(std::move(row));
      t.add({to_string(c), display(tu.worth(c))});
    }
    doc["coalitions"] = std::move(rows);
    text = sets.empty() ? std::string("no ") +
                              (req.family == CoalitionFamily::mcc
                                   ? "minimal critical"
                                   : "real gaining") +
                              " coalitions\n"
                        : t.str();
    if (req.oracle) {
      const bool agree =
          minimal_critical_coalitions(tu) == real_gaining_coalitions(tu);
      doc["mcc_equals_rgc"] = agree;
      text += std::string("mcc = rgc: ") + (agree ? "yes" : "no") +
              (tu.is_monotone() ? " (monotone)" : " (not monotone)") + "\n";
      if (tu.is_monotone() && !agree) result.code = kDomainError;
    }
  }
  result.text = req.format == Format::machine ? dump(doc) : text;
  return result;
}

// --- potential -------------------------------------------------------------

inline Outcome potential(const AnyGame& game, const AnalysisRequest& req) {
  Outcome result;
  ojson doc = header("potential", game);
  std::string text;

  if (const auto* v = std::get_if<JKGame>(&game)) {
    const Rational direct = jk_potential(*v);
    doc["direct"] = to_string(direct);
    text = "direct     " + display(direct) + "\n";
    if (v->players() <= kRecursionMaxPlayers) {
      const Rational recursive = jk_potential_recursive(*v);
      doc["recursive"] = to_string(recursive);
      doc["agree"] = recursive == direct;
      text += "recursive  " + display(recursive) + "\n";
      if (recursive != direct) result.code = kDomainError;
    } else {
      doc["recursive"] = nullptr;
      text += "recursive  skipped (more than " +
              std::to_string(kRecursionMaxPlayers) + " players)\n";
    }
    if (req.oracle) {
      const IndexReport psi = public_good_value_jk(*v);
      bool ok = true;
      for (int p = 1; p <= v->players(); ++p) {
        ok = ok && psi.player_values[p - 1] ==
                       direct - jk_potential(remove_player(*v, p));
      }
      doc["identity_holds"] = ok;
      text += std::string("Psi_i = P(v) - P(v_-i): ") + (ok ? "holds" : "FAILS") + "\n";
      if (!ok) result.code = kDomainError;
    }
  } else {
    const TUGame tu = std::holds_alternative<TUGame>(game)
                          ? std::get<TUGame>(game)
                          : as_tu(std::get<SimpleGame>(game));
    const Rational p = tu_potential(tu);
    doc["direct"] = to_string(p);
    text = "potential  " + display(p) + "\n";
    if (req.oracle && tu.is_monotone()) {
      const IndexReport pgv = pgv_tu(tu);
      bool ok = true;
      for (int i = 1; i <= tu.players(); ++i) {
        ok = ok && pgv.player_values[i - 1] == p - tu_potential(remove_player(tu, i));
      }
      doc["identity_holds"] = ok;
      text += std::string("PGV_i = P(v) - P(v_-i): ") + (ok ? "holds" : "FAILS") + "\n";
      if (!ok) result.code = kDomainError;
    }
  }
  result.text = req.format == Format::machine ? dump(doc) : text;
  return result;
}

// --- merge -----------------------------------------------------------------

inline Outcome merge(const AnyGame& a, const AnyGame& b, const AnalysisRequest& req) {
  Outcome result;
  const JKGame& v = require_jk(a, "merge");
  const JKGame& w = require_jk(b, "merge");
  const MergeReport report = is_mergeable(v, w);
  ojson doc = header("merge", a);
  doc["merge"] = to_json(report);
  std::string text = render(report, Format::table);
  if (report.mergeable) {
    const bool union_ok = mcv_union_check(v, w);
    const JKGame merged = oplus(v, w);
    doc["mcv_union_holds"] = union_ok;
    doc["merged_mcv"] = mcv_json(minimal_critical_vectors(merged));
    text += std::string("MCV(v + w) = MCV(v) disjoint-union MCV(w): ") +
            (union_ok ? "holds" : "FAILS") + "\n";
    text += render_mcv(minimal_critical_vectors(merged));
    if (!union_ok) result.code = kDomainError;
  }
  result.text = req.format == Format::machine ? dump(doc) : text;
  return result;
}

// --- average ---------------------------------------------------------------

inline Outcome average(const AnyGame& game, const AnalysisRequest& req) {
  Outcome result;
  const JKGame& v = require_jk(game, "average");
  const PgvComparison c = compare_pgv_vs_jk(v, req.family, req.cap);
  if (req.format == Format::machine) {
    ojson doc = header("average", game);
    doc["comparison"] = to_json(c);
    result.text = dump(doc);
  } else {
    result.text = render(c, Format::table);
  }
  return result;
}

// --- axioms ----------------------------------------------------------------

inline Outcome axioms(const std::vector<AnyGame>& games, const AnalysisRequest& req) {
  Outcome result;
  const JKGame& v = require_jk(games[0], "axioms");
  const AxiomReport report = games.size() == 2
                                 ? axiom_report(v, require_jk(games[1], "axioms"))
                                 : axiom_report(v);
  if (!report.all_passed()) result.code = kDomainError;
  if (req.format == Format::machine) {
    ojson doc = header("axioms", games[0]);
    doc["axioms"] = to_json(report);
    result.text = dump(doc);
  } else {
    result.text = render(report, Format::table);
  }
  return result;
}

// --- embed -----------------------------------------------------------------

inline Outcome embed(const AnyGame& game) {
  Outcome result;
  if (const auto* s = std::get_if<SimpleGame>(&game)) {
    result.text = dump_game(embed_simple(*s));
  } else if (const auto* v = std::get_if<JKGame>(&game)) {
    result.text = dump_game(embed_2k_as_tu(*v));
  } else {
    throw GameError(Errc::UnsupportedGameKind,
                    "`embed` takes a simple game or a (2,k) game");
  }
  return result;
}

}  // namespace detail

/// Executes a parsed request. Reports go to `out` (or the --output file),
/// diagnostics to `err`.
inline int run(const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
  detail::Outcome outcome;
  try {
    std::vector<AnyGame> games;
    for (const auto& path : req.inputs) games.push_back(load_game(path, req.cap));

    if (req.command == "analyze") {
      outcome = detail::analyze(games[0], req);
    } else if (req.command == "mcv") {
      outcome = detail::mcv(games[0], req);
    } else if (req.command == "potential") {
      outcome = detail::potential(games[0], req);
    } else if (req.command == "merge") {
      outcome = detail::merge(games[0], games[1], req);
    } else if (req.command == "average") {
      outcome = detail::average(games[0], req);
    } else if (req.command == "axioms") {
      outcome = detail::axioms(games, req);
    } else if (req.command == "embed") {
      outcome = detail::embed(games[0]);
    } else {
      err << "error: unknown command `" << req.command << "`\n";
      return kUsageError;
    }
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  if (req.output) {
    std::ofstream file(*req.output, std::ios::binary);
    if (!file || !(file << outcome.text)) {
      err << "error: cannot write " << *req.output << "\n";
      return kDomainError;
    }
  } else {
    out << outcome.text;
  }
  for (const auto& e : outcome.errors) err << "error: " << e << "\n";
  return outcome.code;
}

/// Parses the command line (args[0] is the program name) and runs it.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Public Good values for simple, TU and (j,k) simple games", "pgjk"};
  app.require_subcommand(1);

  AnalysisRequest req;
  std::string format = "table";
  std::string family = "mcc";
  std::string output;

  for (const auto& name : commands()) {
    const bool two_games = name == "merge" || name == "axioms";
    CLI::App* sub = app.add_subcommand(name, [&] {
      if (name == "analyze") return "all index reports for the game";
      if (name == "mcv") return "minimal critical vectors / coalitions";
      if (name == "potential") return "direct and recursive potential";
      if (name == "merge") return "mergeability of two (j,k) games";
      if (name == "average") return "average TU game and value comparison";
      if (name == "axioms") return "axiom checks for the normalized variant";
      return "(2,2) or TU embedding of a game";
    }());
    auto* inputs = sub->add_option("inputs", req.inputs, "game file(s)")->required();
    if (name == "merge") {
      inputs->expected(2);
    } else if (two_games) {
      inputs->expected(1, 2);
    } else {
      inputs->expected(1);
    }
    sub->add_option("--format", format, "table or machine")
        ->check(CLI::IsMember({"table", "machine"}));
    sub->add_option("--family", family, "TU coalition family: mcc or rgc")
        ->check(CLI::IsMember({"mcc", "rgc"}));
    sub->add_option("--output", output, "write the report to a file");
    sub->add_flag("--oracle", req.oracle, "cross-check with brute-force oracles");
    sub->add_option("--cap", req.cap, "enumeration cap on j^n")
        ->check(CLI::PositiveNumber);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  req.command = app.get_subcommands().front()->get_name();
  req.format = format == "machine" ? Format::machine : Format::table;
  req.family = family == "rgc" ? CoalitionFamily::rgc : CoalitionFamily::mcc;
  if (!output.empty()) req.output = output;
  return run(req, out, err);
}

}  // namespace pgjk::cli

#endif  // PGJK_CLI_HPP
