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

#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "approval/approval.hpp"

namespace approval::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string scenario;
  std::size_t k = 2;
  std::string tiebreak;
  std::string ballot;
  bool table = false;
  std::string format = "text";
  std::string r_list = "0";
  std::string sweep_r_list = "0,1,2,3";
  double p = 0.5;
  std::string ballots_path;
  bool header = false;
  bool lenient = false;
  std::string out_path;
  std::string show_id;
  std::string export_id;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return kExitUnknownReference;
    case ErrorCode::kIo: return kExitIo;
    default: return kExitInput;
  }
}

Scenario resolve_scenario(const std::string& ref) {
  if (is_builtin(ref)) return builtin(ref);
  std::error_code ec;
  if (!ref.empty() && std::filesystem::is_regular_file(ref, ec)) return load_scenario(ref);
  throw Error(ErrorCode::kNotFound, "unknown scenario '" + ref + "' (neither a built-in id nor a file)");
}

TieBreakKind parse_tiebreak(const std::string& text) {
  if (text == "lex" || text == "lexicographic") return TieBreakKind::kLexicographic;
  if (text == "random") return TieBreakKind::kRandomUniform;
  throw Error(ErrorCode::kParse, "tie-break must be 'lex' or 'random', got '" + text + "'");
}

std::vector<int> parse_r_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size() || value < 0) {
      throw Error(ErrorCode::kParse, "remaining-voter list must be non-negative integers, got '" + text + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw Error(ErrorCode::kParse, "empty remaining-voter list");
  return values;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

/// Drops spaces left at line ends by column padding.
std::string trim_line_ends(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '\n') {
      while (!out.empty() && out.back() == ' ') out.pop_back();
    }
    out += ch;
  }
  return out;
}

/// Six decimals with trailing zeros trimmed down to two ("0.30", "-0.0375").
std::string format_short(double value) {
  std::string s = format_utility(value);
  while (s.size() > 1 && s.back() == '0' && s.size() - s.find('.') > 3) s.pop_back();
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> profiles(const std::vector<Ballot>& ballots, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(ballots.size());
  for (Ballot b : ballots) out.push_back(format_set(b, labels));
  return out;
}

// --- eval ------------------------------------------------------------------

struct TableRow {
  std::string strategy;
  Ballot ballot;
};

int print_table(const Scenario& s, const Options& opt, std::ostream& out) {
  std::vector<std::size_t> ks;
  for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
    if (k <= s.candidates.size()) ks.push_back(k);
  }
  const UtilityFunction& u = s.utilities;
  const ElectionState base = s.state(0);

  std::vector<TableRow> rows;
  const Ballot honest = truthful(u);
  rows.push_back({"Truthful", honest});
  const Ballot nontrivial = truthful_nontrivial(u);
  if (nontrivial != honest) rows.push_back({"Truthful, nontrivial (truth*)", nontrivial});
  for (int x = 1; x < max_x(u); ++x) {
    rows.push_back({"Take the X best (X=" + std::to_string(x) + ")", take_x_best(u, x, base)});
  }
  rows.push_back({"Follow the Leader", follow_the_leader(base)});
  for (Ballot b : leader_plus_best(base, u)) rows.push_back({"Follow the Leader + Take the best", b});

  std::vector<BestResponse> best;
  for (std::size_t k : ks) best.push_back(best_response(s.state(k), u));

  auto value_of = [&](Ballot b, std::size_t col) {
    return expected_outcome_utility(apply_ballot(s.state(ks[col]), b), u);
  };
  auto is_optimal = [&](double v, std::size_t col) {
    return !best[col].degenerate() && tied(v, best[col].value);
  };

  if (opt.format == "json") {
    json j;
    j["scenario"] = s.id;
    j["tiebreak"] = "lex";
    j["columns"] = ks;
    json jrows = json::array();
    for (const auto& row : rows) {
      json r;
      r["strategy"] = row.strategy;
      r["profile"] = join_labels(row.ballot, s.candidates);
      json values = json::object();
      json optimal = json::object();
      for (std::size_t col = 0; col < ks.size(); ++col) {
        const double v = value_of(row.ballot, col);
        values[std::to_string(ks[col])] = v;
        optimal[std::to_string(ks[col])] = is_optimal(v, col);
      }
      r["values"] = values;
      r["optimal"] = optimal;
      jrows.push_back(r);
    }
    j["rows"] = jrows;
    json jbest = json::object();
    for (std::size_t col = 0; col < ks.size(); ++col) {
      json b;
      b["value"] = best[col].value;
      b["degenerate"] = best[col].degenerate();
      std::vector<std::string> argmax;
      for (Ballot ballot : best[col].argmax) argmax.push_back(join_labels(ballot, s.candidates));
      b["argmax"] = argmax;
      jbest[std::to_string(ks[col])] = b;
    }
    j["best_response"] = jbest;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  std::ostringstream text;
  text << "Scenario " << s.id << " (lexicographic tie-break, focal voter votes last)\n\n";
  text << pad("Candidates:", 14);
  for (const auto& c : s.candidates) text << pad(c, 8);
  text << '\n' << pad("Utilities:", 14);
  for (std::size_t c = 0; c < s.candidates.size(); ++c) text << pad(format_short(u.value(c)), 8);
  text << '\n' << pad("Vote totals:", 14);
  for (auto t : s.base_tallies) text << pad(std::to_string(t), 8);
  text << "\n\n";

  constexpr std::size_t kStrategyWidth = 36;
  constexpr std::size_t kProfileWidth = 14;
  text << pad("Strategy", kStrategyWidth) << pad("Profile", kProfileWidth);
  for (std::size_t k : ks) text << pad("k=" + std::to_string(k), 10);
  text << '\n';
  for (const auto& row : rows) {
    text << pad(row.strategy, kStrategyWidth) << pad(format_set(row.ballot, s.candidates), kProfileWidth);
    for (std::size_t col = 0; col < ks.size(); ++col) {
      const double v = value_of(row.ballot, col);
      text << pad(format_short(v) + (is_optimal(v, col) ? "*" : ""), 10);
    }
    text << '\n';
  }
  text << pad("Optimal (best response)", kStrategyWidth) << pad("", kProfileWidth);
  for (std::size_t col = 0; col < ks.size(); ++col) {
    text << pad(best[col].degenerate() ? "-" : format_short(best[col].value), 10);
  }
  text << "\n\n* optimal: attains the best-response value\n";
  for (std::size_t col = 0; col < ks.size(); ++col) {
    text << "k=" << ks[col] << " best responses: ";
    if (best[col].degenerate()) {
      text << "every ballot yields " << format_short(best[col].value) << " (no optimal profile)\n";
    } else {
      text << join(profiles(best[col].argmax, s.candidates), " ") << '\n';
    }
  }
  out << trim_line_ends(text.str());
  return kExitOk;
}

int cmd_eval(const Options& opt, bool ballot_given, std::ostream& out) {
  const Scenario s = resolve_scenario(opt.scenario);
  if (opt.table) return print_table(s, opt, out);

  const ElectionState lex = s.state(opt.k, TieBreakKind::kLexicographic);
  const ElectionState rnd = s.state(opt.k, TieBreakKind::kRandomUniform);
  std::vector<PanelEntry> rows = strategy_panel(s, opt.k, opt.p);
  if (ballot_given) rows.push_back({"ballot", parse_ballot(opt.ballot, s.candidates)});

  if (opt.format == "json") {
    json j;
    j["scenario"] = s.id;
    j["k"] = opt.k;
    json jrows = json::array();
    for (const auto& row : rows) {
      json r;
      r["strategy"] = row.label;
      r["profile"] = join_labels(row.ballot, s.candidates);
      r["lex_utility"] = expected_outcome_utility(apply_ballot(lex, row.ballot), s.utilities);
      r["random_utility"] = expected_outcome_utility(apply_ballot(rnd, row.ballot), s.utilities);
      jrows.push_back(r);
    }
    j["rows"] = jrows;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "scenario " << s.id << ", k=" << opt.k << '\n';
  out << pad("strategy", 12) << pad("profile", 14) << pad("lex", 12) << "random\n";
  for (const auto& row : rows) {
    out << pad(row.label, 12) << pad(format_set(row.ballot, s.candidates), 14)
        << pad(format_utility(expected_outcome_utility(apply_ballot(lex, row.ballot), s.utilities)), 12)
        << format_utility(expected_outcome_utility(apply_ballot(rnd, row.ballot), s.utilities)) << '\n';
  }
  return kExitOk;
}

// --- best-response ---------------------------------------------------------

int cmd_best_response(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt.scenario);
  const TieBreakKind tb = parse_tiebreak(opt.tiebreak.empty() ? "lex" : opt.tiebreak);
  const std::vector<int> rs = parse_r_list(opt.r_list);
  const ElectionState state = s.state(opt.k, tb);

  json jall = json::array();
  for (int r : rs) {
    const BestResponse br = best_response(state, s.utilities, FutureModel{r, opt.p});
    if (opt.format == "json") {
      json j;
      j["scenario"] = s.id;
      j["k"] = opt.k;
      j["tiebreak"] = std::string(to_string(tb));
      j["r"] = r;
      j["p"] = opt.p;
      j["value"] = br.value;
      j["canonical"] = join_labels(br.canonical(), s.candidates);
      std::vector<std::string> argmax;
      for (Ballot b : br.argmax) argmax.push_back(join_labels(b, s.candidates));
      j["argmax"] = argmax;
      j["degenerate"] = br.degenerate();
      jall.push_back(j);
      continue;
    }
    out << "scenario " << s.id << ", k=" << opt.k << ", tiebreak=" << to_string(tb) << ", r=" << r
        << ", p=" << format_probability(opt.p) << '\n';
    out << "  max expected utility: " << format_utility(br.value) << '\n';
    out << "  canonical ballot: " << format_set(br.canonical(), s.candidates) << '\n';
    out << "  maximizers (" << br.argmax.size() << " of " << br.searched
        << "): " << join(profiles(br.argmax, s.candidates), " ") << '\n';
  }
  if (opt.format == "json") out << (jall.size() == 1 ? jall[0] : jall).dump(2) << '\n';
  return kExitOk;
}

// --- classify --------------------------------------------------------------

int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err) {
  const Scenario s = resolve_scenario(opt.scenario);
  const TieBreakKind tb = parse_tiebreak(opt.tiebreak.empty() ? "lex" : opt.tiebreak);
  const ElectionState state = s.state(opt.k, tb);

  std::ifstream in(opt.ballots_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open ballots file '" + opt.ballots_path + "'");

  struct Row {
    std::size_t line;
    Ballot ballot;
    ClassificationResult result;
  };
  std::vector<Row> rows;
  std::vector<std::string> errors;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (line == 1 && text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
    if (line == 1 && opt.header) continue;
    std::string cleaned;
    for (char ch : text) {
      if (ch != '"') cleaned += ch;
    }
    try {
      const Ballot b = parse_ballot(cleaned, s.candidates);
      rows.push_back({line, b, classify(b, state, s.utilities)});
    } catch (const Error& e) {
      const std::string msg = "row " + std::to_string(line) + ": " + e.what();
      if (!opt.lenient) throw Error(ErrorCode::kParse, msg);
      errors.push_back(msg);
      err << "warning: skipping " << msg << '\n';
    }
  }

  std::map<std::string, std::size_t> label_counts;
  std::vector<std::pair<Ballot, std::size_t>> profile_counts;
  for (const auto& row : rows) {
    for (const auto& kind : row.result.labels) ++label_counts[kind.label()];
    auto it = std::find_if(profile_counts.begin(), profile_counts.end(),
                           [&](const auto& pc) { return pc.first == row.ballot; });
    if (it == profile_counts.end()) {
      profile_counts.emplace_back(row.ballot, 1);
    } else {
      ++it->second;
    }
  }
  std::stable_sort(profile_counts.begin(), profile_counts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return canonical_less(a.first, b.first);
  });
  // Label order follows the classifier's display order.
  std::vector<std::pair<std::string, std::size_t>> ordered_labels;
  {
    std::vector<StrategyKind> kinds;
    for (const auto& row : rows) {
      for (const auto& kind : row.result.labels) {
        if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) kinds.push_back(kind);
      }
    }
    std::sort(kinds.begin(), kinds.end());
    for (const auto& kind : kinds) ordered_labels.emplace_back(kind.label(), label_counts[kind.label()]);
  }
  const double total = static_cast<double>(rows.size());
  auto share = [&](std::size_t n) { return total == 0 ? 0.0 : static_cast<double>(n) / total; };

  if (opt.format == "json") {
    json j;
    j["scenario"] = s.id;
    j["k"] = opt.k;
    j["tiebreak"] = std::string(to_string(tb));
    json jrows = json::array();
    for (const auto& row : rows) {
      json r;
      r["row"] = row.line;
      r["profile"] = join_labels(row.ballot, s.candidates);
      std::vector<std::string> labels;
      for (const auto& kind : row.result.labels) labels.push_back(kind.label());
      r["labels"] = labels;
      jrows.push_back(r);
    }
    j["rows"] = jrows;
    json jlabels = json::array();
    for (const auto& [label, n] : ordered_labels) jlabels.push_back({{"label", label}, {"count", n}, {"share", share(n)}});
    j["label_frequencies"] = jlabels;
    json jprofiles = json::array();
    for (const auto& [b, n] : profile_counts) {
      jprofiles.push_back({{"profile", join_labels(b, s.candidates)},
                           {"count", n},
                           {"share", share(n)},
                           {"labels", classify(b, state, s.utilities).joined()}});
    }
    j["profile_frequencies"] = jprofiles;
    j["errors"] = errors;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "row,profile,labels\n";
  for (const auto& row : rows) {
    out << row.line << ",\"" << join_labels(row.ballot, s.candidates) << "\"," << row.result.joined() << '\n';
  }
  out << "\nlabel,count,share\n";
  for (const auto& [label, n] : ordered_labels) out << label << ',' << n << ',' << format_utility(share(n)) << '\n';
  out << "\nprofile,count,share,labels\n";
  for (const auto& [b, n] : profile_counts) {
    out << '"' << join_labels(b, s.candidates) << "\"," << n << ',' << format_utility(share(n)) << ','
        << classify(b, state, s.utilities).joined() << '\n';
  }
  if (!errors.empty()) out << "\nskipped rows: " << errors.size() << '\n';
  return kExitOk;
}

// --- sweep -----------------------------------------------------------------

int cmd_sweep(const Options& opt, std::ostream& out) {
  const Scenario s = resolve_scenario(opt.scenario);
  const std::vector<int> rs = parse_r_list(opt.sweep_r_list);
  const std::vector<SweepRow> rows = sweep(s, opt.k, rs, opt.p);
  const auto panel = strategy_panel(s, opt.k, opt.p);
  const ElectionState state = s.state(opt.k, TieBreakKind::kRandomUniform);

  std::vector<int> sorted_rs = rs;
  std::sort(sorted_rs.begin(), sorted_rs.end());
  std::vector<std::pair<int, std::vector<Ballot>>> max_ballots;
  for (int r : sorted_rs) max_ballots.emplace_back(r, best_response(state, s.utilities, FutureModel{r, opt.p}).argmax);

  if (!opt.out_path.empty()) {
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIo, "cannot write '" + opt.out_path + "'");
    file << csv.str();
    file.close();
    if (!file) throw Error(ErrorCode::kIo, "write failed for '" + opt.out_path + "'");
  }

  if (opt.format == "json") {
    json j;
    j["scenario"] = s.id;
    j["k"] = opt.k;
    j["p"] = opt.p;
    json jpanel = json::object();
    for (const auto& e : panel) jpanel[e.label] = join_labels(e.ballot, s.candidates);
    j["panel"] = jpanel;
    json jmax = json::object();
    for (const auto& [r, ballots] : max_ballots) {
      std::vector<std::string> names;
      for (Ballot b : ballots) names.push_back(join_labels(b, s.candidates));
      jmax[std::to_string(r)] = names;
    }
    j["max_argmax"] = jmax;
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back({{"scenario", row.scenario_id},
                       {"k", row.k},
                       {"strategy", row.strategy},
                       {"r", row.r},
                       {"p", row.p},
                       {"expected_utility", row.expected_utility}});
    }
    j["rows"] = jrows;
    if (!opt.out_path.empty()) j["output"] = opt.out_path;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  if (opt.out_path.empty()) {
    write_sweep_csv(out, rows);
    return kExitOk;
  }
  out << "wrote " << rows.size() << " rows to " << opt.out_path << '\n';
  out << "panel:";
  for (const auto& e : panel) out << ' ' << e.label << '=' << format_set(e.ballot, s.candidates);
  out << '\n';
  for (const auto& [r, ballots] : max_ballots) {
    out << "Max r=" << r << ": " << join(profiles(ballots, s.candidates), " ") << '\n';
  }
  return kExitOk;
}

// --- scenarios -------------------------------------------------------------

int cmd_scenarios(const Options& opt, std::ostream& out) {
  if (!opt.show_id.empty()) {
    out << scenario_to_json(resolve_scenario(opt.show_id)).dump(2) << '\n';
    return kExitOk;
  }
  if (!opt.export_id.empty()) {
    if (opt.out_path.empty()) throw Error(ErrorCode::kParse, "--export needs --out PATH");
    save_scenario(resolve_scenario(opt.export_id), opt.out_path);
    out << "wrote " << opt.export_id << " to " << opt.out_path << '\n';
    return kExitOk;
  }
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& id : builtin_ids()) j.push_back(scenario_to_json(builtin(id)));
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& id : builtin_ids()) {
    const Scenario s = builtin(id);
    out << pad(id, 11) << "u=(";
    for (std::size_t c = 0; c < s.candidates.size(); ++c) out << (c ? "," : "") << format_short(s.utilities.value(c));
    out << ") t=(";
    for (std::size_t c = 0; c < s.candidates.size(); ++c) out << (c ? "," : "") << s.base_tallies[c];
    out << ")  " << s.notes << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-winner approval voting: strategies, best responses and expected utilities"};
  app.require_subcommand(1);
  Options opt;

  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario,-s", opt.scenario, "built-in id (s1, s2, s3, s4, s4-design) or JSON file")
        ->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate panel strategies and an optional ballot");
  add_scenario(eval);
  eval->add_option("--k", opt.k, "number of seats")->check(CLI::NonNegativeNumber);
  auto* ballot_opt = eval->add_option("--ballot,-b", opt.ballot, "comma-separated labels; \"\" abstains");
  eval->add_flag("--table", opt.table, "print the two/three-winner strategy table");
  eval->add_option("--p", opt.p, "approval probability used to break Max* ties")->check(CLI::Range(0.0, 1.0));
  add_format(eval);

  auto* br = app.add_subcommand("best-response", "exhaustive best response");
  add_scenario(br);
  br->add_option("--k", opt.k, "number of seats")->check(CLI::NonNegativeNumber);
  br->add_option("--tiebreak", opt.tiebreak, "lex (default) or random");
  br->add_option("--r", opt.r_list, "remaining voters, e.g. 0 or 0,1,2,3");
  br->add_option("--p", opt.p, "per-candidate approval probability of a remaining voter")
      ->check(CLI::Range(0.0, 1.0));
  add_format(br);

  auto* cls = app.add_subcommand("classify", "label each ballot in a CSV file");
  add_scenario(cls);
  cls->add_option("--k", opt.k, "number of seats")->check(CLI::NonNegativeNumber);
  cls->add_option("--ballots", opt.ballots_path, "CSV, one ballot per row")->required();
  cls->add_option("--tiebreak", opt.tiebreak, "lex (default) or random");
  cls->add_flag("--header", opt.header, "skip the first row");
  cls->add_flag("--lenient", opt.lenient, "skip malformed rows instead of failing");
  add_format(cls);

  auto* sw = app.add_subcommand("sweep", "expected utility of the strategy panel across remaining voters");
  add_scenario(sw);
  sw->add_option("--k", opt.k, "number of seats")->check(CLI::NonNegativeNumber);
  sw->add_option("--r", opt.sweep_r_list, "remaining voters (default 0,1,2,3)");
  sw->add_option("--p", opt.p, "per-candidate approval probability of a remaining voter")
      ->check(CLI::Range(0.0, 1.0));
  sw->add_option("--out,-o", opt.out_path, "CSV output path (default: stdout)");
  add_format(sw);

  auto* sc = app.add_subcommand("scenarios", "list, show or export built-in scenarios");
  sc->add_option("--show", opt.show_id, "print a scenario as JSON");
  sc->add_option("--export", opt.export_id, "write a scenario to --out");
  sc->add_option("--out,-o", opt.out_path, "output path for --export");
  add_format(sc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, ballot_opt->count() > 0, out);
    if (br->parsed()) return cmd_best_response(opt, out);
    if (cls->parsed()) return cmd_classify(opt, out, err);
    if (sw->parsed()) return cmd_sweep(opt, out);
    if (sc->parsed()) return cmd_scenarios(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace approval::cli
