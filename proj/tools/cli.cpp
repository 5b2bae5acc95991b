// Copyright 2026 The augrc Authors
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


#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "augrc/augment.hpp"
#include "augrc/design_io.hpp"
#include "augrc/efficiency.hpp"
#include "augrc/errors.hpp"
#include "augrc/planner.hpp"
#include "augrc/search.hpp"
#include "augrc/serialize.hpp"
#include "augrc/version.hpp"
#include "reference_contractions.hpp"

namespace augrc::cli {

namespace fs = std::filesystem;

std::string Sha256Hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

enum class Format { kJson, kTable, kCsv };

Format ParseFormat(const std::string& s) {
  if (s == "table") return Format::kTable;
  if (s == "csv") return Format::kCsv;
  return Format::kJson;
}

std::string Fixed(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string ScalarText(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_number_float()) return Fixed(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (const Json& e : j) {
      if (!s.empty()) s += ' ';
      s += ScalarText(e);
    }
    return s;
  }
  return j.dump();
}

void Flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      Flatten(*it, key, rows);
    } else {
      rows.emplace_back(key, ScalarText(*it));
    }
  }
}

// Flat objects only; nested objects become dotted keys, arrays are joined.
void Render(const Json& j, Format f, std::ostream& out) {
  if (f == Format::kJson) {
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(j, "", rows);
  if (f == Format::kTable) {
    size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    return;
  }
  for (size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].first;
  out << '\n';
  for (size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].second;
  out << '\n';
}

void RenderPlan(const DesignPlan& plan, Format f, std::ostream& out) {
  if (f == Format::kJson) {
    out << ToJson(plan).dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, const DesignPlan*>> rows{{"plan", &plan}};
  for (const DesignPlan& a : plan.alternatives) rows.emplace_back("alternative", &a);
  if (f == Format::kCsv) {
    out << "kind,v,s,k,checkProportion,testLineCapacity,requestedTestLines,surplus,feasibleDf\n";
    for (const auto& [kind, p] : rows) {
      out << kind << ',' << p->v << ',' << p->s << ',' << p->k << ',' << Fixed(p->check_proportion) << ','
          << p->test_line_capacity << ',' << p->requested_test_lines << ',' << p->surplus << ','
          << p->feasible_df << '\n';
    }
    return;
  }
  out << std::left << std::setw(13) << "" << std::right << std::setw(5) << "v" << std::setw(5) << "s"
      << std::setw(4) << "k" << std::setw(11) << "checks %" << std::setw(10) << "capacity" << std::setw(11)
      << "requested" << std::setw(9) << "surplus" << std::setw(6) << "df" << '\n';
  for (const auto& [kind, p] : rows) {
    out << std::left << std::setw(13) << kind << std::right << std::setw(5) << p->v << std::setw(5) << p->s
        << std::setw(4) << p->k << std::setw(11) << Fixed(100.0 * p->check_proportion, 2) << std::setw(10)
        << p->test_line_capacity << std::setw(11) << p->requested_test_lines << std::setw(9) << p->surplus
        << std::setw(6) << p->feasible_df << '\n';
  }
}

struct SearchOptions {
  int v = 0, s = 0, k = 0;
  uint64_t seed = 0;
  std::string strategy = std::string(StrategyName(SearchConfig{}.strategy));
  std::string objective = std::string(ObjectiveName(SearchConfig{}.objective));
  int restarts = SearchConfig{}.restarts;
  int iters = SearchConfig{}.max_iters;
  double time_budget = 0.0;  // 0: none
  int threads = 0;
};

void AddSearchOptions(CLI::App* app, SearchOptions& o, bool require_params) {
  auto* v = app->add_option("--v", o.v, "rows of the augmented design (pseudo-treatments)");
  auto* s = app->add_option("--s", o.s, "columns");
  auto* k = app->add_option("--k,--checks", o.k, "number of checks");
  if (require_params) {
    v->required();
    s->required();
    k->required();
  }
  app->add_option("--seed", o.seed, "random seed")->capture_default_str();
  app->add_option("--strategy", o.strategy, "hillclimb | anneal | column-first")
      ->check(CLI::IsMember({"hillclimb", "anneal", "column-first"}))
      ->capture_default_str();
  app->add_option("--objective", o.objective, "e-con | e-aug")
      ->check(CLI::IsMember({"e-con", "e-aug"}))
      ->capture_default_str();
  app->add_option("--restarts", o.restarts, "independent restarts")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--iters", o.iters, "move proposals per restart")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--time-budget", o.time_budget, "wall-clock limit in seconds (0: none)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--threads", o.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
}

SearchConfig MakeConfig(const SearchOptions& o) {
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.strategy = *ParseStrategy(o.strategy);
  cfg.objective = *ParseObjective(o.objective);
  cfg.restarts = o.restarts;
  cfg.max_iters = o.iters;
  if (o.time_budget > 0) cfg.time_budget_seconds = o.time_budget;
  cfg.threads = o.threads;
  return cfg;
}

// Parameters that determine the generated artifacts. Thread count is left
// out because it cannot change them.
Json ParamsJson(const SearchOptions& o, bool direct) {
  Json p;
  p["v"] = o.v;
  p["s"] = o.s;
  p["k"] = o.k;
  p["seed"] = o.seed;
  p["strategy"] = o.strategy;
  p["objective"] = o.objective;
  p["restarts"] = o.restarts;
  p["iters"] = o.iters;
  p["timeBudget"] = o.time_budget > 0 ? Json(o.time_budget) : Json(nullptr);
  p["direct"] = direct;
  return p;
}

void ParamsFromJson(const Json& p, SearchOptions& o, bool& direct) {
  o.v = p.at("v").get<int>();
  o.s = p.at("s").get<int>();
  o.k = p.at("k").get<int>();
  o.seed = p.at("seed").get<uint64_t>();
  o.strategy = p.at("strategy").get<std::string>();
  o.objective = p.at("objective").get<std::string>();
  if (!ParseStrategy(o.strategy) || !ParseObjective(o.objective)) {
    throw ValidationError("manifest names an unknown strategy or objective");
  }
  o.restarts = p.at("restarts").get<int>();
  o.iters = p.at("iters").get<int>();
  o.time_budget = p.at("timeBudget").is_null() ? 0.0 : p.at("timeBudget").get<double>();
  direct = p.at("direct").get<bool>();
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------- plan

struct PlanArgs {
  int k = 0;
  double prop = 0.0;
  int test_lines = 0;
  std::string grid;
  std::string orient = "auto";
  std::string format = "json";
};

int CmdPlan(const PlanArgs& a, std::ostream& out, std::ostream& err) {
  DesignPlan plan;
  try {
    if (!a.grid.empty()) {
      int rows = 0, cols = 0;
      char x = 0, extra = 0;
      std::istringstream is(a.grid);
      if (!(is >> rows >> x >> cols) || (x != 'x' && x != 'X') || (is >> extra)) {
        err << "error: --grid expects ROWSxCOLS, got '" << a.grid << "'\n";
        return kExitInvalid;
      }
      const GridOrientation o = a.orient == "rows"      ? GridOrientation::kRows
                                : a.orient == "columns" ? GridOrientation::kColumns
                                                        : GridOrientation::kAuto;
      plan = PlanFixedGrid(rows, cols, a.k, o);
    } else {
      if (a.prop <= 0.0 || a.test_lines <= 0) {
        err << "error: give --prop and --test-lines, or --grid\n";
        return kExitInvalid;
      }
      plan = Plan(a.k, a.prop, a.test_lines);
    }
  } catch (const PlanError& e) {
    err << "error: " << e.what() << '\n';
    for (const DesignPlan& s : e.suggestions()) {
      err << "  suggestion: v=" << s.v << " s=" << s.s << " k=" << s.k << " capacity=" << s.test_line_capacity
          << " df=" << s.feasible_df << '\n';
    }
    return kExitInvalid;
  }
  RenderPlan(plan, ParseFormat(a.format), out);
  return kExitOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  SearchOptions search;
  bool direct = false;
  std::string out_dir = ".";
  std::string manifest;
  std::string format = "json";
};

int CmdGenerate(GenerateArgs a, std::ostream& out, std::ostream& err) {
  Json expected_outputs;
  if (!a.manifest.empty()) {
    const Json m = Json::parse(ReadAll(a.manifest));
    if (m.value("command", "") != "generate") throw ValidationError("manifest is not from generate");
    const int threads = a.search.threads;
    ParamsFromJson(m.at("params"), a.search, a.direct);
    a.search.threads = threads;
    expected_outputs = m.at("outputs");
  } else if (a.search.v == 0 || a.search.s == 0 || a.search.k == 0) {
    err << "error: --v, --s and --k are required unless --manifest is given\n";
    return kExitInvalid;
  }

  const SearchConfig cfg = MakeConfig(a.search);
  const SearchResult result = SearchContraction(a.search.v, a.search.s, a.search.k, cfg);
  const AugmentedDesign aug = Augment(result.best);
  const EfficiencyReport report = FullReport(result.best, a.direct);

  const std::vector<std::pair<std::string, std::string>> files = {
      {"contraction.txt", FormatContraction(result.best)},
      {"augmented.txt", FormatAugmented(aug)},
      {"report.json", ToJson(report).dump(2) + "\n"},
      {"search.json", ToJson(result, false).dump(2) + "\n"},
  };
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  Json outputs;
  for (const auto& [name, text] : files) {
    WriteTextFile(dir / name, text);
    outputs[name] = Sha256Hex(text);
  }
  Json manifest;
  manifest["command"] = "generate";
  manifest["version"] = std::string(kVersion);
  manifest["params"] = ParamsJson(a.search, a.direct);
  manifest["outputs"] = outputs;
  WriteTextFile(dir / "manifest.json", manifest.dump(2) + "\n");
  Json timing;
  timing["elapsedSeconds"] = result.elapsed_seconds;
  timing["budgetExhausted"] = result.budget_exhausted;
  WriteTextFile(dir / "timing.json", timing.dump(2) + "\n");

  Json summary;
  summary["out"] = dir.string();
  summary["objective"] = result.objective;
  summary["eCon"] = report.e_con;
  summary["eAugFormula"] = report.e_aug_formula;
  summary["eAugDirect"] = report.e_aug_direct ? Json(*report.e_aug_direct) : Json(nullptr);
  summary["budgetExhausted"] = result.budget_exhausted;
  Render(summary, ParseFormat(a.format), out);

  if (!expected_outputs.is_null() && expected_outputs != outputs) {
    err << "error: outputs differ from the manifest digests\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string file;
  bool direct = false;
  bool diagnostic = false;
  std::string format = "json";
};

int CmdEvaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  const AnyDesign design = ReadDesignFile(a.file);
  const Format f = ParseFormat(a.format);
  if (const auto* c = std::get_if<ContractionDesign>(&design)) {
    if (ValidationReport vr = ValidateContraction(*c); !vr.ok()) {
      err << "error: " << a.file << ": invalid contraction\n" << vr.ToString();
      return kExitInvalid;
    }
    Json j = ToJson(FullReport(*c, a.direct));
    if (a.diagnostic) {
      j["cBarSWoodbury"] = CBarSWoodbury(*c);
      j["cBarSPrintedMiddle"] = CBarSPrintedMiddle(*c);
    }
    if (f != Format::kJson) {
      j.erase("cefsContraction");
      j.erase("cefsAugmented");
    }
    Render(j, f, out);
    return kExitOk;
  }
  const auto& aug = std::get<AugmentedDesign>(design);
  if (ValidationReport vr = ValidateAugmented(aug); !vr.ok()) {
    err << "error: " << a.file << ": invalid augmented design\n" << vr.ToString();
    return kExitInvalid;
  }
  Json j;
  j["v"] = aug.v();
  j["s"] = aug.s();
  j["k"] = aug.k();
  j["treatments"] = aug.num_treatments();
  j["eAugDirect"] = EAugDirect(aug);
  const ContractionDesign c = ExtractContraction(aug);
  const bool contraction_ok = ValidateContraction(c).ok();
  j["contractionValid"] = contraction_ok;
  j["eAugFormula"] = contraction_ok ? Json(FullReport(c, false).e_aug_formula) : Json(nullptr);
  if (f == Format::kJson) j["cefsAugmented"] = AugmentedCefs(aug);
  Render(j, f, out);
  return kExitOk;
}

// ---------------------------------------------------------------- augment

int CmdAugment(const std::string& file, const std::string& output, std::ostream& out, std::ostream& err) {
  const AnyDesign design = ReadDesignFile(file);
  const auto* c = std::get_if<ContractionDesign>(&design);
  if (c == nullptr) {
    err << "error: " << file << " holds an augmented design, expected a contraction\n";
    return kExitInvalid;
  }
  if (ValidationReport vr = ValidateContraction(*c); !vr.ok()) {
    err << "error: " << file << ": invalid contraction\n" << vr.ToString();
    return kExitInvalid;
  }
  const std::string text = FormatAugmented(Augment(*c));
  if (output.empty()) {
    out << text;
  } else {
    WriteTextFile(output, text);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  SearchOptions search;
  bool augmented = false;
  std::string output;
  std::string format = "json";
};

int CmdSearch(const SearchArgs& a, std::ostream& out) {
  const SearchConfig cfg = MakeConfig(a.search);
  Json summary;
  std::string text;
  if (a.augmented) {
    const DirectSearchResult r = SearchAugmentedDirect(a.search.v, a.search.s, a.search.k, cfg);
    text = FormatAugmented(r.best);
    summary = ToJson(r, false);
  } else {
    const SearchResult r = SearchContraction(a.search.v, a.search.s, a.search.k, cfg);
    text = FormatContraction(r.best);
    summary = ToJson(r, false);
  }
  if (a.output.empty()) {
    out << text;
    return kExitOk;
  }
  WriteTextFile(a.output, text);
  summary.erase("design");
  summary["file"] = a.output;
  if (ParseFormat(a.format) != Format::kJson) summary.erase("trace");
  Render(summary, ParseFormat(a.format), out);
  return kExitOk;
}

// ---------------------------------------------------------------- reproduce-table1

struct TableArgs {
  SearchOptions search;
  bool formula_only = false;
  std::string format = "table";
};

constexpr double kFormulaTolerance = 1e-4;
constexpr double kBandWidth = 0.01;

int CmdReproduceTable(const TableArgs& a, std::ostream& out) {
  Json rows = Json::array();
  int formula_pass = 0, band_pass = 0;
  for (const ReferenceContraction& ref : kReferenceContractions) {
    Json row;
    row["k"] = ref.k;
    row["v"] = ref.v;
    row["s"] = ref.s;
    row["rBar"] = ref.r_bar;
    const int v_star = (ref.v - ref.k) * ref.s + ref.k;
    const double recomputed = EAugFormula(v_star, ref.v, ref.s, ref.k, ref.e_con, ref.c_bar_s);
    const bool formula_ok = std::abs(recomputed - ref.e_aug) <= kFormulaTolerance;
    formula_pass += formula_ok;
    row["printedECon"] = ref.e_con;
    row["printedCBarS"] = ref.c_bar_s;
    row["printedEDual"] = ref.e_dual;
    row["printedEAug"] = ref.e_aug;
    row["eAugFromPrinted"] = recomputed;
    row["formulaCheck"] = formula_ok ? "pass" : "fail";
    if (!a.formula_only) {
      try {
        const SearchResult r = SearchContraction(ref.v, ref.s, ref.k, MakeConfig(a.search));
        const EfficiencyReport rep = FullReport(r.best, false);
        const bool band_ok = rep.e_con >= ref.e_con - kBandWidth;
        band_pass += band_ok;
        row["eCon"] = rep.e_con;
        row["cBarS"] = rep.c_bar_s;
        row["eDual"] = rep.e_dual;
        row["generallyBalanced"] = rep.generally_balanced;
        row["eAug"] = rep.e_aug_formula;
        row["band"] = band_ok ? "pass" : "fail";
      } catch (const std::exception& e) {
        row["band"] = std::string("error: ") + e.what();
      }
    }
    rows.push_back(row);
  }

  const Format f = ParseFormat(a.format);
  if (f == Format::kJson) {
    Json j;
    j["rows"] = rows;
    j["formulaPass"] = formula_pass;
    if (!a.formula_only) j["bandPass"] = band_pass;
    j["total"] = rows.size();
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  auto cell = [](const Json& v) {
    return v.is_number_float() ? Fixed(v.get<double>(), 4) : ScalarText(v);
  };
  if (f == Format::kCsv) {
    for (size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
    for (const Json& row : rows) {
      for (size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << cell(row.value(keys[i], Json()));
      out << '\n';
    }
    return kExitOk;
  }
  std::vector<size_t> width(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) {
    width[i] = keys[i].size();
    for (const Json& row : rows) width[i] = std::max(width[i], cell(row.value(keys[i], Json())).size());
  }
  for (size_t i = 0; i < keys.size(); ++i) out << std::setw(static_cast<int>(width[i]) + 1) << keys[i];
  out << '\n';
  for (const Json& row : rows) {
    for (size_t i = 0; i < keys.size(); ++i) {
      out << std::setw(static_cast<int>(width[i]) + 1) << cell(row.value(keys[i], Json()));
    }
    out << '\n';
  }
  out << "formula check: " << formula_pass << "/" << rows.size() << " rows within " << kFormulaTolerance << '\n';
  if (!a.formula_only) {
    out << "search band:   " << band_pass << "/" << rows.size() << " rows with eCon >= printed - " << kBandWidth
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Augmented row-column designs from contractions"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "choose v, s and k for a trial");
  plan_cmd->add_option("--k,--checks", plan.k, "number of checks")->required();
  plan_cmd->add_option("--prop", plan.prop, "target proportion of check plots");
  plan_cmd->add_option("--test-lines", plan.test_lines, "number of test lines");
  plan_cmd->add_option("--grid", plan.grid, "fixed layout ROWSxCOLS");
  plan_cmd->add_option("--orient", plan.orient, "auto | rows | columns: which grid side is v")
      ->check(CLI::IsMember({"auto", "rows", "columns"}));
  plan_cmd->add_option("--format", plan.format)->check(CLI::IsMember({"json", "table", "csv"}));

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "search, augment and report, writing artifacts");
  AddSearchOptions(gen_cmd, gen.search, false);
  gen_cmd->add_flag("--direct", gen.direct, "also compute E_aug from the full information matrix");
  gen_cmd->add_option("--out", gen.out_dir, "output directory")->capture_default_str();
  gen_cmd->add_option("--manifest", gen.manifest, "rerun from a manifest.json");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "table", "csv"}));

  EvaluateArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "efficiency report for a design file");
  eval_cmd->add_option("file", eval.file, "contraction or augmented design")->required();
  eval_cmd->add_flag("--direct", eval.direct, "also compute E_aug from the full information matrix");
  eval_cmd->add_flag("--diagnostic", eval.diagnostic, "add alternative column-block evaluations");
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember({"json", "table", "csv"}));

  std::string augment_in, augment_out;
  auto* aug_cmd = app.add_subcommand("augment", "contraction file to augmented design");
  aug_cmd->add_option("file", augment_in, "contraction file")->required();
  aug_cmd->add_option("-o,--output", augment_out, "output file (default stdout)");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "search for a contraction");
  AddSearchOptions(search_cmd, search.search, true);
  search_cmd->add_flag("--augmented", search.augmented, "search the augmented array directly (baseline)");
  search_cmd->add_option("-o,--output", search.output, "design file (default stdout)");
  search_cmd->add_option("--format", search.format)->check(CLI::IsMember({"json", "table", "csv"}));

  TableArgs table;
  auto* table_cmd = app.add_subcommand("reproduce-table1", "rebuild the reference contraction table");
  AddSearchOptions(table_cmd, table.search, false);
  table_cmd->add_flag("--formula-only", table.formula_only, "skip the searches");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"json", "table", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (plan_cmd->parsed()) return CmdPlan(plan, out, err);
    if (gen_cmd->parsed()) return CmdGenerate(gen, out, err);
    if (eval_cmd->parsed()) return CmdEvaluate(eval, out, err);
    if (aug_cmd->parsed()) return CmdAugment(augment_in, augment_out, out, err);
    if (search_cmd->parsed()) return CmdSearch(search, out);
    if (table_cmd->parsed()) return CmdReproduceTable(table, out);
  } catch (const ParseError& e) {
    err << "error: parse failed: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace augrc::cli
