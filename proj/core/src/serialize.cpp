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

#include "augrc/serialize.hpp"

#include "augrc/design_io.hpp"

namespace augrc {

namespace {

Json TraceJson(const std::vector<TracePoint>& trace) {
  Json out = Json::array();
  for (const TracePoint& p : trace) out.push_back(Json::array({p.iteration, p.objective}));
  return out;
}

}  // namespace

Json ToJson(const EfficiencyReport& r) {
  Json j;
  j["eCon"] = r.e_con;
  j["cBarV"] = r.c_bar_v;
  j["cBarS"] = r.c_bar_s;
  j["eDual"] = r.e_dual;
  j["eAugFormula"] = r.e_aug_formula;
  j["eAugDirect"] = r.e_aug_direct ? Json(*r.e_aug_direct) : Json(nullptr);
  j["generallyBalanced"] = r.generally_balanced;
  j["cefsContraction"] = r.cefs_contraction;
  j["cefsAugmented"] = r.cefs_augmented ? Json(*r.cefs_augmented) : Json(nullptr);
  return j;
}

EfficiencyReport ReportFromJson(const Json& j) {
  EfficiencyReport r;
  r.e_con = j.at("eCon").get<double>();
  r.c_bar_v = j.at("cBarV").get<double>();
  r.c_bar_s = j.at("cBarS").get<double>();
  r.e_dual = j.at("eDual").get<double>();
  r.e_aug_formula = j.at("eAugFormula").get<double>();
  if (!j.at("eAugDirect").is_null()) r.e_aug_direct = j.at("eAugDirect").get<double>();
  r.generally_balanced = j.at("generallyBalanced").get<bool>();
  r.cefs_contraction = j.at("cefsContraction").get<std::vector<double>>();
  if (!j.at("cefsAugmented").is_null()) {
    r.cefs_augmented = j.at("cefsAugmented").get<std::vector<double>>();
  }
  return r;
}

Json ToJson(const SearchResult& result, bool include_timing) {
  Json j;
  j["design"] = FormatContraction(result.best);
  j["objective"] = result.objective;
  j["restartOfBest"] = result.restart_of_best;
  j["budgetExhausted"] = result.budget_exhausted;
  j["trace"] = TraceJson(result.trace);
  if (include_timing) j["elapsed"] = result.elapsed_seconds;
  return j;
}

Json ToJson(const DirectSearchResult& result, bool include_timing) {
  Json j;
  j["design"] = FormatAugmented(result.best);
  j["objective"] = result.objective;
  j["restartOfBest"] = result.restart_of_best;
  j["budgetExhausted"] = result.budget_exhausted;
  j["trace"] = TraceJson(result.trace);
  if (include_timing) j["elapsed"] = result.elapsed_seconds;
  return j;
}

Json ToJson(const DesignPlan& p) {
  Json j;
  j["v"] = p.v;
  j["s"] = p.s;
  j["k"] = p.k;
  j["checkProportion"] = p.check_proportion;
  j["testLineCapacity"] = p.test_line_capacity;
  j["requestedTestLines"] = p.requested_test_lines;
  j["surplus"] = p.surplus;
  j["feasibleDf"] = p.feasible_df;
  Json alts = Json::array();
  for (const DesignPlan& a : p.alternatives) alts.push_back(ToJson(a));
  j["alternatives"] = std::move(alts);
  return j;
}

}  // namespace augrc
