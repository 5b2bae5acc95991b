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

#include "augrc/planner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "augrc/design.hpp"

namespace augrc {

namespace {

DesignPlan MakePlan(int v, int s, int k, int requested) {
  DesignPlan p;
  p.v = v;
  p.s = s;
  p.k = k;
  p.check_proportion = static_cast<double>(k) / v;
  p.test_line_capacity = (v - k) * s;
  p.requested_test_lines = requested;
  p.surplus = p.test_line_capacity - requested;
  p.feasible_df = FeasibilityDf(v, s, k);
  return p;
}

bool Acceptable(const DesignPlan& p) { return p.feasible_df >= 0 && p.v >= p.s; }

std::string Describe(const DesignPlan& p) {
  return "(v=" + std::to_string(p.v) + ", s=" + std::to_string(p.s) + ", k=" + std::to_string(p.k) +
         ")";
}

}  // namespace

DesignPlan Plan(int k, double target_proportion, int test_lines, const PlanOptions& options) {
  if (k < 2) throw InfeasibleError("need at least 2 checks");
  if (!(target_proportion > 0.0 && target_proportion < 1.0)) {
    throw InfeasibleError("check proportion must lie strictly between 0 and 1");
  }
  if (test_lines < 1) throw InfeasibleError("need at least one test line");

  struct Candidate {
    double distance;
    DesignPlan plan;
  };
  std::vector<Candidate> candidates;
  for (int v = k + 1; v <= options.max_rows; ++v) {
    const int s = (test_lines + (v - k) - 1) / (v - k);
    candidates.push_back({std::abs(static_cast<double>(k) / v - target_proportion),
                          MakePlan(v, s, k, test_lines)});
  }
  if (candidates.empty()) throw PlanError("no row count v in range", {});
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

  // Alternatives may widen s beyond the minimum so that the error df becomes
  // non-negative: (k-1)(s-1) >= v-1.
  std::vector<DesignPlan> feasible_others;
  for (size_t i = 1; i < candidates.size() &&
                     static_cast<int>(feasible_others.size()) < options.max_alternatives;
       ++i) {
    const DesignPlan& c = candidates[i].plan;
    const int s_df = 1 + (c.v - 1 + k - 2) / (k - 1);
    const DesignPlan widened = MakePlan(c.v, std::max(c.s, s_df), k, test_lines);
    if (Acceptable(widened)) feasible_others.push_back(widened);
  }
  if (!Acceptable(candidates.front().plan)) {
    const DesignPlan& c = candidates.front().plan;
    const int s_df = 1 + (c.v - 1 + k - 2) / (k - 1);
    const DesignPlan widened = MakePlan(c.v, std::max(c.s, s_df), k, test_lines);
    if (Acceptable(widened)) feasible_others.insert(feasible_others.begin(), widened);
  }

  DesignPlan best = candidates.front().plan;
  if (!Acceptable(best)) {
    std::string why;
    if (best.feasible_df < 0) {
      why = "error df ks-1-(k-1)-(s-1)-(v-1) = " + std::to_string(best.feasible_df) +
            " is short by " + std::to_string(-best.feasible_df);
    } else {
      why = "s=" + std::to_string(best.s) + " exceeds v=" + std::to_string(best.v);
    }
    std::string msg = "plan " + Describe(best) + " is infeasible: " + why;
    if (!feasible_others.empty()) msg += "; nearest feasible plan is " + Describe(feasible_others.front());
    throw PlanError(msg, std::move(feasible_others));
  }
  best.alternatives = std::move(feasible_others);
  return best;
}

DesignPlan PlanFixedGrid(int rows, int cols, int k, GridOrientation orientation) {
  if (k < 2) throw InfeasibleError("need at least 2 checks");
  if (rows < 1 || cols < 1) throw InfeasibleError("grid dimensions must be positive");
  int v = std::max(rows, cols), s = std::min(rows, cols);
  if (orientation == GridOrientation::kRows) {
    v = rows;
    s = cols;
  } else if (orientation == GridOrientation::kColumns) {
    v = cols;
    s = rows;
  }
  if (k >= v) throw InfeasibleError("k=" + std::to_string(k) + " leaves no test-line rows in v=" + std::to_string(v));
  DesignPlan p = MakePlan(v, s, k, (v - k) * s);
  if (p.feasible_df < 0) {
    throw PlanError("grid plan " + Describe(p) + " is infeasible: error df " +
                        std::to_string(p.feasible_df),
                    {});
  }
  return p;
}

}  // namespace augrc
