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

// Choosing trial dimensions (v rows, s columns, k checks).
//
// Every column holds each check once, so the check proportion is k/v and the
// test-line capacity is (v-k)s. Given k and a target proportion, v is the
// ratio-matching row count; s then follows from the number of test lines.

#ifndef AUGRC_PLANNER_HPP_
#define AUGRC_PLANNER_HPP_

#include <vector>

#include "augrc/errors.hpp"

namespace augrc {

struct DesignPlan {
  int v = 0;
  int s = 0;
  int k = 0;
  double check_proportion = 0.0;  // k / v
  int test_line_capacity = 0;     // (v - k) s
  int requested_test_lines = 0;   // 0 for fixed-grid plans
  int surplus = 0;                // capacity - requested
  int feasible_df = 0;
  // Other candidate (v, s) plans, nearest proportion first.
  std::vector<DesignPlan> alternatives;
};

// Thrown when no acceptable plan exists; carries the nearest feasible plans.
class PlanError : public InfeasibleError {
 public:
  PlanError(const std::string& what, std::vector<DesignPlan> suggestions)
      : InfeasibleError(what), suggestions_(std::move(suggestions)) {}
  const std::vector<DesignPlan>& suggestions() const { return suggestions_; }

 private:
  std::vector<DesignPlan> suggestions_;
};

struct PlanOptions {
  int max_rows = 200;
  int max_alternatives = 6;
};

// Picks v >= k+1 minimising |k/v - target| (ties to the smaller v), then
// s = ceil(test_lines / (v-k)). Throws PlanError if that plan leaves a
// negative error df or has s > v; the error lists the nearest feasible plans.
DesignPlan Plan(int k, double target_proportion, int test_lines, const PlanOptions& options = {});

enum class GridOrientation {
  kAuto,     // v = max(rows, cols)
  kRows,     // v = rows
  kColumns,  // v = cols
};

// Plan for a fixed rows x cols layout such as a microplate. Throws PlanError
// if the error df is negative. With an explicit orientation the plan may have
// v < s; such a plan cannot host a row-binary contraction.
DesignPlan PlanFixedGrid(int rows, int cols, int k, GridOrientation orientation = GridOrientation::kAuto);

}  // namespace augrc

#endif  // AUGRC_PLANNER_HPP_
