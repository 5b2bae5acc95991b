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

#include "augrc/design.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace augrc {

LabelGrid LabelGrid::FromRows(const std::vector<std::vector<Label>>& rows) {
  const int n_rows = static_cast<int>(rows.size());
  const int n_cols = n_rows == 0 ? 0 : static_cast<int>(rows.front().size());
  LabelGrid grid(n_rows, n_cols);
  for (int i = 0; i < n_rows; ++i) {
    if (static_cast<int>(rows[i].size()) != n_cols) {
      throw ValidationError("ragged rows: row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(n_cols));
    }
    for (int j = 0; j < n_cols; ++j) grid(i, j) = rows[i][j];
  }
  return grid;
}

int FeasibilityDf(int v, int s, int k) {
  return k * s - 1 - (k - 1) - (s - 1) - (v - 1);
}

namespace {

std::vector<int> CountLabels(const LabelGrid& cells, int v) {
  std::vector<int> counts(std::max(v, 0), 0);
  for (Label l : cells.data()) {
    if (l >= 1 && l <= v) ++counts[l - 1];
  }
  return counts;
}

}  // namespace

ContractionDesign::ContractionDesign(int v, LabelGrid cells)
    : v_(v), cells_(std::move(cells)), r_(CountLabels(cells_, v)) {}

ContractionDesign::ContractionDesign(int v, LabelGrid cells, std::vector<int> replication)
    : v_(v), cells_(std::move(cells)), r_(std::move(replication)) {}

double ContractionDesign::mean_replication() const {
  return static_cast<double>(k()) * s() / v_;
}

bool ContractionDesign::equally_replicated() const {
  return std::adjacent_find(r_.begin(), r_.end(), std::not_equal_to<>()) == r_.end();
}

ContractionDesign ContractionDesign::Swapped(int i1, int j1, int i2, int j2) const {
  ContractionDesign out = *this;
  std::swap(out.cells_(i1, j1), out.cells_(i2, j2));
  return out;
}

AugmentedDesign::AugmentedDesign(int k, LabelGrid cells) : k_(k), cells_(std::move(cells)) {}

Eigen::VectorXd AugmentedDesign::replication() const {
  Eigen::VectorXd u = Eigen::VectorXd::Ones(num_treatments());
  u.tail(k_).setConstant(s());
  return u;
}

std::string_view KindName(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::kShape: return "shape";
    case K::kLabelRange: return "label-range";
    case K::kColumnRepeat: return "column-non-binary";
    case K::kRowRepeat: return "row-non-binary";
    case K::kReplicationMismatch: return "replication-mismatch";
    case K::kReplicationSum: return "replication-sum";
    case K::kReplicationSpread: return "replication-spread";
    case K::kInfeasible: return "infeasible";
    case K::kOrientation: return "orientation";
    case K::kCheckCount: return "check-count";
    case K::kTestLineCount: return "test-line-count";
    case K::kRowCheckCount: return "row-check-count";
  }
  return "unknown";
}

bool ValidationReport::Has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& x) { return x.kind == kind; });
}

std::string ValidationReport::ToString() const {
  std::ostringstream out;
  for (const Violation& x : violations) out << KindName(x.kind) << ": " << x.message << '\n';
  return out.str();
}

ValidationReport ValidateContraction(const ContractionDesign& c) {
  using K = Violation::Kind;
  ValidationReport report;
  auto add = [&report](K kind, int row, int col, Label label, std::string msg) {
    report.violations.push_back({kind, row, col, label, std::move(msg)});
  };
  const int v = c.v(), k = c.k(), s = c.s();
  if (v < 1 || k < 1 || s < 1) {
    add(K::kShape, -1, -1, 0,
        "dimensions must be positive (v=" + std::to_string(v) + ", k=" + std::to_string(k) +
            ", s=" + std::to_string(s) + ")");
    return report;
  }
  if (static_cast<int>(c.replication().size()) != v) {
    add(K::kShape, -1, -1, 0,
        "replication vector has " + std::to_string(c.replication().size()) + " entries, expected " +
            std::to_string(v));
    return report;
  }
  if (v < s) {
    add(K::kOrientation, -1, -1, 0,
        "v=" + std::to_string(v) + " is smaller than s=" + std::to_string(s));
  }
  if (const int df = FeasibilityDf(v, s, k); df < 0) {
    add(K::kInfeasible, -1, -1, 0, "error df " + std::to_string(df) + " is negative");
  }

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < s; ++j) {
      const Label l = c.at(i, j);
      if (l < 1 || l > v) {
        add(K::kLabelRange, i, j, l,
            "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") holds " +
                std::to_string(l) + ", outside 1.." + std::to_string(v));
      }
    }
  }
  for (int j = 0; j < s; ++j) {
    std::vector<int> seen(v + 1, 0);
    for (int i = 0; i < k; ++i) {
      const Label l = c.at(i, j);
      if (l >= 1 && l <= v && ++seen[l] == 2) {
        add(K::kColumnRepeat, -1, j, l,
            "column " + std::to_string(j + 1) + " holds label " + std::to_string(l) +
                " more than once");
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<int> seen(v + 1, 0);
    for (int j = 0; j < s; ++j) {
      const Label l = c.at(i, j);
      if (l >= 1 && l <= v && ++seen[l] == 2) {
        add(K::kRowRepeat, i, -1, l,
            "row " + std::to_string(i + 1) + " holds label " + std::to_string(l) +
                " more than once");
      }
    }
  }

  const std::vector<int>& r = c.replication();
  const std::vector<int> counts = CountLabels(c.cells(), v);
  for (int h = 0; h < v; ++h) {
    if (counts[h] != r[h]) {
      add(K::kReplicationMismatch, -1, -1, h + 1,
          "label " + std::to_string(h + 1) + " occurs " + std::to_string(counts[h]) +
              " times, declared r=" + std::to_string(r[h]));
    }
  }
  if (const int total = std::accumulate(r.begin(), r.end(), 0); total != k * s) {
    add(K::kReplicationSum, -1, -1, 0,
        "declared replications sum to " + std::to_string(total) + ", expected ks=" +
            std::to_string(k * s));
  }
  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  if (*hi - *lo > 1) {
    add(K::kReplicationSpread, -1, -1, 0,
        "replications range from " + std::to_string(*lo) + " to " + std::to_string(*hi));
  }
  return report;
}

ValidationReport ValidateAugmented(const AugmentedDesign& a,
                                   const std::optional<std::vector<int>>& row_checks) {
  using K = Violation::Kind;
  ValidationReport report;
  auto add = [&report](K kind, int row, int col, Label label, std::string msg) {
    report.violations.push_back({kind, row, col, label, std::move(msg)});
  };
  const int v = a.v(), s = a.s(), k = a.k();
  if (v < 1 || s < 1 || k < 1 || k > v) {
    add(K::kShape, -1, -1, 0,
        "need 1 <= k <= v and s >= 1 (v=" + std::to_string(v) + ", s=" + std::to_string(s) +
            ", k=" + std::to_string(k) + ")");
    return report;
  }
  const int n_test = a.num_test_lines();
  const int v_star = a.num_treatments();
  std::vector<int> test_seen(n_test + 1, 0);
  for (int j = 0; j < s; ++j) {
    std::vector<int> check_seen(k, 0);
    for (int i = 0; i < v; ++i) {
      const Label l = a.at(i, j);
      if (l < 1 || l > v_star) {
        add(K::kLabelRange, i, j, l,
            "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") holds " +
                std::to_string(l) + ", outside 1.." + std::to_string(v_star));
      } else if (a.is_check(l)) {
        ++check_seen[l - n_test - 1];
      } else {
        ++test_seen[l];
      }
    }
    for (int c = 0; c < k; ++c) {
      if (check_seen[c] != 1) {
        add(K::kCheckCount, -1, j, n_test + 1 + c,
            "column " + std::to_string(j + 1) + " holds check " + std::to_string(n_test + 1 + c) +
                " " + std::to_string(check_seen[c]) + " times, expected once");
      }
    }
  }
  for (int l = 1; l <= n_test; ++l) {
    if (test_seen[l] != 1) {
      add(K::kTestLineCount, -1, -1, l,
          "test line " + std::to_string(l) + " occurs " + std::to_string(test_seen[l]) +
              " times, expected once");
    }
  }
  if (row_checks) {
    if (static_cast<int>(row_checks->size()) != v) {
      add(K::kShape, -1, -1, 0, "row check vector length does not match v");
    } else {
      for (int i = 0; i < v; ++i) {
        int n = 0;
        for (int j = 0; j < s; ++j) n += a.is_check(a.at(i, j)) ? 1 : 0;
        if (n != (*row_checks)[i]) {
          add(K::kRowCheckCount, i, -1, 0,
              "row " + std::to_string(i + 1) + " holds " + std::to_string(n) +
                  " checks, expected " + std::to_string((*row_checks)[i]));
        }
      }
    }
  }
  return report;
}

void RequireValid(const ContractionDesign& c) {
  if (ValidationReport report = ValidateContraction(c); !report.ok()) {
    throw ValidationError("invalid contraction:\n" + report.ToString());
  }
}

IncidenceSet Incidence(const ContractionDesign& c) {
  RequireValid(c);
  const int v = c.v(), k = c.k(), s = c.s();
  IncidenceSet inc;
  inc.row_incidence = Eigen::MatrixXi::Zero(v, k);
  inc.column_incidence = Eigen::MatrixXi::Zero(v, s);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < s; ++j) {
      const int h = c.at(i, j) - 1;
      inc.row_incidence(h, i) = 1;
      inc.column_incidence(h, j) = 1;
    }
  }
  inc.row_concurrence = inc.row_incidence * inc.row_incidence.transpose();
  return inc;
}

std::vector<int> BalancedReplication(int v, int k, int s) {
  if (v < 1 || k < 1 || s < 1) throw InfeasibleError("v, k and s must be positive");
  if (k > v) {
    throw InfeasibleError("k=" + std::to_string(k) + " exceeds v=" + std::to_string(v) +
                          "; a column cannot hold k distinct pseudo-treatments");
  }
  if (const int df = FeasibilityDf(v, s, k); df < 0) {
    throw InfeasibleError("error df ks-1-(k-1)-(s-1)-(v-1) = " + std::to_string(df) +
                          " for (v=" + std::to_string(v) + ", s=" + std::to_string(s) +
                          ", k=" + std::to_string(k) + "); short by " + std::to_string(-df));
  }
  const int total = k * s;
  std::vector<int> r(v, total / v);
  for (int h = 0; h < total % v; ++h) ++r[h];
  return r;
}

}  // namespace augrc
