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

// Design types for augmented row-column designs built from contractions.
//
// A contraction is a k x s row-column array over v pseudo-treatments. Each
// pseudo-treatment stands for one row of the v x s augmented array, and the
// contraction row index selects which check lands there. Labels are 1-based
// at every interface; row and column indices in the C++ API are 0-based.

#ifndef AUGRC_DESIGN_HPP_
#define AUGRC_DESIGN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "augrc/errors.hpp"

namespace augrc {

using Label = int;

// Row-major 2-D array of labels.
class LabelGrid {
 public:
  LabelGrid() = default;
  LabelGrid(int rows, int cols, Label fill = 0)
      : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols, fill) {}
  static LabelGrid FromRows(const std::vector<std::vector<Label>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Label operator()(int i, int j) const { return cells_[Index(i, j)]; }
  Label& operator()(int i, int j) { return cells_[Index(i, j)]; }
  const std::vector<Label>& data() const { return cells_; }

  bool operator==(const LabelGrid&) const = default;
  // Lexicographic order on (rows, cols, row-major cells).
  auto operator<=>(const LabelGrid&) const = default;

 private:
  size_t Index(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Label> cells_;
};

// Degrees of freedom left for error in the fixed-effects row-column ANOVA of
// a k x s contraction on v pseudo-treatments: ks - 1 - (k-1) - (s-1) - (v-1).
// A contraction is only worth building when this is non-negative.
int FeasibilityDf(int v, int s, int k);

// The k x s auxiliary design. `replication()` is the declared replication
// vector r; a valid contraction has r_h equal to the occurrence count of h.
class ContractionDesign {
 public:
  ContractionDesign() = default;
  // Declared replication is taken from the cell counts.
  ContractionDesign(int v, LabelGrid cells);
  ContractionDesign(int v, LabelGrid cells, std::vector<int> replication);

  int v() const { return v_; }
  int k() const { return cells_.rows(); }
  int s() const { return cells_.cols(); }
  Label at(int i, int j) const { return cells_(i, j); }
  const LabelGrid& cells() const { return cells_; }
  const std::vector<int>& replication() const { return r_; }

  // Mean replication ks / v.
  double mean_replication() const;
  bool equally_replicated() const;

  // Copy with cells (i1,j1) and (i2,j2) exchanged; replication is unchanged.
  ContractionDesign Swapped(int i1, int j1, int i2, int j2) const;

  bool operator==(const ContractionDesign&) const = default;

 private:
  int v_ = 0;
  LabelGrid cells_;
  std::vector<int> r_;
};

// The v x s augmented array over v* = (v-k)s + k treatments. Labels
// 1..(v-k)s are test lines; the last k labels are checks.
class AugmentedDesign {
 public:
  AugmentedDesign() = default;
  AugmentedDesign(int k, LabelGrid cells);

  int v() const { return cells_.rows(); }
  int s() const { return cells_.cols(); }
  int k() const { return k_; }
  int num_test_lines() const { return (v() - k_) * s(); }
  int num_treatments() const { return num_test_lines() + k_; }
  bool is_check(Label l) const { return l > num_test_lines() && l <= num_treatments(); }
  Label check_label(int contraction_row) const { return num_test_lines() + 1 + contraction_row; }
  Label at(int i, int j) const { return cells_(i, j); }
  const LabelGrid& cells() const { return cells_; }

  // Treatment replications u = (1,...,1, s,...,s), checks last.
  Eigen::VectorXd replication() const;

  bool operator==(const AugmentedDesign&) const = default;

 private:
  int k_ = 0;
  LabelGrid cells_;
};

struct Violation {
  enum class Kind {
    kShape,
    kLabelRange,
    kColumnRepeat,
    kRowRepeat,
    kReplicationMismatch,
    kReplicationSum,
    kReplicationSpread,
    kInfeasible,
    kOrientation,
    kCheckCount,
    kTestLineCount,
    kRowCheckCount,
  };
  Kind kind;
  int row = -1;  // 0-based, -1 when not tied to a row
  int col = -1;  // 0-based, -1 when not tied to a column
  Label label = 0;
  std::string message;  // human readable, 1-based coordinates
};

std::string_view KindName(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(Violation::Kind kind) const;
  std::string ToString() const;
};

ValidationReport ValidateContraction(const ContractionDesign& c);

// `row_checks`, when given, is the replication vector of the generating
// contraction and row h must then hold exactly row_checks[h] checks.
ValidationReport ValidateAugmented(const AugmentedDesign& a,
                                   const std::optional<std::vector<int>>& row_checks = std::nullopt);

// Throws ValidationError carrying the report when `c` is invalid.
void RequireValid(const ContractionDesign& c);

struct IncidenceSet {
  Eigen::MatrixXi row_incidence;     // N_R, v x k
  Eigen::MatrixXi column_incidence;  // N_C, v x s
  Eigen::MatrixXi row_concurrence;   // W = N_R N_R', v x v
};

IncidenceSet Incidence(const ContractionDesign& c);

// Replication vector with every entry in {floor(ks/v), ceil(ks/v)}, the
// (ks mod v) larger values on the lowest labels. Throws InfeasibleError when
// the feasibility df is negative or k > v.
std::vector<int> BalancedReplication(int v, int k, int s);

}  // namespace augrc

#endif  // AUGRC_DESIGN_HPP_
