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

// Efficiency quantities of a contraction and of the augmented design it
// generates.
//
// Notation for a k x s contraction on v pseudo-treatments: r is the
// replication vector, N_R (v x k) and N_C (v x s) the row and column
// incidences, W = N_R N_R' the row concurrence, and
// X = N_C - (1/s) r 1_s' the centred column incidence.
//
// The average efficiency factor of the augmented design follows from two
// contraction-level summaries:
//
//   C̄_v  harmonic mean of the non-trivial eigenvalues of the contraction's
//        row-column information matrix C, divided by the mean replication;
//   C̄_s  harmonic mean of the non-trivial eigenvalues of the s x s Schur
//        complement  I_s - (1/k) X' (r^δ - W/s)^+ X.
//
//   E_aug = (v*-1) / { v* - (v+s) + 1 + (v/k)((v-1)/C̄_v + (s-1)/C̄_s) }
//
// EAugDirect() recomputes E_aug from the full v* x v* information matrix so
// that the two routes can be checked against each other.

#ifndef AUGRC_EFFICIENCY_HPP_
#define AUGRC_EFFICIENCY_HPP_

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "augrc/design.hpp"

namespace augrc {

struct EfficiencyReport {
  double e_con = 0.0;
  double c_bar_v = 0.0;
  double c_bar_s = 0.0;
  double e_dual = 0.0;
  double e_aug_formula = 0.0;
  std::optional<double> e_aug_direct;
  bool generally_balanced = false;
  std::vector<double> cefs_contraction;            // v-1 values, descending
  std::optional<std::vector<double>> cefs_augmented;  // v*-1 values, descending
};

// r^δ - (1/s) N_R N_R' - (1/k) N_C N_C' + (1/(ks)) r r'.
Eigen::MatrixXd InfoMatrixContraction(const ContractionDesign& c);

// The bracket of the block-inverse form, expanded term by term:
// r^δ - (1/s)W - (1/k) X X'. Equal to InfoMatrixContraction entry for entry,
// since X X' and N_C N_C' differ by r r'/s.
Eigen::MatrixXd SchurRowBlock(const ContractionDesign& c);

double CBarV(const ContractionDesign& c);

// Schur complement in the column block, with the singular middle term
// r^δ - W/s regularised by (r̄²/v) J. The middle term dominates C, so it
// stays singular only for disconnected designs; those throw DisconnectedError.
Eigen::MatrixXd SchurColumnBlock(const ContractionDesign& c);
double CBarS(const ContractionDesign& c);

// C̄_s through the Woodbury identity only: (s-1)/C̄_s = (s-1) + tr(X' C^+ X)/k.
double CBarSWoodbury(const ContractionDesign& c);

// Diagnostic: the column block evaluated with the middle term taken as
// r^δ - W + J_{v,v} (no 1/s on W). Agrees with CBarS when W acts as a
// multiple of the identity on the relevant subspace and drifts otherwise.
double CBarSPrintedMiddle(const ContractionDesign& c);

// (v+s) x (v+s) matrix
//   diag(sI, vI)^{-1/2} [ r^δ - W/s   X  ;  X'   k I_s ] diag(sI, vI)^{-1/2}.
// Its trivial eigenvectors are (1_v, 0) and (0, 1_s), with eigenvalues 0 and k/v.
Eigen::MatrixXd BMatrix(const ContractionDesign& c);

// The (v-1)+(s-1) non-trivial eigenvalues of BMatrix, descending.
std::vector<double> BNontrivialEigenvalues(const ContractionDesign& c);

// Canonical efficiency factors of the contraction as a row-column design.
std::vector<double> ContractionCefs(const ContractionDesign& c);
double ECon(const ContractionDesign& c);

// Average efficiency factor of the columns-only block design (v treatments in
// s blocks of size k).
double EColumn(const ContractionDesign& c);

// Average efficiency factor of the dual of the column design: s treatments in
// v blocks of sizes r_h. Computed from the dual incidence N_C'.
std::vector<double> DualColumnCefs(const ContractionDesign& c);
double EDualColumn(const ContractionDesign& c);

// True iff max |W N_C - r̄² J| <= tol.
bool IsGenerallyBalanced(const ContractionDesign& c, double tol = 1e-9);

double EAugFormula(int v_star, int v, int s, int k, double c_bar_v, double c_bar_s);

// u^δ - (1/s) M_R M_R' - (1/v) M_C M_C' + (1/n) u u', with M_R = X'Z_R and
// M_C = X'Z_C for the plot-level design matrices and n = vs.
Eigen::MatrixXd InfoMatrixAugmented(const AugmentedDesign& a);
std::vector<double> AugmentedCefs(const AugmentedDesign& a);
double EAugDirect(const AugmentedDesign& a);

EfficiencyReport FullReport(const ContractionDesign& c, bool include_direct);

// Eigen-free evaluators for the search inner loop. They use
// tr(M^+) = tr((M + w w')^{-1}) - 1 for a PSD matrix with unit null vector w,
// via a Cholesky factorisation, and return 0 for a disconnected design.
// No validation is performed.
namespace fast {

double ECon(const ContractionDesign& c);
double EColumn(const ContractionDesign& c);
// Returns E_aug via the closed form with C̄_v and C̄_s from traces.
double EAug(const ContractionDesign& c);
double EAug(const AugmentedDesign& a);

}  // namespace fast

}  // namespace augrc

#endif  // AUGRC_EFFICIENCY_HPP_
