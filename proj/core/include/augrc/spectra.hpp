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

#ifndef AUGRC_SPECTRA_HPP_
#define AUGRC_SPECTRA_HPP_

#include <vector>

#include <Eigen/Dense>

namespace augrc {

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  int trivial_count = 0;            // eigenvalues below TrivialTolerance
};

// Zero threshold for a spectrum: 1e-7 times the largest magnitude, floored at 1e-7.
double TrivialTolerance(const std::vector<double>& eigenvalues);

// Dense symmetric eigendecomposition. Throws NumericalError if `m` is not
// symmetric to 1e-10 (relative) or the reconstruction residual exceeds
// 1e-9 of the max-row-sum norm.
Spectrum EigSymmetric(const Eigen::MatrixXd& m);

// m / sum(1/lambda) over the eigenvalues outside the `expected_trivial`
// near-zero ones. A negative `tol` selects TrivialTolerance. Throws
// DisconnectedError when more eigenvalues are near zero, RankAnomalyError
// when fewer.
double HarmonicMeanNontrivial(const Spectrum& sp, int expected_trivial, double tol = -1.0);

// Same, for a plain list of non-trivial values.
double HarmonicMean(const std::vector<double>& values);

// Spectrum of u^{-1/2} A u^{-1/2}. `a` must have zero row sums; exactly one
// trivial zero is expected. The non-trivial eigenvalues are the canonical
// efficiency factors.
Spectrum CefsFromInfo(const Eigen::MatrixXd& a, const Eigen::VectorXd& u);

// The non-trivial part of a spectrum, descending.
std::vector<double> NontrivialValues(const Spectrum& sp, int expected_trivial, double tol = -1.0);

// Eigenvalues of P m P where P projects out `trivial` (columns need not be
// orthonormal), with the resulting trivial zeros removed. Used for matrices
// whose trivial directions carry non-zero eigenvalues.
std::vector<double> DeflatedEigenvalues(const Eigen::MatrixXd& m, const Eigen::MatrixXd& trivial);

}  // namespace augrc

#endif  // AUGRC_SPECTRA_HPP_
