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

#include "augrc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "augrc/errors.hpp"

namespace augrc {

namespace {

double MaxRowSum(const Eigen::MatrixXd& m) {
  return m.rows() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

double TrivialTolerance(const std::vector<double>& eigenvalues) {
  double largest = 1.0;
  for (double x : eigenvalues) largest = std::max(largest, std::abs(x));
  return 1e-7 * largest;
}

Spectrum EigSymmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw NumericalError("matrix is not square");
  const double norm = MaxRowSum(m);
  const double asym = MaxRowSum(m - m.transpose());
  if (asym > 1e-10 * std::max(norm, 1.0)) {
    throw NumericalError("matrix is not symmetric (asymmetry " + std::to_string(asym) + ")");
  }
  Spectrum sp;
  if (m.rows() == 0) return sp;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  const Eigen::MatrixXd& q = solver.eigenvectors();
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double residual = MaxRowSum(m - q * lambda.asDiagonal() * q.transpose());
  if (residual > 1e-9 * std::max(norm, 1.0)) {
    throw NumericalError("eigendecomposition residual " + std::to_string(residual) +
                         " exceeds tolerance");
  }
  // Eigen returns ascending order.
  sp.eigenvalues.assign(lambda.data(), lambda.data() + lambda.size());
  std::reverse(sp.eigenvalues.begin(), sp.eigenvalues.end());
  const double tol = TrivialTolerance(sp.eigenvalues);
  sp.trivial_count = static_cast<int>(
      std::count_if(sp.eigenvalues.begin(), sp.eigenvalues.end(),
                    [tol](double x) { return std::abs(x) < tol; }));
  return sp;
}

std::vector<double> NontrivialValues(const Spectrum& sp, int expected_trivial, double tol) {
  if (tol < 0) tol = TrivialTolerance(sp.eigenvalues);
  std::vector<double> kept;
  int zeros = 0;
  for (double x : sp.eigenvalues) {
    if (std::abs(x) < tol) {
      ++zeros;
    } else {
      kept.push_back(x);
    }
  }
  if (zeros > expected_trivial) {
    throw DisconnectedError("disconnected design: " + std::to_string(zeros) +
                            " near-zero eigenvalues, expected " + std::to_string(expected_trivial));
  }
  if (zeros < expected_trivial) {
    throw RankAnomalyError("rank anomaly: " + std::to_string(zeros) +
                           " near-zero eigenvalues, expected " + std::to_string(expected_trivial));
  }
  return kept;
}

double HarmonicMean(const std::vector<double>& values) {
  if (values.empty()) throw NumericalError("harmonic mean of an empty set");
  double inv = 0.0;
  for (double x : values) inv += 1.0 / x;
  return static_cast<double>(values.size()) / inv;
}

double HarmonicMeanNontrivial(const Spectrum& sp, int expected_trivial, double tol) {
  return HarmonicMean(NontrivialValues(sp, expected_trivial, tol));
}

Spectrum CefsFromInfo(const Eigen::MatrixXd& a, const Eigen::VectorXd& u) {
  if (a.rows() != u.size()) throw NumericalError("replication vector does not match matrix size");
  if ((u.array() <= 0).any()) throw NumericalError("replications must be positive");
  const double row_sum = a.rowwise().sum().cwiseAbs().maxCoeff();
  if (row_sum > 1e-8 * std::max(MaxRowSum(a), 1.0)) {
    throw NumericalError("information matrix has non-zero row sums (" + std::to_string(row_sum) + ")");
  }
  const Eigen::VectorXd scale = u.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd scaled = scale.asDiagonal() * a * scale.asDiagonal();
  Spectrum sp = EigSymmetric(0.5 * (scaled + scaled.transpose()));
  if (sp.trivial_count > 1) {
    throw DisconnectedError("disconnected design: " + std::to_string(sp.trivial_count) +
                            " zero canonical efficiency factors");
  }
  return sp;
}

std::vector<double> DeflatedEigenvalues(const Eigen::MatrixXd& m, const Eigen::MatrixXd& trivial) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(trivial);
  const Eigen::MatrixXd basis =
      qr.householderQ() * Eigen::MatrixXd::Identity(trivial.rows(), trivial.cols());
  const Eigen::MatrixXd p =
      Eigen::MatrixXd::Identity(m.rows(), m.rows()) - basis * basis.transpose();
  const Eigen::MatrixXd pm = p * m * p;
  Spectrum sp = EigSymmetric(0.5 * (pm + pm.transpose()));
  return NontrivialValues(sp, static_cast<int>(trivial.cols()));
}

}  // namespace augrc
