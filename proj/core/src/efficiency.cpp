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

#include "augrc/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "augrc/augment.hpp"
#include "augrc/spectra.hpp"

namespace augrc {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Parts {
  int v, k, s;
  VectorXd r;
  MatrixXd nr, nc, w, x;
};

// Incidence matrices in floating point. Assumes a structurally valid design.
Parts Decompose(const ContractionDesign& c) {
  Parts p{c.v(), c.k(), c.s(), VectorXd::Zero(c.v()), MatrixXd::Zero(c.v(), c.k()),
          MatrixXd::Zero(c.v(), c.s()), {}, {}};
  for (int i = 0; i < p.k; ++i) {
    for (int j = 0; j < p.s; ++j) {
      const int h = c.at(i, j) - 1;
      p.nr(h, i) = 1.0;
      p.nc(h, j) = 1.0;
      p.r(h) += 1.0;
    }
  }
  p.w = p.nr * p.nr.transpose();
  p.x = p.nc - p.r * VectorXd::Ones(p.s).transpose() / p.s;
  return p;
}

MatrixXd Info(const Parts& p) {
  MatrixXd m = -p.w / p.s - p.nc * p.nc.transpose() / p.k + p.r * p.r.transpose() / (p.k * p.s);
  m.diagonal() += p.r;
  return m;
}

MatrixXd Symmetrized(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// Moore-Penrose inverse of a PSD matrix known to have exactly
// `expected_null` zero eigenvalues.
MatrixXd PsdPseudoInverse(const MatrixXd& m, int expected_null) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(Symmetrized(m));
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  const VectorXd& lambda = solver.eigenvalues();
  const double tol = 1e-7 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  int zeros = 0;
  VectorXd inv(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) < tol) {
      ++zeros;
      inv(i) = 0.0;
    } else {
      inv(i) = 1.0 / lambda(i);
    }
  }
  if (zeros > expected_null) {
    throw DisconnectedError("disconnected design: " + std::to_string(zeros) + " zero eigenvalues");
  }
  if (zeros < expected_null) throw RankAnomalyError("unexpected full rank");
  return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
}

// Inverse of a symmetric matrix, or nullopt if it is numerically singular.
std::optional<MatrixXd> SymmetricInverse(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(Symmetrized(m));
  if (solver.info() != Eigen::Success) return std::nullopt;
  const VectorXd& lambda = solver.eigenvalues();
  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  if (lambda.cwiseAbs().minCoeff() < 1e-9 * scale) return std::nullopt;
  return solver.eigenvectors() * lambda.cwiseInverse().asDiagonal() *
         solver.eigenvectors().transpose();
}

MatrixXd ColumnBlockFromMiddle(const Parts& p, const MatrixXd& middle_inverse) {
  MatrixXd b = -p.x.transpose() * middle_inverse * p.x / p.k;
  b.diagonal().array() += 1.0;
  return b;
}

double HarmonicMeanOfColumnBlock(const MatrixXd& block) {
  return HarmonicMean(DeflatedEigenvalues(Symmetrized(block), VectorXd::Ones(block.rows())));
}

}  // namespace

Eigen::MatrixXd InfoMatrixContraction(const ContractionDesign& c) {
  RequireValid(c);
  return Info(Decompose(c));
}

Eigen::MatrixXd SchurRowBlock(const ContractionDesign& c) {
  RequireValid(c);
  const Parts p = Decompose(c);
  MatrixXd m = -p.w / p.s - p.x * p.x.transpose() / p.k;
  m.diagonal() += p.r;
  return m;
}

double CBarV(const ContractionDesign& c) {
  const MatrixXd info = InfoMatrixContraction(c);
  return HarmonicMeanNontrivial(EigSymmetric(Symmetrized(info)), 1) / c.mean_replication();
}

Eigen::MatrixXd SchurColumnBlock(const ContractionDesign& c) {
  RequireValid(c);
  const Parts p = Decompose(c);
  const double rbar = c.mean_replication();
  MatrixXd middle = -p.w / p.s;
  middle.diagonal() += p.r;
  middle.array() += rbar * rbar / p.v;
  if (std::optional<MatrixXd> inv = SymmetricInverse(middle)) {
    return ColumnBlockFromMiddle(p, *inv);
  }
  // r^δ - W/s dominates C, so a singular middle term means C lost rank too.
  throw DisconnectedError("middle term r^δ - W/s + cJ is singular");
}

double CBarS(const ContractionDesign& c) {
  return HarmonicMeanOfColumnBlock(SchurColumnBlock(c));
}

double CBarSWoodbury(const ContractionDesign& c) {
  RequireValid(c);
  const Parts p = Decompose(c);
  const MatrixXd c_pinv = PsdPseudoInverse(Info(p), 1);
  const double trace = (p.x.transpose() * c_pinv * p.x).trace() / p.k;
  return (p.s - 1) / ((p.s - 1) + trace);
}

double CBarSPrintedMiddle(const ContractionDesign& c) {
  RequireValid(c);
  const Parts p = Decompose(c);
  MatrixXd middle = -p.w;
  middle.diagonal() += p.r;
  middle.array() += 1.0;
  const std::optional<MatrixXd> inv = SymmetricInverse(middle);
  if (!inv) throw RankAnomalyError("printed middle term r^δ - W + J is singular");
  return HarmonicMeanOfColumnBlock(ColumnBlockFromMiddle(p, *inv));
}

Eigen::MatrixXd BMatrix(const ContractionDesign& c) {
  RequireValid(c);
  const Parts p = Decompose(c);
  const int n = p.v + p.s;
  MatrixXd m(n, n);
  m.topLeftCorner(p.v, p.v) = -p.w / p.s;
  m.topLeftCorner(p.v, p.v).diagonal() += p.r;
  m.topRightCorner(p.v, p.s) = p.x;
  m.bottomLeftCorner(p.s, p.v) = p.x.transpose();
  m.bottomRightCorner(p.s, p.s) = p.k * MatrixXd::Identity(p.s, p.s);
  VectorXd d(n);
  d.head(p.v).setConstant(1.0 / std::sqrt(static_cast<double>(p.s)));
  d.tail(p.s).setConstant(1.0 / std::sqrt(static_cast<double>(p.v)));
  return d.asDiagonal() * m * d.asDiagonal();
}

std::vector<double> BNontrivialEigenvalues(const ContractionDesign& c) {
  const MatrixXd b = BMatrix(c);
  const int v = c.v(), s = c.s();
  MatrixXd trivial = MatrixXd::Zero(v + s, 2);
  trivial.col(0).head(v).setOnes();
  trivial.col(1).tail(s).setOnes();
  return DeflatedEigenvalues(b, trivial);
}

std::vector<double> ContractionCefs(const ContractionDesign& c) {
  const MatrixXd info = InfoMatrixContraction(c);
  VectorXd r(c.v());
  for (int h = 0; h < c.v(); ++h) r(h) = c.replication()[h];
  return NontrivialValues(CefsFromInfo(info, r), 1);
}

double ECon(const ContractionDesign& c) { return HarmonicMean(ContractionCefs(c)); }

double EColumn(const ContractionDesign& c) {
  RequireValid(c);
  const Parts p = Decompose(c);
  MatrixXd info = -p.nc * p.nc.transpose() / p.k;
  info.diagonal() += p.r;
  return HarmonicMean(NontrivialValues(CefsFromInfo(info, p.r), 1));
}

std::vector<double> DualColumnCefs(const ContractionDesign& c) {
  RequireValid(c);
  if (c.s() < 2) throw ValidationError("dual column design needs s >= 2");
  const Parts p = Decompose(c);
  // Dual: columns are treatments (replicated k times), pseudo-treatments are
  // blocks of size r_h.
  MatrixXd info = -p.nc.transpose() * p.r.cwiseInverse().asDiagonal() * p.nc;
  info.diagonal().array() += p.k;
  return NontrivialValues(CefsFromInfo(info, VectorXd::Constant(p.s, p.k)), 1);
}

double EDualColumn(const ContractionDesign& c) { return HarmonicMean(DualColumnCefs(c)); }

bool IsGenerallyBalanced(const ContractionDesign& c, double tol) {
  RequireValid(c);
  const Parts p = Decompose(c);
  const double rbar = c.mean_replication();
  return ((p.w * p.nc).array() - rbar * rbar).abs().maxCoeff() <= tol;
}

double EAugFormula(int v_star, int v, int s, int k, double c_bar_v, double c_bar_s) {
  if (v_star < 1 || v < 1 || s < 1 || k < 1) throw NumericalError("counts must be positive");
  if (!(c_bar_v > 0.0) || !(c_bar_s > 0.0)) {
    throw NumericalError("C̄_v and C̄_s must be positive");
  }
  const double denom = v_star - (v + s) + 1 +
                       static_cast<double>(v) / k * ((v - 1) / c_bar_v + (s - 1) / c_bar_s);
  return (v_star - 1) / denom;
}

Eigen::MatrixXd InfoMatrixAugmented(const AugmentedDesign& a) {
  if (ValidationReport rep = ValidateAugmented(a); !rep.ok()) {
    throw ValidationError("invalid augmented design:\n" + rep.ToString());
  }
  const int v = a.v(), s = a.s(), vs = a.num_treatments();
  MatrixXd mr = MatrixXd::Zero(vs, v);
  MatrixXd mc = MatrixXd::Zero(vs, s);
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < s; ++j) {
      const int t = a.at(i, j) - 1;
      mr(t, i) += 1.0;
      mc(t, j) += 1.0;
    }
  }
  const VectorXd u = a.replication();
  MatrixXd info = -mr * mr.transpose() / s - mc * mc.transpose() / v +
                  u * u.transpose() / (static_cast<double>(v) * s);
  info.diagonal() += u;
  return info;
}

std::vector<double> AugmentedCefs(const AugmentedDesign& a) {
  std::vector<double> cefs = NontrivialValues(CefsFromInfo(InfoMatrixAugmented(a), a.replication()), 1);
  return cefs;
}

double EAugDirect(const AugmentedDesign& a) { return HarmonicMean(AugmentedCefs(a)); }

namespace {

std::vector<double> Clamped(std::vector<double> values) {
  for (double& x : values) x = std::clamp(x, 0.0, 1.0);
  return values;
}

}  // namespace

EfficiencyReport FullReport(const ContractionDesign& c, bool include_direct) {
  RequireValid(c);
  EfficiencyReport rep;
  rep.cefs_contraction = ContractionCefs(c);
  rep.e_con = HarmonicMean(rep.cefs_contraction);
  rep.cefs_contraction = Clamped(std::move(rep.cefs_contraction));
  rep.c_bar_v = CBarV(c);
  rep.c_bar_s = CBarS(c);
  rep.e_dual = EDualColumn(c);
  rep.generally_balanced = IsGenerallyBalanced(c);
  const int v_star = (c.v() - c.k()) * c.s() + c.k();
  rep.e_aug_formula = EAugFormula(v_star, c.v(), c.s(), c.k(), rep.c_bar_v, rep.c_bar_s);
  if (include_direct) {
    const AugmentedDesign a = Augment(c);
    std::vector<double> cefs = AugmentedCefs(a);
    rep.e_aug_direct = HarmonicMean(cefs);
    rep.cefs_augmented = Clamped(std::move(cefs));
  }
  return rep;
}

namespace fast {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// tr(M^+) for PSD `m` whose null space is spanned by unit vector `w`.
// Returns +inf when m has further (near-)null directions.
double TracePinv(MatrixXd m, const VectorXd& w) {
  m.noalias() += w * w.transpose();
  Eigen::LLT<MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) return kInf;
  const MatrixXd& l = llt.matrixLLT();
  const double scale = std::max(1.0, m.diagonal().maxCoeff());
  if (l.diagonal().array().square().minCoeff() < 1e-10 * scale) return kInf;
  MatrixXd inv_l = MatrixXd::Identity(m.rows(), m.rows());
  llt.matrixL().solveInPlace(inv_l);
  return inv_l.squaredNorm() - 1.0;
}

VectorXd UnitSqrt(const VectorXd& weights) {
  VectorXd w = weights.cwiseSqrt();
  return w / w.norm();
}

double EfficiencyFromTrace(int nontrivial, double trace) {
  return std::isfinite(trace) && trace > 0 ? nontrivial / trace : 0.0;
}

}  // namespace

double ECon(const ContractionDesign& c) {
  const Parts p = Decompose(c);
  const VectorXd scale = p.r.cwiseSqrt().cwiseInverse();
  const MatrixXd scaled = scale.asDiagonal() * Info(p) * scale.asDiagonal();
  return EfficiencyFromTrace(p.v - 1, TracePinv(scaled, UnitSqrt(p.r)));
}

double EColumn(const ContractionDesign& c) {
  const Parts p = Decompose(c);
  MatrixXd info = -p.nc * p.nc.transpose() / p.k;
  info.diagonal() += p.r;
  const VectorXd scale = p.r.cwiseSqrt().cwiseInverse();
  const MatrixXd scaled = scale.asDiagonal() * info * scale.asDiagonal();
  return EfficiencyFromTrace(p.v - 1, TracePinv(scaled, UnitSqrt(p.r)));
}

double EAug(const ContractionDesign& c) {
  const Parts p = Decompose(c);
  MatrixXd info = Info(p);
  const VectorXd ones = VectorXd::Ones(p.v) / std::sqrt(static_cast<double>(p.v));
  const double trace_v = TracePinv(info, ones);
  if (!std::isfinite(trace_v)) return 0.0;
  const double c_bar_v = (p.v - 1) / trace_v / c.mean_replication();
  // X'1 = 0, so X' C^+ X = X' (C + 11'/v)^{-1} X.
  info.noalias() += ones * ones.transpose();
  const Eigen::LLT<MatrixXd> llt(info);
  const MatrixXd half = llt.matrixL().solve(p.x);
  const double trace_s = (p.s - 1) + half.squaredNorm() / p.k;
  const double c_bar_s = (p.s - 1) / trace_s;
  const int v_star = (p.v - p.k) * p.s + p.k;
  return EAugFormula(v_star, p.v, p.s, p.k, c_bar_v, c_bar_s);
}

double EAug(const AugmentedDesign& a) {
  const int v = a.v(), s = a.s(), vs = a.num_treatments();
  MatrixXd mr = MatrixXd::Zero(vs, v);
  MatrixXd mc = MatrixXd::Zero(vs, s);
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < s; ++j) {
      const int t = a.at(i, j) - 1;
      mr(t, i) += 1.0;
      mc(t, j) += 1.0;
    }
  }
  const VectorXd u = a.replication();
  MatrixXd info = -mr * mr.transpose() / s - mc * mc.transpose() / v +
                  u * u.transpose() / (static_cast<double>(v) * s);
  info.diagonal() += u;
  const VectorXd scale = u.cwiseSqrt().cwiseInverse();
  const MatrixXd scaled = scale.asDiagonal() * info * scale.asDiagonal();
  return EfficiencyFromTrace(vs - 1, TracePinv(scaled, UnitSqrt(u)));
}

}  // namespace fast

}  // namespace augrc
