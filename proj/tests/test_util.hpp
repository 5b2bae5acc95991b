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

// Fixtures and independent oracles shared by the test binaries. Nothing here
// calls the eigen- or Cholesky-based routes under test.

#ifndef AUGRC_TESTS_TEST_UTIL_HPP_
#define AUGRC_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "augrc/design.hpp"
#include "augrc/design_io.hpp"
#include "augrc/search.hpp"

namespace augrc::testing {

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(AUGRC_TEST_DATA_DIR) / name;
}

inline ContractionDesign LoadContraction(const std::string& name) {
  return std::get<ContractionDesign>(ReadDesignFile(DataPath(name)));
}

inline AugmentedDesign LoadAugmented(const std::string& name) {
  return std::get<AugmentedDesign>(ReadDesignFile(DataPath(name)));
}

inline ContractionDesign Example1() { return LoadContraction("example1_contraction.txt"); }
inline ContractionDesign Example2() { return LoadContraction("example2_contraction.txt"); }

inline ContractionDesign LatinSquare3() {
  return ContractionDesign(3, LabelGrid::FromRows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
}

// Cyclic Jacobi eigenvalue iteration; ascending order.
inline std::vector<double> JacobiEigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-26) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

// Average efficiency factor from pairwise variances of treatment contrasts.
// With any generalised inverse G of the information matrix A,
//   sum_{i,j} u_i u_j Var(t_i - t_j) / (2n)  =  tr((u^{-1/2} A u^{-1/2})^+),
// n = sum(u), so the efficiency is (t - 1) divided by that weighted sum.
// G is taken as (A + J)^{-1} through an LU factorisation.
inline double PairwiseVarianceEfficiency(const Eigen::MatrixXd& a, const Eigen::VectorXd& u) {
  const Eigen::Index t = a.rows();
  const Eigen::MatrixXd g =
      (a + Eigen::MatrixXd::Ones(t, t)).fullPivLu().inverse();
  double weighted = 0.0;
  for (Eigen::Index i = 0; i < t; ++i) {
    for (Eigen::Index j = 0; j < t; ++j) {
      weighted += u(i) * u(j) * (g(i, i) + g(j, j) - 2.0 * g(i, j));
    }
  }
  const double n = u.sum();
  return static_cast<double>(t - 1) / (weighted / (2.0 * n));
}

// Row-column information matrix of a contraction, assembled from explicit
// plot-level design matrices X (plots x v), Z_R (plots x k), Z_C (plots x s).
inline Eigen::MatrixXd PlotLevelInfo(const ContractionDesign& c) {
  const int v = c.v(), k = c.k(), s = c.s(), n = k * s;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, v), zr = Eigen::MatrixXd::Zero(n, k),
                  zc = Eigen::MatrixXd::Zero(n, s);
  for (int i = 0, p = 0; i < k; ++i) {
    for (int j = 0; j < s; ++j, ++p) {
      x(p, c.at(i, j) - 1) = 1;
      zr(p, i) = 1;
      zc(p, j) = 1;
    }
  }
  const Eigen::VectorXd r = x.colwise().sum().transpose();
  const Eigen::MatrixXd mr = x.transpose() * zr, mc = x.transpose() * zc;
  Eigen::MatrixXd a = -mr * mr.transpose() / s - mc * mc.transpose() / k + r * r.transpose() / n;
  a.diagonal() += r;
  return a;
}

inline Eigen::VectorXd ReplicationVector(const ContractionDesign& c) {
  Eigen::VectorXd r(c.v());
  for (int h = 0; h < c.v(); ++h) r(h) = c.replication()[h];
  return r;
}

// E_con through the pairwise-variance route.
inline double OracleECon(const ContractionDesign& c) {
  return PairwiseVarianceEfficiency(PlotLevelInfo(c), ReplicationVector(c));
}

struct Params {
  int v, s, k;
};

// Feasible (v, s, k) with k in [2,5], s in [3,10], v in [s,20].
inline std::vector<Params> PropertyGrid() {
  std::vector<Params> grid;
  for (int k = 2; k <= 5; ++k)
    for (int s = 3; s <= 10; ++s)
      for (int v = s; v <= 20; ++v)
        if (FeasibilityDf(v, s, k) >= 0 && k <= v) grid.push_back({v, s, k});
  return grid;
}

// True when the row-column information matrix has a single zero eigenvalue.
inline bool Connected(const Eigen::MatrixXd& info) {
  int zeros = 0;
  for (double x : JacobiEigenvalues(info)) zeros += std::abs(x) < 1e-9;
  return zeros == 1;
}

// Deterministic stream of random valid, connected contractions drawn from
// PropertyGrid. Disconnected draws are skipped.
inline std::vector<ContractionDesign> RandomContractions(int count, uint64_t seed) {
  const std::vector<Params> grid = PropertyGrid();
  Rng rng(seed);
  std::vector<ContractionDesign> out;
  while (static_cast<int>(out.size()) < count) {
    const Params p = grid[rng.Below(grid.size())];
    std::vector<int> r = BalancedReplication(p.v, p.k, p.s);
    rng.Shuffle(r);
    ContractionDesign c = RandomContraction(p.v, p.s, p.k, r, rng.Below(1u << 30));
    if (Connected(PlotLevelInfo(c))) out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<double> SortedAscending(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace augrc::testing

#endif  // AUGRC_TESTS_TEST_UTIL_HPP_
