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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances and time limits are pinned
// below.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "augrc/augment.hpp"
#include "augrc/design.hpp"
#include "augrc/design_io.hpp"
#include "augrc/efficiency.hpp"
#include "augrc/planner.hpp"
#include "augrc/search.hpp"
#include "cli.hpp"
#include "reference_contractions.hpp"
#include "test_util.hpp"

namespace augrc::acceptance {
namespace {

namespace fs = std::filesystem;

constexpr double kPrintedTol = 5e-5;        // four printed decimals
constexpr double kTableTol = 1e-4;          // six-decimal E_aug from four-decimal inputs
constexpr double kIdentityTol = 1e-8;       // formula vs direct, special-case identities
constexpr double kBandBelowPrinted = 0.01;  // search band on E_con
constexpr double kExhaustiveTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

std::string F(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

// ---------------------------------------------------------------- 1, 2

void Reproduce(Outcome& o, const std::string& stem, double cbv, double cbs, double eaug) {
  const ContractionDesign c = testing::LoadContraction(stem + "_contraction.txt");
  const AugmentedDesign printed = testing::LoadAugmented(stem + "_augmented.txt");
  o.Require(ValidateContraction(c).ok(), "contraction valid");
  const double got_v = CBarV(c), got_s = CBarS(c);
  const double formula = EAugFormula((c.v() - c.k()) * c.s() + c.k(), c.v(), c.s(), c.k(), got_v, got_s);
  const AugmentedDesign a = Augment(c);
  const double direct = EAugDirect(a);
  o.detail << "cBarV=" << F(got_v) << " cBarS=" << F(got_s) << " eAugFormula=" << F(formula)
           << " eAugDirect=" << F(direct) << " array=" << (a == printed ? "identical" : "DIFFERENT");
  o.Require(std::abs(got_v - cbv) <= kPrintedTol, "cBarV");
  o.Require(std::abs(got_s - cbs) <= kPrintedTol, "cBarS");
  o.Require(std::abs(formula - eaug) <= kPrintedTol, "eAugFormula");
  o.Require(a == printed, "augmented array");
  o.Require(std::abs(direct - eaug) <= kPrintedTol, "eAugDirect");
}

void Criterion1(Outcome& o) { Reproduce(o, "example1", 0.5739, 0.4828, 0.3881); }
void Criterion2(Outcome& o) { Reproduce(o, "example2", 0.7749, 0.7332, 0.6031); }

// ---------------------------------------------------------------- 3

void Criterion3(Outcome& o) {
  double worst = 0.0;
  int pass = 0;
  for (const cli::ReferenceContraction& r : cli::kReferenceContractions) {
    const double e = EAugFormula((r.v - r.k) * r.s + r.k, r.v, r.s, r.k, r.e_con, r.c_bar_s);
    worst = std::max(worst, std::abs(e - r.e_aug));
    pass += std::abs(e - r.e_aug) <= kTableTol;
  }
  o.detail << pass << "/21 rows within " << kTableTol << ", worst |diff|=" << std::scientific
           << std::setprecision(2) << worst;
  o.Require(pass == 21 && cli::kReferenceContractions.size() == 21, "rows");
}

// ---------------------------------------------------------------- 4

// Feasible grid points are visited in a fixed stride with a random
// replication assignment and seed until `count` connected designs exist.
std::vector<ContractionDesign> GridSample(int count, uint64_t seed) {
  const std::vector<testing::Params> grid = testing::PropertyGrid();
  Rng rng(seed);
  std::vector<ContractionDesign> out;
  // Rounded up so that one pass spans the whole grid, k = 5 included.
  const size_t step = std::max<size_t>(1, (grid.size() + count - 1) / count);
  for (size_t i = 0; out.size() < static_cast<size_t>(count); i += step) {
    const testing::Params& p = grid[i % grid.size()];
    std::vector<int> r = BalancedReplication(p.v, p.k, p.s);
    rng.Shuffle(r);
    ContractionDesign c = RandomContraction(p.v, p.s, p.k, r, rng.Below(1ULL << 40));
    if (testing::Connected(testing::PlotLevelInfo(c))) out.push_back(std::move(c));
  }
  return out;
}

void Criterion4(Outcome& o) {
  const std::vector<ContractionDesign> designs = GridSample(120, 2026);
  std::set<int> ks, ss;
  int vmin = 1000, vmax = 0;
  double worst = 0.0;
  for (const ContractionDesign& c : designs) {
    o.Require(ValidateContraction(c).ok(), "valid contraction");
    ks.insert(c.k());
    ss.insert(c.s());
    vmin = std::min(vmin, c.v());
    vmax = std::max(vmax, c.v());
    const double formula =
        EAugFormula((c.v() - c.k()) * c.s() + c.k(), c.v(), c.s(), c.k(), CBarV(c), CBarS(c));
    const double direct = EAugDirect(Augment(c));
    worst = std::max(worst, std::abs(formula - direct));
  }
  o.detail << designs.size() << " designs, k in {" << *ks.begin() << ".." << *ks.rbegin() << "}, s in {"
           << *ss.begin() << ".." << *ss.rbegin() << "}, v in {" << vmin << ".." << vmax
           << "}, worst |formula-direct|=" << std::scientific << std::setprecision(2) << worst;
  o.Require(designs.size() >= 100, "count");
  o.Require(ks == std::set<int>({2, 3, 4, 5}), "k coverage");
  o.Require(ss.size() == 8, "s coverage");
  o.Require(worst <= kIdentityTol, "formula-direct");
}

// ---------------------------------------------------------------- 5

double ExhaustiveOptimum442() {
  std::vector<int> a{1, 2, 3, 4}, b;
  double best = 0.0;
  do {
    b = {1, 2, 3, 4};
    do {
      bool binary = true;
      for (int j = 0; j < 4; ++j) binary &= a[j] != b[j];
      if (!binary) continue;
      const ContractionDesign c(4, LabelGrid::FromRows({a, b}));
      if (!testing::Connected(testing::PlotLevelInfo(c))) continue;
      best = std::max(best, testing::OracleECon(c));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return best;
}

void Criterion5(Outcome& o) {
  const SearchResult r = SearchContraction(12, 8, 3, SearchConfig{});
  const double econ = testing::OracleECon(r.best);
  const double band = 0.5739 - kBandBelowPrinted;
  o.detail << "(12,8,3) eCon=" << F(econ) << " (band " << F(band, 4) << ", "
           << F(r.elapsed_seconds, 1) << " s)";
  o.Require(ValidateContraction(r.best).ok(), "valid");
  o.Require(econ >= band, "band");

  const double optimum = ExhaustiveOptimum442();
  const SearchResult small = SearchContraction(4, 4, 2, SearchConfig{});
  o.detail << "; (4,4,2) search=" << F(small.objective, 9) << " exhaustive=" << F(optimum, 9);
  o.Require(std::abs(small.objective - optimum) <= kExhaustiveTol, "exhaustive optimum");
}

// ---------------------------------------------------------------- 6

// Structural invariants counted directly from the array.
bool StructureHolds(const AugmentedDesign& a, const std::vector<int>& r) {
  const int n_test = (a.v() - a.k()) * a.s();
  std::vector<int> test_seen(n_test + 1, 0);
  std::vector<int> row_checks(a.v(), 0);
  for (int j = 0; j < a.s(); ++j) {
    std::vector<int> check_seen(a.k(), 0);
    for (int i = 0; i < a.v(); ++i) {
      const int l = a.at(i, j);
      if (l < 1 || l > n_test + a.k()) return false;
      if (l <= n_test) {
        ++test_seen[l];
      } else {
        ++check_seen[l - n_test - 1];
        ++row_checks[i];
      }
    }
    for (int x : check_seen)
      if (x != 1) return false;
  }
  for (int l = 1; l <= n_test; ++l)
    if (test_seen[l] != 1) return false;
  for (int i = 0; i < a.v(); ++i)
    if (row_checks[i] != r[i]) return false;
  return true;
}

void Criterion6(Outcome& o) {
  int structural = 0, round_trip = 0;
  const std::vector<ContractionDesign> designs = testing::RandomContractions(100, 606);
  for (const ContractionDesign& c : designs) {
    const AugmentedDesign a = Augment(c);
    structural += StructureHolds(a, c.replication()) && ValidateAugmented(a, c.replication()).ok();
    round_trip += ExtractContraction(a) == c;
  }
  o.detail << structural << "/100 structurally valid, " << round_trip << "/100 round trips";
  o.Require(structural == 100, "structure");
  o.Require(round_trip == 100, "round trip");
}

// ---------------------------------------------------------------- 7

void Criterion7(Outcome& o) {
  double worst_v = std::abs(CBarV(testing::Example1()) - ECon(testing::Example1()));
  int equal = 1;
  for (const ContractionDesign& c : testing::RandomContractions(200, 707)) {
    if (!c.equally_replicated()) continue;
    ++equal;
    worst_v = std::max(worst_v, std::abs(CBarV(c) - ECon(c)));
  }
  o.detail << equal << " equally replicated designs, worst |cBarV-eCon|=" << std::scientific
           << std::setprecision(2) << worst_v << std::defaultfloat;
  o.Require(worst_v <= kIdentityTol, "equal replication identity");

  // k=4, v=16, s=8 from the default search; later seeds only if needed.
  std::optional<ContractionDesign> balanced;
  uint64_t seed = 0;
  for (; seed < 10 && !balanced; ++seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    const SearchResult r = SearchContraction(16, 8, 4, cfg);
    if (IsGenerallyBalanced(r.best)) balanced = r.best;
  }
  o.Require(balanced.has_value(), "generally balanced (16,8,4) design found");
  if (!balanced) return;
  const double cbs = CBarS(*balanced), edual = EDualColumn(*balanced);
  o.detail << "; (k,v,s)=(4,16,8) seed " << seed - 1 << ": generally balanced, cBarS=" << std::fixed
           << std::setprecision(6) << cbs << " eDual=" << edual << " eCon=" << ECon(*balanced);
  o.Require(std::abs(cbs - edual) <= kIdentityTol, "general balance identity");
}

// ---------------------------------------------------------------- 8

void Criterion8(Outcome& o) {
  const DesignPlan a = Plan(4, 0.20, 173);
  const DesignPlan b = PlanFixedGrid(8, 12, 3);
  const DesignPlan c = PlanFixedGrid(24, 16, 4);
  const DesignPlan d = PlanFixedGrid(16, 24, 3, GridOrientation::kRows);
  o.detail << "(v=" << a.v << ",s=" << a.s << ",surplus " << a.surplus << ") (v=" << b.v << ",s=" << b.s
           << ",capacity " << b.test_line_capacity << ") (v=" << c.v << ", " << F(100 * c.check_proportion, 2)
           << "%, " << c.test_line_capacity << ") (v=" << d.v << ", " << F(100 * d.check_proportion, 2) << "%, "
           << d.test_line_capacity << ")";
  o.Require(a.v == 20 && a.s == 11 && a.surplus == 3, "proportion plan");
  o.Require(b.v == 12 && b.s == 8 && b.test_line_capacity == 72, "96-well plan");
  o.Require(c.v == 24 && c.s == 16 && F(100 * c.check_proportion, 2) == "16.67" && c.test_line_capacity == 320,
            "384-well plan, v=24");
  o.Require(d.v == 16 && F(100 * d.check_proportion, 2) == "18.75" && d.test_line_capacity == 312,
            "384-well plan, v=16");
}

// ---------------------------------------------------------------- 9

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Criterion9(Outcome& o) {
  const fs::path root = fs::temp_directory_path() / "augrc_acceptance_determinism";
  fs::remove_all(root);
  std::ostringstream sink;
  auto run = [&](const std::string& dir, const std::string& threads) {
    return cli::Run({"generate", "--v", "12", "--s", "8", "--k", "3", "--seed", "7", "--direct", "--threads",
                     threads, "--out", (root / dir).string()},
                    sink, sink);
  };
  const int c1 = run("serial1", "1"), c2 = run("serial2", "1"), c3 = run("concurrent", "4");
  o.Require(c1 == 0 && c2 == 0 && c3 == 0, "generate exit codes");
  int identical = 0, total = 0;
  for (const char* name : {"contraction.txt", "augmented.txt", "report.json", "search.json", "manifest.json"}) {
    const std::string a = Slurp(root / "serial1" / name);
    ++total;
    identical += !a.empty() && a == Slurp(root / "serial2" / name) && a == Slurp(root / "concurrent" / name);
  }
  o.detail << identical << "/" << total << " artifacts byte-identical across two serial runs and a 4-thread run";
  o.Require(identical == total, "byte identity");
  fs::remove_all(root);
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace augrc::acceptance

int main() {
  using namespace augrc::acceptance;
  const std::vector<Criterion> criteria = {
      {1, "Example 1 reproduction", 5, Criterion1},
      {2, "Example 2 reproduction", 30, Criterion2},
      {3, "Reference table formula check", 1, Criterion3},
      {4, "Formula-direct equivalence", 300, Criterion4},
      {5, "Search quality bands", 60, Criterion5},
      {6, "Structural and round-trip suite", 60, Criterion6},
      {7, "Special-case identities", 600, Criterion7},
      {8, "Planner reproduction", 1, Criterion8},
      {9, "Determinism", 600, Criterion9},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " EXCEPTION: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail << " FAILED[runtime over " << c.limit_seconds << " s]";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s) " << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
