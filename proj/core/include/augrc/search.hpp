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

// Seeded interchange search for efficient contractions.
//
// Every move exchanges the contents of two cells, so the replication vector
// never changes and the search stays inside the set of row- and
// column-binary arrays. Restarts are independent; restart i draws from a
// generator seeded with seed ^ i and the winner is the highest objective,
// ties going to the lowest restart index. Results therefore do not depend on
// how many threads run the restarts.

#ifndef AUGRC_SEARCH_HPP_
#define AUGRC_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "augrc/design.hpp"

namespace augrc {

// mt19937_64 with integer and real draws that do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Uniform on [0, n). n must be positive.
  uint64_t Below(uint64_t n);
  // Uniform on [0, 1).
  double Real();
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[Below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// A valid row- and column-binary contraction with the given replication,
// built by randomised depth-first filling. Deterministic in `seed`. Throws
// InfeasibleError when (v, s, k, r) admits no binary array or the filling
// keeps failing.
ContractionDesign RandomContraction(int v, int s, int k, const std::vector<int>& r, uint64_t seed);

struct Move {
  enum class Kind {
    kWithinColumn,  // (i1, j) <-> (i2, j); keeps N_C
    kWithinRow,     // (i, j1) <-> (i, j2); keeps N_R
    kAnyPair,       // arbitrary cells
  };
  Kind kind;
  int i1, j1, i2, j2;

  bool operator==(const Move&) const = default;
};

// True when applying `m` to `c` keeps every row and column binary and
// actually changes the array.
bool IsValidMove(const ContractionDesign& c, const Move& m);
ContractionDesign ApplyMove(const ContractionDesign& c, const Move& m);

// All valid moves of each kind. Pairs are unordered, listed once per kind.
std::vector<Move> NeighborMoves(const ContractionDesign& c);

enum class Strategy { kHillClimb, kAnneal, kColumnFirst };
enum class Objective {
  kECon,  // average efficiency factor of the contraction
  kEAug,  // closed-form E_aug of the augmented design
};

std::string_view StrategyName(Strategy s);
std::optional<Strategy> ParseStrategy(std::string_view name);
std::string_view ObjectiveName(Objective o);
std::optional<Objective> ParseObjective(std::string_view name);

struct AnnealSchedule {
  double initial_temperature = 0.05;
  double decay = 0.999;  // per iteration
};

struct SearchConfig {
  uint64_t seed = 0;
  Strategy strategy = Strategy::kAnneal;
  Objective objective = Objective::kECon;
  int restarts = 50;
  int max_iters = 20000;  // move proposals per restart
  AnnealSchedule anneal;
  std::optional<double> time_budget_seconds;
  int threads = 0;  // 0: hardware concurrency
  // Called with every design whose objective is evaluated. Must be safe to
  // call concurrently when threads != 1.
  std::function<void(const ContractionDesign&)> on_evaluate;
};

// Throws InfeasibleError for an invalid configuration.
void ValidateConfig(const SearchConfig& cfg);

struct TracePoint {
  long iteration;
  double objective;
  bool operator==(const TracePoint&) const = default;
};

struct SearchResult {
  ContractionDesign best;
  double objective = 0.0;
  std::vector<TracePoint> trace;  // improvements of the winning restart
  double elapsed_seconds = 0.0;
  int restart_of_best = 0;
  bool budget_exhausted = false;
};

// Maximises the configured objective over contractions with balanced
// replication. Under kColumnFirst the first half of each restart maximises the
// column-design efficiency with row and any-pair moves, and the second half
// maximises the objective with within-column moves only. Throws
// InfeasibleError when (v, s, k) is infeasible.
SearchResult SearchContraction(int v, int s, int k, const SearchConfig& cfg);

struct DirectSearchResult {
  AugmentedDesign best;
  double objective = 0.0;  // E_aug of `best`
  std::vector<TracePoint> trace;
  double elapsed_seconds = 0.0;
  int restart_of_best = 0;
  bool budget_exhausted = false;
};

// Baseline that searches the v x s augmented array directly: within-column
// swaps of a check with a test line or of two checks, maximising E_aug. Each
// check stays once per column; row check counts are not controlled. Test
// lines in the result are relabelled in column-major order.
DirectSearchResult SearchAugmentedDirect(int v, int s, int k, const SearchConfig& cfg);

}  // namespace augrc

#endif  // AUGRC_SEARCH_HPP_
