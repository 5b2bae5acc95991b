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

#include "augrc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "augrc/efficiency.hpp"

namespace augrc {

uint64_t Rng::Below(uint64_t n) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::Real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------------------
// Random starting designs

namespace {

class BinaryFiller {
 public:
  BinaryFiller(int v, int s, int k, const std::vector<int>& r, Rng& rng, long node_limit)
      : v_(v), s_(s), k_(k), remaining_(r), rng_(rng), node_limit_(node_limit),
        grid_(k, s, 0), in_row_(static_cast<size_t>(k) * (v + 1), 0),
        in_col_(static_cast<size_t>(s) * (v + 1), 0) {}

  bool Fill() { return Place(0); }
  LabelGrid TakeGrid() { return std::move(grid_); }

 private:
  // Cells are filled column by column.
  bool Place(int idx) {
    if (idx == k_ * s_) return true;
    if (++nodes_ > node_limit_) return false;
    const int i = idx % k_, j = idx / k_;
    if (i == 0) {
      // Every label must still fit into the columns left, one per column.
      for (int h = 1; h <= v_; ++h) {
        if (remaining_[h - 1] > s_ - j) return false;
      }
    }
    std::vector<std::pair<uint64_t, Label>> candidates;
    for (Label h = 1; h <= v_; ++h) {
      if (remaining_[h - 1] > 0 && !InRow(i, h) && !InCol(j, h)) {
        // Most remaining replications first, random among equals.
        const uint64_t key = (static_cast<uint64_t>(remaining_[h - 1]) << 40) | rng_.Below(1ULL << 40);
        candidates.emplace_back(key, h);
      }
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    for (const auto& [key, h] : candidates) {
      Set(i, j, h, true);
      if (Place(idx + 1)) return true;
      Set(i, j, h, false);
      if (nodes_ > node_limit_) return false;
    }
    return false;
  }

  bool InRow(int i, Label h) const { return in_row_[static_cast<size_t>(i) * (v_ + 1) + h]; }
  bool InCol(int j, Label h) const { return in_col_[static_cast<size_t>(j) * (v_ + 1) + h]; }
  void Set(int i, int j, Label h, bool on) {
    in_row_[static_cast<size_t>(i) * (v_ + 1) + h] = on;
    in_col_[static_cast<size_t>(j) * (v_ + 1) + h] = on;
    remaining_[h - 1] += on ? -1 : 1;
    grid_(i, j) = on ? h : 0;
  }

  int v_, s_, k_;
  std::vector<int> remaining_;
  Rng& rng_;
  long node_limit_;
  long nodes_ = 0;
  LabelGrid grid_;
  std::vector<char> in_row_, in_col_;
};

}  // namespace

ContractionDesign RandomContraction(int v, int s, int k, const std::vector<int>& r, uint64_t seed) {
  if (v < 1 || s < 1 || k < 1) throw InfeasibleError("v, s and k must be positive");
  if (static_cast<int>(r.size()) != v) throw InfeasibleError("replication vector must have v entries");
  if (std::accumulate(r.begin(), r.end(), 0) != k * s) {
    throw InfeasibleError("replications must sum to ks=" + std::to_string(k * s));
  }
  if (k > v || s > v) throw InfeasibleError("a binary k x s array needs k <= v and s <= v");
  for (int h = 0; h < v; ++h) {
    if (r[h] < 0 || r[h] > std::min(k, s)) {
      throw InfeasibleError("label " + std::to_string(h + 1) + " cannot be replicated " +
                            std::to_string(r[h]) + " times in a binary " + std::to_string(k) +
                            " x " + std::to_string(s) + " array");
    }
  }
  constexpr int kAttempts = 64;
  const long node_limit = 20000L + 200L * k * s;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(attempt));
    BinaryFiller filler(v, s, k, r, rng, node_limit);
    if (filler.Fill()) return ContractionDesign(v, filler.TakeGrid(), r);
  }
  throw InfeasibleError("could not construct a binary contraction for v=" + std::to_string(v) +
                        " s=" + std::to_string(s) + " k=" + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Moves

namespace {

// Can `label` sit at (i, j) once cell `skip` has been vacated?
bool Fits(const ContractionDesign& c, Label label, int i, int j, int skip_i, int skip_j) {
  for (int jj = 0; jj < c.s(); ++jj) {
    if (jj == j || (i == skip_i && jj == skip_j)) continue;
    if (c.at(i, jj) == label) return false;
  }
  for (int ii = 0; ii < c.k(); ++ii) {
    if (ii == i || (ii == skip_i && j == skip_j)) continue;
    if (c.at(ii, j) == label) return false;
  }
  return true;
}

}  // namespace

bool IsValidMove(const ContractionDesign& c, const Move& m) {
  if (m.i1 < 0 || m.i2 < 0 || m.i1 >= c.k() || m.i2 >= c.k()) return false;
  if (m.j1 < 0 || m.j2 < 0 || m.j1 >= c.s() || m.j2 >= c.s()) return false;
  if (m.i1 == m.i2 && m.j1 == m.j2) return false;
  if (m.kind == Move::Kind::kWithinColumn && m.j1 != m.j2) return false;
  if (m.kind == Move::Kind::kWithinRow && m.i1 != m.i2) return false;
  const Label a = c.at(m.i1, m.j1), b = c.at(m.i2, m.j2);
  if (a == b) return false;
  return Fits(c, b, m.i1, m.j1, m.i2, m.j2) && Fits(c, a, m.i2, m.j2, m.i1, m.j1);
}

ContractionDesign ApplyMove(const ContractionDesign& c, const Move& m) {
  return c.Swapped(m.i1, m.j1, m.i2, m.j2);
}

std::vector<Move> NeighborMoves(const ContractionDesign& c) {
  std::vector<Move> moves;
  const int k = c.k(), s = c.s();
  auto consider = [&](Move m) {
    if (IsValidMove(c, m)) moves.push_back(m);
  };
  for (int j = 0; j < s; ++j) {
    for (int i1 = 0; i1 < k; ++i1) {
      for (int i2 = i1 + 1; i2 < k; ++i2) consider({Move::Kind::kWithinColumn, i1, j, i2, j});
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j1 = 0; j1 < s; ++j1) {
      for (int j2 = j1 + 1; j2 < s; ++j2) consider({Move::Kind::kWithinRow, i, j1, i, j2});
    }
  }
  for (int a = 0; a < k * s; ++a) {
    for (int b = a + 1; b < k * s; ++b) {
      const int i1 = a / s, j1 = a % s, i2 = b / s, j2 = b % s;
      if (i1 == i2 || j1 == j2) continue;  // covered by the kinds above
      consider({Move::Kind::kAnyPair, i1, j1, i2, j2});
    }
  }
  return moves;
}

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kHillClimb: return "hillclimb";
    case Strategy::kAnneal: return "anneal";
    case Strategy::kColumnFirst: return "column-first";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : {Strategy::kHillClimb, Strategy::kAnneal, Strategy::kColumnFirst}) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view ObjectiveName(Objective o) {
  return o == Objective::kECon ? "e-con" : "e-aug";
}

std::optional<Objective> ParseObjective(std::string_view name) {
  if (name == "e-con") return Objective::kECon;
  if (name == "e-aug") return Objective::kEAug;
  return std::nullopt;
}

void ValidateConfig(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw InfeasibleError("restarts must be at least 1");
  if (cfg.max_iters < 1) throw InfeasibleError("iterations must be at least 1");
  if (!(cfg.anneal.decay > 0.0 && cfg.anneal.decay < 1.0)) {
    throw InfeasibleError("anneal decay must lie in (0, 1)");
  }
  if (!(cfg.anneal.initial_temperature > 0.0)) throw InfeasibleError("anneal temperature must be positive");
  if (cfg.time_budget_seconds && !(*cfg.time_budget_seconds > 0.0)) {
    throw InfeasibleError("time budget must be positive");
  }
}

// ---------------------------------------------------------------------------
// Restart driver shared by both searches

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds) {
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
    }
  }
  bool Passed() {
    if (!at_) return false;
    if (hit_.load(std::memory_order_relaxed)) return true;
    if (Clock::now() >= *at_) hit_.store(true, std::memory_order_relaxed);
    return hit_.load(std::memory_order_relaxed);
  }

 private:
  std::optional<Clock::time_point> at_;
  std::atomic<bool> hit_{false};
};

// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <typename Fn>
void ParallelFor(int n, int threads, Fn&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Metropolis or strict-improvement acceptance.
class Acceptor {
 public:
  Acceptor(bool anneal, const AnnealSchedule& schedule)
      : anneal_(anneal), temperature_(schedule.initial_temperature), decay_(schedule.decay) {}

  bool Accept(double delta, Rng& rng) const {
    if (!anneal_) return delta > 1e-12;
    if (delta >= 0.0) return true;
    return rng.Real() < std::exp(delta / temperature_);
  }
  void Cool() { temperature_ *= decay_; }

 private:
  bool anneal_;
  double temperature_;
  double decay_;
};

template <typename Design>
struct RestartOutcome {
  Design best;
  double objective = 0.0;
  std::vector<TracePoint> trace;
  bool exhausted = false;
};

constexpr double kImprovement = 1e-12;

Move SampleMove(const ContractionDesign& c, const std::vector<Move::Kind>& kinds, Rng& rng) {
  const int k = c.k(), s = c.s();
  const Move::Kind kind = kinds[rng.Below(kinds.size())];
  Move m{kind, 0, 0, 0, 0};
  switch (kind) {
    case Move::Kind::kWithinColumn: {
      m.j1 = m.j2 = static_cast<int>(rng.Below(s));
      m.i1 = static_cast<int>(rng.Below(k));
      m.i2 = k > 1 ? static_cast<int>(rng.Below(k - 1)) : 0;
      if (m.i2 >= m.i1) ++m.i2;
      break;
    }
    case Move::Kind::kWithinRow: {
      m.i1 = m.i2 = static_cast<int>(rng.Below(k));
      m.j1 = static_cast<int>(rng.Below(s));
      m.j2 = s > 1 ? static_cast<int>(rng.Below(s - 1)) : 0;
      if (m.j2 >= m.j1) ++m.j2;
      break;
    }
    case Move::Kind::kAnyPair: {
      const int n = k * s;
      const int a = static_cast<int>(rng.Below(n));
      int b = n > 1 ? static_cast<int>(rng.Below(n - 1)) : 0;
      if (b >= a) ++b;
      m.i1 = a / s;
      m.j1 = a % s;
      m.i2 = b / s;
      m.j2 = b % s;
      break;
    }
  }
  return m;
}

struct Phase {
  std::vector<Move::Kind> kinds;
  std::function<double(const ContractionDesign&)> objective;
  long iterations;
  bool anneal;
  bool traced;
};

RestartOutcome<ContractionDesign> RunContractionRestart(ContractionDesign start,
                                                        const std::vector<Phase>& phases,
                                                        const SearchConfig& cfg, Rng& rng,
                                                        Deadline& deadline) {
  RestartOutcome<ContractionDesign> out;
  ContractionDesign current = std::move(start);
  long iteration = 0;
  size_t phase_index = 0;
  for (; phase_index < phases.size(); ++phase_index) {
    const Phase& phase = phases[phase_index];
    auto evaluate = [&](const ContractionDesign& d) {
      if (cfg.on_evaluate) cfg.on_evaluate(d);
      return phase.objective(d);
    };
    double current_obj = evaluate(current);
    ContractionDesign phase_best = current;
    double phase_best_obj = current_obj;
    if (phase.traced) out.trace.push_back({iteration, current_obj});
    Acceptor acceptor(phase.anneal, cfg.anneal);
    for (long t = 0; t < phase.iterations; ++t, ++iteration, acceptor.Cool()) {
      if ((t & 63) == 0 && deadline.Passed()) {
        out.exhausted = true;
        break;
      }
      const Move m = SampleMove(current, phase.kinds, rng);
      if (!IsValidMove(current, m)) continue;
      ContractionDesign candidate = ApplyMove(current, m);
      const double obj = evaluate(candidate);
      if (!acceptor.Accept(obj - current_obj, rng)) continue;
      current = std::move(candidate);
      current_obj = obj;
      if (current_obj > phase_best_obj + kImprovement) {
        phase_best = current;
        phase_best_obj = current_obj;
        if (phase.traced) out.trace.push_back({iteration + 1, current_obj});
      }
    }
    // The next phase starts from this phase's best design.
    current = std::move(phase_best);
    out.best = current;
    out.objective = phase_best_obj;
    if (out.exhausted) break;
  }
  if (phase_index + 1 < phases.size()) {
    // Budget ran out before the final phase; report the final objective.
    out.objective = phases.back().objective(out.best);
    out.trace.push_back({iteration, out.objective});
  }
  return out;
}

template <typename Design>
int PickWinner(const std::vector<RestartOutcome<Design>>& outcomes) {
  int winner = 0;
  for (int i = 1; i < static_cast<int>(outcomes.size()); ++i) {
    if (outcomes[i].objective > outcomes[winner].objective) winner = i;
  }
  return winner;
}

}  // namespace

SearchResult SearchContraction(int v, int s, int k, const SearchConfig& cfg) {
  ValidateConfig(cfg);
  const std::vector<int> r = BalancedReplication(v, k, s);
  if (s > v) throw InfeasibleError("s=" + std::to_string(s) + " exceeds v=" + std::to_string(v));
  const auto started = Clock::now();
  Deadline deadline(cfg.time_budget_seconds);

  std::function<double(const ContractionDesign&)> objective =
      cfg.objective == Objective::kECon
          ? std::function<double(const ContractionDesign&)>(
                [](const ContractionDesign& d) { return fast::ECon(d); })
          : [](const ContractionDesign& d) { return fast::EAug(d); };
  std::vector<Move::Kind> all_kinds{Move::Kind::kWithinColumn, Move::Kind::kWithinRow,
                                    Move::Kind::kAnyPair};
  std::vector<Phase> phases;
  switch (cfg.strategy) {
    case Strategy::kHillClimb:
      phases.push_back({all_kinds, objective, cfg.max_iters, false, true});
      break;
    case Strategy::kAnneal:
      phases.push_back({all_kinds, objective, cfg.max_iters, true, true});
      break;
    case Strategy::kColumnFirst: {
      const long first = cfg.max_iters / 2;
      phases.push_back({{Move::Kind::kWithinRow, Move::Kind::kAnyPair},
                        [](const ContractionDesign& d) { return fast::EColumn(d); }, first, true, false});
      phases.push_back({{Move::Kind::kWithinColumn}, objective, cfg.max_iters - first, true, true});
      break;
    }
  }

  std::vector<RestartOutcome<ContractionDesign>> outcomes(cfg.restarts);
  ParallelFor(cfg.restarts, cfg.threads, [&](int i) {
    const uint64_t restart_seed = cfg.seed ^ static_cast<uint64_t>(i);
    Rng rng(restart_seed);
    ContractionDesign start = RandomContraction(v, s, k, r, rng.Below(std::numeric_limits<uint64_t>::max()));
    outcomes[i] = RunContractionRestart(std::move(start), phases, cfg, rng, deadline);
  });

  const int winner = PickWinner(outcomes);
  SearchResult result;
  result.best = outcomes[winner].best;
  result.objective = outcomes[winner].objective;
  result.trace = outcomes[winner].trace;
  result.restart_of_best = winner;
  result.budget_exhausted =
      std::any_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.exhausted; });
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

// ---------------------------------------------------------------------------
// Direct search on the augmented array

namespace {

AugmentedDesign RandomAugmented(int v, int s, int k, Rng& rng) {
  const int n_test = (v - k) * s;
  LabelGrid grid(v, s, 0);
  std::vector<int> rows(v);
  std::iota(rows.begin(), rows.end(), 0);
  for (int j = 0; j < s; ++j) {
    rng.Shuffle(rows);
    for (int c = 0; c < k; ++c) grid(rows[c], j) = n_test + 1 + c;
  }
  Label next = 1;
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < v; ++i) {
      if (grid(i, j) == 0) grid(i, j) = next++;
    }
  }
  return AugmentedDesign(k, std::move(grid));
}

AugmentedDesign CanonicalTestLines(const AugmentedDesign& a) {
  LabelGrid grid = a.cells();
  Label next = 1;
  for (int j = 0; j < a.s(); ++j) {
    for (int i = 0; i < a.v(); ++i) {
      if (!a.is_check(grid(i, j))) grid(i, j) = next++;
    }
  }
  return AugmentedDesign(a.k(), std::move(grid));
}

}  // namespace

DirectSearchResult SearchAugmentedDirect(int v, int s, int k, const SearchConfig& cfg) {
  ValidateConfig(cfg);
  if (cfg.strategy == Strategy::kColumnFirst) {
    throw InfeasibleError("column-first applies to contraction search only");
  }
  if (v < 1 || s < 1 || k < 1 || k > v) throw InfeasibleError("need 1 <= k <= v and s >= 1");
  if (const int df = FeasibilityDf(v, s, k); df < 0) {
    throw InfeasibleError("error df " + std::to_string(df) + " is negative");
  }
  const auto started = Clock::now();
  Deadline deadline(cfg.time_budget_seconds);
  const bool anneal = cfg.strategy == Strategy::kAnneal;

  std::vector<RestartOutcome<AugmentedDesign>> outcomes(cfg.restarts);
  ParallelFor(cfg.restarts, cfg.threads, [&](int restart) {
    Rng rng(cfg.seed ^ static_cast<uint64_t>(restart));
    RestartOutcome<AugmentedDesign>& out = outcomes[restart];
    AugmentedDesign current = RandomAugmented(v, s, k, rng);
    double current_obj = fast::EAug(current);
    out.best = current;
    out.objective = current_obj;
    out.trace.push_back({0, current_obj});
    Acceptor acceptor(anneal, cfg.anneal);
    std::vector<int> check_rows;
    for (long t = 0; t < cfg.max_iters; ++t, acceptor.Cool()) {
      if ((t & 15) == 0 && deadline.Passed()) {
        out.exhausted = true;
        break;
      }
      const int j = static_cast<int>(rng.Below(s));
      check_rows.clear();
      for (int i = 0; i < v; ++i) {
        if (current.is_check(current.at(i, j))) check_rows.push_back(i);
      }
      const int i1 = check_rows[rng.Below(check_rows.size())];
      int i2 = static_cast<int>(rng.Below(v - 1));
      if (i2 >= i1) ++i2;
      LabelGrid grid = current.cells();
      std::swap(grid(i1, j), grid(i2, j));
      AugmentedDesign candidate(k, std::move(grid));
      const double obj = fast::EAug(candidate);
      if (!acceptor.Accept(obj - current_obj, rng)) continue;
      current = std::move(candidate);
      current_obj = obj;
      if (current_obj > out.objective + kImprovement) {
        out.best = current;
        out.objective = current_obj;
        out.trace.push_back({t + 1, current_obj});
      }
    }
  });

  const int winner = PickWinner(outcomes);
  DirectSearchResult result;
  result.best = CanonicalTestLines(outcomes[winner].best);
  result.objective = outcomes[winner].objective;
  result.trace = outcomes[winner].trace;
  result.restart_of_best = winner;
  result.budget_exhausted =
      std::any_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.exhausted; });
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

}  // namespace augrc
