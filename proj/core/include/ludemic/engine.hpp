// Copyright 2026 The Ludemic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUDEMIC_ENGINE_HPP_
#define LUDEMIC_ENGINE_HPP_

#include <cstdint>
#include <vector>

#include "ludemic/game.hpp"
#include "ludemic/game_state.hpp"
#include "ludemic/move.hpp"
#include "ludemic/random.hpp"

namespace ludemic {

struct TrialRecord {
  Move move;
  // GameState::Hash() of the state the move led to.
  std::uint64_t hash = 0;
};

// One played game: s0, the moves applied to it and where they led.
struct Trial {
  GameState initial;
  GameState final;
  std::vector<TrialRecord> records;

  int num_moves() const { return static_cast<int>(records.size()); }
  // Empty if the trial stopped before a terminal state.
  const ScoreVector& scores() const { return final.scores(); }
};

// Outcome counts of a set of finished trials. wins[p] counts trials in
// which p alone scored +1; draws counts all-zero score vectors.
struct OutcomeTally {
  std::vector<std::uint64_t> wins;
  std::uint64_t draws = 0;
  std::uint64_t other = 0;

  explicit OutcomeTally(int num_players = 0) : wins(num_players + 1, 0) {}

  void Add(const ScoreVector& scores);
  void Merge(const OutcomeTally& other);
  std::uint64_t total() const;

  friend bool operator==(const OutcomeTally&, const OutcomeTally&) = default;
};

// Uniform random trial from `from`, reproducible per seed. A terminal
// `from` yields a trial with no moves.
Trial RandomPlayout(const Game& game, const GameState& from,
                    std::uint64_t seed);
Trial RandomPlayout(const Game& game, std::uint64_t seed);

// Hot-path playout: plays `state` to the end in place, drawing from `rng`
// and reusing `buffer`. Returns the number of moves made.
int PlayoutInPlace(const Game& game, GameState& state, Rng& rng,
                   std::vector<Move>& buffer);

struct EnumerationLimits {
  int max_depth = 1 << 20;
  std::uint64_t max_sequences = std::uint64_t{1} << 32;
  std::uint64_t max_positions = std::uint64_t{1} << 24;
};

struct EnumerationReport {
  std::uint64_t terminal_sequences = 0;
  // Distinct board contents over every reached state, s0 included.
  std::uint64_t reachable_positions = 0;
  OutcomeTally outcomes;
  int max_depth = 0;
};

// Depth-first traversal of every legal move sequence from s0. Throws
// LudemicError when a limit is exceeded.
EnumerationReport Enumerate(const Game& game,
                            const EnumerationLimits& limits = {});

struct FlatMonteCarloResult {
  int index = 0;
  Move move;
  // Per legal move, in legal-move order.
  std::vector<int> playouts;
  std::vector<double> mean_utility;
};

// Flat Monte Carlo: the budget is split evenly over the legal moves (the
// remainder goes to the earliest moves), one random playout follows each
// sample, and the move with the highest mean utility for the mover wins.
// Ties go to the lowest index. Throws std::invalid_argument when the budget
// is smaller than the number of legal moves, RuleError on terminal states.
FlatMonteCarloResult FlatMonteCarloChoose(const Game& game,
                                          const GameState& state, int budget,
                                          std::uint64_t seed);

struct BenchConfig {
  double seconds = 10;
  int threads = 1;
  std::uint64_t seed = 1;
};

struct ThreadStats {
  std::uint64_t playouts = 0;
  std::uint64_t moves = 0;
  double elapsed = 0;
  OutcomeTally tally;
};

struct PlayoutStats {
  int threads = 1;
  std::uint64_t playouts = 0;
  std::uint64_t moves = 0;
  // Wall-clock seconds from the common start to the last worker's finish.
  double elapsed = 0;
  OutcomeTally tally;
  std::vector<ThreadStats> per_thread;

  double playouts_per_second() const {
    return elapsed > 0 ? playouts / elapsed : 0;
  }
  double moves_per_second() const { return elapsed > 0 ? moves / elapsed : 0; }
};

// Random playouts from s0 on `threads` workers for at least `seconds`.
// Worker i draws from Rng(seed, i). Throws std::invalid_argument for
// seconds <= 0 or threads < 1.
PlayoutStats BenchPlayouts(const Game& game, const BenchConfig& config);

// Fixed-count variant: worker i runs playouts_per_thread playouts.
PlayoutStats RunPlayouts(const Game& game, std::uint64_t playouts_per_thread,
                         int threads, std::uint64_t seed);

}  // namespace ludemic

#endif  // LUDEMIC_ENGINE_HPP_
