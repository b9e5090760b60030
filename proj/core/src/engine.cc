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

#include "ludemic/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "ludemic/error.hpp"
#include "ludemic/rules.hpp"

namespace ludemic {

void OutcomeTally::Add(const ScoreVector& scores) {
  int winner = 0;
  int winners = 0;
  bool all_zero = true;
  for (int p = 1; p <= scores.num_players(); ++p) {
    const double u = scores.utility(p);
    if (u == 1.0) {
      winner = p;
      ++winners;
    }
    if (u != 0.0) all_zero = false;
  }
  if (scores.empty()) {
    ++other;
  } else if (winners == 1 && winner < static_cast<int>(wins.size())) {
    ++wins[winner];
  } else if (all_zero) {
    ++draws;
  } else {
    ++other;
  }
}

void OutcomeTally::Merge(const OutcomeTally& o) {
  if (wins.size() < o.wins.size()) wins.resize(o.wins.size(), 0);
  for (std::size_t p = 0; p < o.wins.size(); ++p) wins[p] += o.wins[p];
  draws += o.draws;
  other += o.other;
}

std::uint64_t OutcomeTally::total() const {
  std::uint64_t sum = draws + other;
  for (std::uint64_t w : wins) sum += w;
  return sum;
}

namespace {

// Uniform choice from the flat legal-move list. Placement-only games pick
// the index first and build just that move; the result is the same.
Move PickRandomMove(const Game& game, const GameState& state, Rng& rng,
                    std::vector<Move>& buffer) {
  if (game.placement_only()) {
    const int n = CountPlacementMoves(game, state);
    if (n == 0) return Move::MakePass(state.mover());
    return NthPlacementMove(game, state,
                            static_cast<int>(rng.Below(
                                static_cast<std::uint32_t>(n))));
  }
  GenerateMoves(game, state, buffer);
  return buffer[rng.Below(static_cast<std::uint32_t>(buffer.size()))];
}

}  // namespace

int PlayoutInPlace(const Game& game, GameState& state, Rng& rng,
                   std::vector<Move>& buffer) {
  int moves = 0;
  while (!state.terminal()) {
    ApplyMove(game, state, PickRandomMove(game, state, rng, buffer));
    ++moves;
  }
  return moves;
}

Trial RandomPlayout(const Game& game, const GameState& from,
                    std::uint64_t seed) {
  Trial trial{from, from, {}};
  Rng rng(seed);
  std::vector<Move> moves;
  GameState& state = trial.final;
  while (!state.terminal()) {
    const Move m = PickRandomMove(game, state, rng, moves);
    ApplyMove(game, state, m);
    trial.records.push_back({m, state.Hash()});
  }
  return trial;
}

Trial RandomPlayout(const Game& game, std::uint64_t seed) {
  return RandomPlayout(game, ApplyStart(game), seed);
}

namespace {

class Enumerator {
 public:
  Enumerator(const Game& game, const EnumerationLimits& limits)
      : game_(game), limits_(limits) {
    report_.outcomes = OutcomeTally(game.num_players());
  }

  EnumerationReport Run() {
    GameState s0 = ApplyStart(game_);
    Visit(s0);
    Walk(s0, 0);
    report_.reachable_positions = positions_.size();
    return report_;
  }

 private:
  void Visit(const GameState& s) {
    positions_.insert(s.PositionKey());
    if (positions_.size() > limits_.max_positions) {
      throw LudemicError("enumeration exceeded " +
                         std::to_string(limits_.max_positions) +
                         " positions");
    }
  }

  void Walk(const GameState& s, int depth) {
    report_.max_depth = std::max(report_.max_depth, depth);
    if (s.terminal()) {
      report_.outcomes.Add(s.scores());
      if (++report_.terminal_sequences > limits_.max_sequences) {
        throw LudemicError("enumeration exceeded " +
                           std::to_string(limits_.max_sequences) +
                           " sequences");
      }
      return;
    }
    if (depth >= limits_.max_depth) {
      throw LudemicError("enumeration exceeded depth " +
                         std::to_string(limits_.max_depth));
    }
    std::vector<Move> moves;
    GenerateMoves(game_, s, moves);
    for (const Move& m : moves) {
      GameState next = Successor(game_, s, m);
      Visit(next);
      Walk(next, depth + 1);
    }
  }

  const Game& game_;
  EnumerationLimits limits_;
  EnumerationReport report_;
  std::unordered_set<std::string> positions_;
};

}  // namespace

EnumerationReport Enumerate(const Game& game, const EnumerationLimits& limits) {
  return Enumerator(game, limits).Run();
}

FlatMonteCarloResult FlatMonteCarloChoose(const Game& game,
                                          const GameState& state, int budget,
                                          std::uint64_t seed) {
  const std::vector<Move> moves = LegalMoves(game, state);
  const int n = static_cast<int>(moves.size());
  if (budget < n) {
    throw std::invalid_argument("budget " + std::to_string(budget) +
                                " is below the " + std::to_string(n) +
                                " legal moves");
  }
  const int mover = state.mover();
  FlatMonteCarloResult result;
  result.playouts.assign(n, budget / n);
  for (int i = 0; i < budget % n; ++i) ++result.playouts[i];
  result.mean_utility.assign(n, 0);
  if (n == 1) {
    result.move = moves[0];
    return result;
  }
  Rng rng(seed);
  std::vector<Move> buffer;
  for (int i = 0; i < n; ++i) {
    const GameState child = Successor(game, state, moves[i]);
    double sum = 0;
    for (int j = 0; j < result.playouts[i]; ++j) {
      GameState s = child;
      PlayoutInPlace(game, s, rng, buffer);
      sum += s.scores().utility(mover);
    }
    result.mean_utility[i] = sum / result.playouts[i];
  }
  for (int i = 1; i < n; ++i) {
    if (result.mean_utility[i] > result.mean_utility[result.index]) {
      result.index = i;
    }
  }
  result.move = moves[result.index];
  return result;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs workers until `keep_going(stats)` turns false and aggregates.
template <typename KeepGoing>
PlayoutStats RunWorkers(const Game& game, int threads, std::uint64_t seed,
                        KeepGoing keep_going) {
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  const GameState s0 = ApplyStart(game);
  PlayoutStats stats;
  stats.threads = threads;
  stats.tally = OutcomeTally(game.num_players());
  stats.per_thread.resize(threads);
  std::atomic<int> ready{0};
  std::atomic<bool> go{false};
  Clock::time_point start;
  auto work = [&](int index) {
    // Local until the end, so workers never share a cache line.
    ThreadStats mine{0, 0, 0, OutcomeTally(game.num_players())};
    Rng rng(seed, static_cast<std::uint64_t>(index));
    std::vector<Move> buffer;
    buffer.reserve(256);
    GameState state = s0;
    ready.fetch_add(1);
    while (!go.load(std::memory_order_acquire)) std::this_thread::yield();
    const Clock::time_point begin = Clock::now();
    while (keep_going(mine, begin)) {
      state = s0;
      mine.moves += PlayoutInPlace(game, state, rng, buffer);
      mine.tally.Add(state.scores());
      ++mine.playouts;
    }
    mine.elapsed =
        std::chrono::duration<double>(Clock::now() - begin).count();
    stats.per_thread[index] = std::move(mine);
  };
  std::vector<std::thread> workers;
  workers.reserve(threads - 1);
  for (int i = 1; i < threads; ++i) workers.emplace_back(work, i);
  while (ready.load() < threads - 1) std::this_thread::yield();
  start = Clock::now();
  go.store(true, std::memory_order_release);
  work(0);
  for (auto& w : workers) w.join();
  stats.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  for (const ThreadStats& t : stats.per_thread) {
    stats.playouts += t.playouts;
    stats.moves += t.moves;
    stats.tally.Merge(t.tally);
  }
  return stats;
}

}  // namespace

PlayoutStats BenchPlayouts(const Game& game, const BenchConfig& config) {
  if (!(config.seconds > 0)) {
    throw std::invalid_argument("seconds must be positive");
  }
  const auto duration = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(config.seconds));
  return RunWorkers(game, config.threads, config.seed,
                    [duration](const ThreadStats&, Clock::time_point begin) {
                      return Clock::now() - begin < duration;
                    });
}

PlayoutStats RunPlayouts(const Game& game, std::uint64_t playouts_per_thread,
                         int threads, std::uint64_t seed) {
  return RunWorkers(game, threads, seed,
                    [playouts_per_thread](const ThreadStats& t,
                                          Clock::time_point) {
                      return t.playouts < playouts_per_thread;
                    });
}

}  // namespace ludemic
