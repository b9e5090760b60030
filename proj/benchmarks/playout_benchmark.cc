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

#include <cstdint>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "ludemic/chunk_set.hpp"
#include "ludemic/compiler.hpp"
#include "ludemic/corpus.hpp"
#include "ludemic/engine.hpp"
#include "ludemic/random.hpp"
#include "ludemic/rules.hpp"

namespace ludemic {
namespace {

Corpus& Games() {
  static Corpus corpus(LUDEMIC_BENCH_GAMES_DIR);
  return corpus;
}

GamePtr PresetGame(int index) {
  const Preset& p = BenchmarkPresets().at(index);
  return Games().Get(p.game, p.options);
}

// Preset index as the argument; one iteration is one playout from s0.
void BM_Playout(benchmark::State& bm) {
  const GamePtr game = PresetGame(static_cast<int>(bm.range(0)));
  const GameState s0 = ApplyStart(*game);
  Rng rng(1);
  std::vector<Move> buffer;
  std::int64_t moves = 0;
  for (auto _ : bm) {
    GameState s = s0;
    moves += PlayoutInPlace(*game, s, rng, buffer);
    benchmark::DoNotOptimize(s);
  }
  bm.SetLabel(BenchmarkPresets()[bm.range(0)].label);
  bm.SetItemsProcessed(bm.iterations());
  bm.counters["moves/playout"] =
      benchmark::Counter(static_cast<double>(moves) / bm.iterations());
}

// Legal-move generation on a fixed mid-game state (ten random moves in).
void BM_GenerateMoves(benchmark::State& bm) {
  const GamePtr game = PresetGame(static_cast<int>(bm.range(0)));
  GameState s = ApplyStart(*game);
  Rng rng(7);
  for (int i = 0; i < 10 && !s.terminal(); ++i) {
    const std::vector<Move> moves = LegalMoves(*game, s);
    ApplyMove(*game, s, moves[rng.Below(moves.size())]);
  }
  std::vector<Move> out;
  for (auto _ : bm) {
    GenerateMoves(*game, s, out);
    benchmark::DoNotOptimize(out.data());
  }
  bm.SetLabel(BenchmarkPresets()[bm.range(0)].label);
}

void PresetArgs(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < static_cast<int>(BenchmarkPresets().size()); ++i) {
    b->Arg(i);
  }
}

BENCHMARK(BM_Playout)->Apply(PresetArgs);
BENCHMARK(BM_GenerateMoves)->Apply(PresetArgs);

void BM_CompileHex(benchmark::State& bm) {
  const std::string& text = Games().Find("Hex")->text;
  for (auto _ : bm) {
    benchmark::DoNotOptimize(
        CompileDescription(text, {{"Board Size", "11x11"}}));
  }
}
BENCHMARK(BM_CompileHex);

void BM_ChunkSetSetGet(benchmark::State& bm) {
  const int bits = static_cast<int>(bm.range(0));
  ChunkSet set(bits, 256);
  std::uint32_t x = 0;
  int i = 0;
  for (auto _ : bm) {
    set.SetFast(i, x & set.max_value());
    x += set.GetFast((i * 7) & 255);
    i = (i + 1) & 255;
  }
  benchmark::DoNotOptimize(x);
}
BENCHMARK(BM_ChunkSetSetGet)->Arg(1)->Arg(2)->Arg(8)->Arg(32);

}  // namespace
}  // namespace ludemic

BENCHMARK_MAIN();
