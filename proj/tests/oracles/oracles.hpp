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

#ifndef LUDEMIC_TESTS_ORACLES_ORACLES_HPP_
#define LUDEMIC_TESTS_ORACLES_ORACLES_HPP_

// Reference implementations written directly against the rules of each
// game, sharing no code with the library. Tests compare the library to
// these.

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Cells 0..8 row-major from the bottom; 0 empty, 1 first player, 2 second.
using TicTacToeBoard = std::array<int, 9>;

// 0 if nobody has three in a row.
int TicTacToeWinner(const TicTacToeBoard& board);

// Base-3 code of a board.
std::uint32_t TicTacToeCode(const TicTacToeBoard& board);

struct TicTacToeCounts {
  std::uint64_t sequences = 0;
  std::uint64_t first_wins = 0;
  std::uint64_t second_wins = 0;
  std::uint64_t draws = 0;
  std::set<std::uint32_t> positions;
  // Uniform random play: P(outcome) = numerator / 9!.
  std::uint64_t first_win_weight = 0;
  std::uint64_t second_win_weight = 0;
  std::uint64_t draw_weight = 0;
  static constexpr std::uint64_t kWeightDenominator = 362880;
};

// Every game of Tic-Tac-Toe, players alternating from an empty board.
TicTacToeCounts EnumerateTicTacToe();

// Breakthrough on 8x8, index = row * 8 + column, row 0 at the bottom.
// 0 empty, 1 moves up, 2 moves down. Returns (from, to) pairs.
std::set<std::pair<int, int>> BreakthroughMoves(const std::array<int, 64>& who,
                                                int player);

// Edges of an n x n square grid, indices row-major.
std::set<std::pair<int, int>> SquareEdges(int rows, int columns, bool diagonal);

// Cells of a hex rhombus in axial coordinates, index r * n + q.
std::set<std::pair<int, int>> HexRhombusEdges(int n);

// Cells of a hexagon with side r, counted by scanning axial coordinates.
int HexagonCells(int side);

// Hex winner on an n x n rhombus (index r * n + q): player 1 joins r = 0
// to r = n - 1, player 2 joins q = 0 to q = n - 1. 0 if neither.
int HexWinner(int n, const std::vector<int>& who);

struct HexCounts {
  std::uint64_t sequences = 0;
  std::uint64_t first_wins = 0;
  std::uint64_t second_wins = 0;
  std::uint64_t draws = 0;
  // Uniform random play, as probabilities.
  double first_win_probability = 0;
};

// Every game of Hex on an n x n rhombus, stopping at the first connection.
HexCounts EnumerateHex(int n);

// Connect-4 board after dropping discs in `columns` alternately (6 rows,
// 7 columns, row 0 at the bottom, index row * 7 + column).
std::array<int, 42> Connect4Drops(const std::vector<int>& columns);

}  // namespace oracle

#endif  // LUDEMIC_TESTS_ORACLES_ORACLES_HPP_
