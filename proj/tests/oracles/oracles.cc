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

#include "oracles.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>

namespace oracle {

int TicTacToeWinner(const TicTacToeBoard& b) {
  static const int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                   {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                   {0, 4, 8}, {2, 4, 6}};
  for (const auto& l : kLines) {
    if (b[l[0]] != 0 && b[l[0]] == b[l[1]] && b[l[1]] == b[l[2]]) {
      return b[l[0]];
    }
  }
  return 0;
}

std::uint32_t TicTacToeCode(const TicTacToeBoard& board) {
  std::uint32_t code = 0;
  for (int i = 8; i >= 0; --i) code = code * 3 + board[i];
  return code;
}

namespace {

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void TicTacToeWalk(TicTacToeBoard& board, int player, int placed,
                   TicTacToeCounts& out) {
  out.positions.insert(TicTacToeCode(board));
  const int winner = TicTacToeWinner(board);
  if (winner != 0 || placed == 9) {
    ++out.sequences;
    // A path of `placed` uniform choices has probability (9 - placed)! / 9!.
    const std::uint64_t weight = Factorial(9 - placed);
    if (winner == 1) {
      ++out.first_wins;
      out.first_win_weight += weight;
    } else if (winner == 2) {
      ++out.second_wins;
      out.second_win_weight += weight;
    } else {
      ++out.draws;
      out.draw_weight += weight;
    }
    return;
  }
  for (int cell = 0; cell < 9; ++cell) {
    if (board[cell] != 0) continue;
    board[cell] = player;
    TicTacToeWalk(board, 3 - player, placed + 1, out);
    board[cell] = 0;
  }
}

}  // namespace

TicTacToeCounts EnumerateTicTacToe() {
  TicTacToeCounts out;
  TicTacToeBoard board{};
  TicTacToeWalk(board, 1, 0, out);
  return out;
}

std::set<std::pair<int, int>> BreakthroughMoves(const std::array<int, 64>& who,
                                                int player) {
  std::set<std::pair<int, int>> moves;
  const int forward = player == 1 ? 1 : -1;
  for (int from = 0; from < 64; ++from) {
    if (who[from] != player) continue;
    const int row = from / 8;
    const int col = from % 8;
    const int to_row = row + forward;
    if (to_row < 0 || to_row > 7) continue;
    if (who[to_row * 8 + col] == 0) moves.insert({from, to_row * 8 + col});
    for (int dc : {-1, 1}) {
      const int to_col = col + dc;
      if (to_col < 0 || to_col > 7) continue;
      const int to = to_row * 8 + to_col;
      if (who[to] != player) moves.insert({from, to});
    }
  }
  return moves;
}

std::set<std::pair<int, int>> SquareEdges(int rows, int columns,
                                          bool diagonal) {
  std::set<std::pair<int, int>> edges;
  const int n = rows * columns;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int dr = std::abs(a / columns - b / columns);
      const int dc = std::abs(a % columns - b % columns);
      const bool orthogonal = dr + dc == 1;
      const bool diag = dr == 1 && dc == 1;
      if (orthogonal || (diagonal && diag)) edges.insert({a, b});
    }
  }
  return edges;
}

std::set<std::pair<int, int>> HexRhombusEdges(int n) {
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < n * n; ++a) {
    for (int b = a + 1; b < n * n; ++b) {
      const int dq = b % n - a % n;
      const int dr = b / n - a / n;
      // Axial neighbours: the six offsets with |dq|, |dr|, |dq + dr| <= 1.
      if (std::abs(dq) <= 1 && std::abs(dr) <= 1 && std::abs(dq + dr) <= 1 &&
          (dq != 0 || dr != 0)) {
        edges.insert({a, b});
      }
    }
  }
  return edges;
}

int HexagonCells(int side) {
  const int radius = side - 1;
  int count = 0;
  for (int q = -radius; q <= radius; ++q) {
    for (int r = -radius; r <= radius; ++r) {
      const int s = -q - r;
      if (std::abs(s) <= radius) ++count;
    }
  }
  return count;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Join(int a, int b) { parent[Find(a)] = Find(b); }
};

}  // namespace

int HexWinner(int n, const std::vector<int>& who) {
  for (int player = 1; player <= 2; ++player) {
    const int start = n * n;
    const int end = n * n + 1;
    UnionFind uf(n * n + 2);
    for (int i = 0; i < n * n; ++i) {
      if (who[i] != player) continue;
      const int q = i % n;
      const int r = i / n;
      const int along = player == 1 ? r : q;
      if (along == 0) uf.Join(i, start);
      if (along == n - 1) uf.Join(i, end);
      static const int kOffsets[6][2] = {{1, 0}, {-1, 0}, {0, 1},
                                         {0, -1}, {1, -1}, {-1, 1}};
      for (const auto& o : kOffsets) {
        const int nq = q + o[0];
        const int nr = r + o[1];
        if (nq < 0 || nr < 0 || nq >= n || nr >= n) continue;
        if (who[nr * n + nq] == player) uf.Join(i, nr * n + nq);
      }
    }
    if (uf.Find(start) == uf.Find(end)) return player;
  }
  return 0;
}

namespace {

void HexWalk(int n, std::vector<int>& who, int player, int placed,
             double probability, HexCounts& out) {
  const int winner = HexWinner(n, who);
  if (winner != 0 || placed == n * n) {
    ++out.sequences;
    if (winner == 1) {
      ++out.first_wins;
      out.first_win_probability += probability;
    } else if (winner == 2) {
      ++out.second_wins;
    } else {
      ++out.draws;
    }
    return;
  }
  const double p = probability / (n * n - placed);
  for (int i = 0; i < n * n; ++i) {
    if (who[i] != 0) continue;
    who[i] = player;
    HexWalk(n, who, 3 - player, placed + 1, p, out);
    who[i] = 0;
  }
}

}  // namespace

HexCounts EnumerateHex(int n) {
  HexCounts out;
  std::vector<int> who(n * n, 0);
  HexWalk(n, who, 1, 0, 1.0, out);
  return out;
}

std::array<int, 42> Connect4Drops(const std::vector<int>& columns) {
  std::array<int, 42> board{};
  int player = 1;
  for (int col : columns) {
    for (int row = 0; row < 6; ++row) {
      if (board[row * 7 + col] == 0) {
        board[row * 7 + col] = player;
        break;
      }
    }
    player = 3 - player;
  }
  return board;
}

}  // namespace oracle
