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

#ifndef LUDEMIC_RULES_HPP_
#define LUDEMIC_RULES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ludemic/game.hpp"
#include "ludemic/game_state.hpp"
#include "ludemic/move.hpp"

namespace ludemic {

// Builds s0: the empty state with the start actions applied in order and
// player 1 to move (unless a start action sets the mover). End rules are
// evaluated on s0, so a game may start terminal. Throws RuleError when a
// start action is inapplicable.
GameState ApplyStart(const Game& game);

// All moves for the mover, ordered by generator, then site, then
// direction. Returns exactly [pass] when nothing can be generated. Throws
// RuleError on a terminal state.
std::vector<Move> LegalMoves(const Game& game, const GameState& state);

// Hot-path variant of LegalMoves that reuses `out`. Does not check for
// terminal states.
void GenerateMoves(const Game& game, const GameState& state,
                   std::vector<Move>& out);

// For placement-only games: the length of GenerateMoves' list (0 when
// only a pass is possible) and its element at `index`, without building
// the list.
int CountPlacementMoves(const Game& game, const GameState& state);
Move NthPlacementMove(const Game& game, const GameState& state, int index);

// True if the mover has at least one generated (non-pass) move.
bool HasAnyMove(const Game& game, const GameState& state);

// Evaluates the end rules on an arbitrary state using full-board scans.
// Returns the score vector of the first satisfied rule, or of the turn
// limit, or nothing.
std::optional<ScoreVector> EvalEnd(const Game& game, const GameState& state);

// Applies `move` in place, advancing counters and the mover and stamping
// terminal state and scores. Assumes the move is legal.
void ApplyMove(const Game& game, GameState& state, const Move& move);

// Copying form of ApplyMove.
GameState Successor(const Game& game, const GameState& state,
                    const Move& move);

bool IsLegal(const Game& game, const GameState& state, const Move& move);

// Successor with validation; throws RuleError for a terminal state or an
// illegal move.
GameState CheckedSuccessor(const Game& game, const GameState& state,
                           const Move& move);

std::string DescribeMove(const Game& game, const Move& move);

// Reference predicates, also used by the incremental paths' tests.
bool LineThrough(const Game& game, const GameState& state, int site,
                 int player, int length);
bool HasLine(const Game& game, const GameState& state, int player,
             int length);
// Flood fill: does one chain of `player` touch every region set of theirs?
bool IsConnected(const Game& game, const GameState& state, int player);

}  // namespace ludemic

#endif  // LUDEMIC_RULES_HPP_
