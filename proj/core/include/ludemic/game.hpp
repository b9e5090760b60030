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

#ifndef LUDEMIC_GAME_HPP_
#define LUDEMIC_GAME_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ludemic/container.hpp"
#include "ludemic/grammar.hpp"
#include "ludemic/move.hpp"

namespace ludemic {

enum class Flow { kAlternating, kSimultaneous, kRealtime };

// Players 1..count move; index 0 is nature and never moves here.
struct Players {
  int count = 2;
  Flow flow = Flow::kAlternating;
};

struct Component {
  int index = 0;
  std::string name;
  int owner = 0;
};

// How container state is laid out in memory. Only the first four are
// implemented; the rest exist so descriptions that need them are rejected
// by name.
enum class Representation {
  kUniformPieces,
  kDistinguishedPieces,
  kPieceState,
  kPieceCount,
  kStacking,
  kNoFixedBoard,
  kHiddenInformation,
};

std::string_view RepresentationName(Representation r);

enum class ResultKind { kWin, kLoss, kDraw, kTie, kAbort, kPayoff };

std::string_view ResultKindName(ResultKind kind);

// Utilities in [-1, 1] for players 1..k.
struct ScoreVector {
  std::vector<double> utilities;
  ResultKind kind = ResultKind::kDraw;

  double utility(int player) const { return utilities.at(player - 1); }
  int num_players() const { return static_cast<int>(utilities.size()); }
  bool empty() const { return utilities.empty(); }

  static ScoreVector Win(int winner, int num_players);
  // With two players the opponent wins; with more the others score 0.
  static ScoreVector Loss(int loser, int num_players);
  static ScoreVector Neutral(ResultKind kind, int num_players);

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

// Player reference inside a rule, resolved against the state it is
// evaluated in. kMover is the player who just moved.
struct RoleRef {
  enum class Kind { kMover, kNext, kPlayer };
  Kind kind = Kind::kMover;
  int player = 0;
};

enum class GeneratorKind { kToEmpty, kToLowestEmpty, kStep, kDescend };
enum class StepTarget { kEmpty, kEnemy, kEmptyOrEnemy };

struct Generator {
  GeneratorKind kind = GeneratorKind::kToEmpty;
  // kStep: directions per player (index 0 unused), resolved to absolute.
  std::vector<std::vector<Direction>> directions;
  StepTarget target = StepTarget::kEmpty;
  // kDescend: controlling player for every vertex (0 at leaves).
  std::vector<int> control;
  // Source text, for move descriptions.
  std::string label;
};

enum class ConditionKind {
  kLine,
  kConnect,
  kReach,
  kNoMoves,
  kBoardFull,
  kAllPassed,
  kAt,
};

struct EndCondition {
  ConditionKind kind = ConditionKind::kAllPassed;
  int length = 0;  // kLine
  int site = -1;   // kAt
};

struct EndOutcome {
  ResultKind result = ResultKind::kDraw;
  RoleRef role;
  std::vector<double> payoff;  // kPayoff only
};

struct EndRule {
  EndCondition condition;
  EndOutcome outcome;
};

// Everything the compiler extracts from a description.
struct GameDefinition {
  std::string name;
  Players players;
  std::vector<Container> containers;
  std::vector<Component> components;
  // regions[p][i]: the i-th site set of player p, sorted.
  std::vector<std::vector<std::vector<int>>> regions;
  std::vector<Action> start;
  std::vector<Generator> generators;
  // Listed end rules; an implicit all-passed Draw is appended by Game.
  std::vector<EndRule> end;
  Representation representation = Representation::kUniformPieces;
  LudemeTree source;
  OptionSelection options;
};

// An immutable compiled game. Safe to share between threads.
class Game {
 public:
  explicit Game(GameDefinition definition);

  const std::string& name() const { return def_.name; }
  const Players& players() const { return def_.players; }
  int num_players() const { return def_.players.count; }
  const std::vector<Container>& containers() const { return def_.containers; }
  const Container& board() const { return def_.containers.front(); }
  int num_sites() const { return board().num_sites(); }
  const std::vector<Component>& components() const { return def_.components; }
  int num_components() const { return static_cast<int>(def_.components.size()); }
  const std::vector<std::vector<int>>& regions(int player) const {
    return def_.regions.at(player);
  }
  const std::vector<Action>& start() const { return def_.start; }
  const std::vector<Generator>& generators() const { return def_.generators; }
  // Listed end rules followed by the implicit all-passed rule.
  const std::vector<EndRule>& end_rules() const { return end_rules_; }
  Representation representation() const { return def_.representation; }
  const LudemeTree& source() const { return def_.source; }
  const OptionSelection& options() const { return def_.options; }

  int owner_of(int component) const { return owner_of_[component]; }
  const std::vector<int>& owner_table() const { return owner_of_; }
  // Components owned by `player`, ascending.
  const std::vector<int>& pieces_of(int player) const {
    return pieces_of_[player];
  }

  int what_bits() const { return what_bits_; }
  int who_bits() const { return who_bits_; }
  bool stores_who() const {
    return def_.representation != Representation::kUniformPieces;
  }
  bool stores_count() const {
    return def_.representation == Representation::kPieceCount;
  }
  bool stores_state() const {
    return def_.representation == Representation::kPieceState;
  }
  bool uses_connect() const { return uses_connect_; }
  bool has_removal() const { return has_removal_; }
  // Every generator is (to Mover (empty)).
  bool placement_only() const { return placement_only_; }
  // Safety limit after which a trial is adjudicated a Draw.
  int max_moves() const { return max_moves_; }
  // end rule index for a token standing on each site, or -1; set only when
  // every listed end rule is an `at` condition.
  const std::vector<int>& at_index() const { return at_index_; }
  bool at_only() const { return at_only_; }

  // Line axes: pairs of opposite directions, first < second.
  const std::vector<std::pair<Direction, Direction>>& line_axes() const {
    return line_axes_;
  }
  // Bit i set when `site` belongs to region set i of `player`.
  std::uint32_t region_mask(int player, int site) const {
    return region_mask_[player][site];
  }
  // First union-find slot of a player's virtual region nodes.
  int region_node_base(int player) const { return region_node_base_[player]; }
  int union_find_size() const { return union_find_size_; }

  std::uint64_t what_key(int site, int component) const {
    return what_keys_[static_cast<std::size_t>(site) * def_.components.size() +
                      component];
  }
  std::uint64_t who_key(int site, int player) const {
    return who_keys_[static_cast<std::size_t>(site) *
                         (def_.players.count + 1) +
                     player];
  }
  std::uint64_t mover_key(int player) const { return mover_keys_[player]; }

  // Rotation used when a move does not set the mover explicitly.
  int NextPlayer(int player) const {
    return (player % def_.players.count) + 1;
  }

  // Human-readable site label such as "c2", or the index for graphs.
  std::string SiteName(int site) const;

 private:
  GameDefinition def_;
  std::vector<EndRule> end_rules_;
  std::vector<int> owner_of_;
  std::vector<std::vector<int>> pieces_of_;
  int what_bits_ = 1;
  int who_bits_ = 1;
  bool uses_connect_ = false;
  bool has_removal_ = false;
  bool placement_only_ = false;
  int max_moves_ = 0;
  std::vector<int> at_index_;
  bool at_only_ = false;
  std::vector<std::pair<Direction, Direction>> line_axes_;
  std::vector<std::vector<std::uint32_t>> region_mask_;
  std::vector<int> region_node_base_;
  int union_find_size_ = 0;
  std::vector<std::uint64_t> what_keys_;
  std::vector<std::uint64_t> who_keys_;
  std::vector<std::uint64_t> mover_keys_;
};

using GamePtr = std::shared_ptr<const Game>;

}  // namespace ludemic

#endif  // LUDEMIC_GAME_HPP_
