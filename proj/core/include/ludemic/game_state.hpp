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

#ifndef LUDEMIC_GAME_STATE_HPP_
#define LUDEMIC_GAME_STATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ludemic/chunk_set.hpp"
#include "ludemic/game.hpp"

namespace ludemic {

struct Location {
  int container = 0;
  int site = 0;
  int level = 0;
};

// Per-container data vectors. Vectors the representation does not need are
// left empty and read through their defaults.
struct ContainerState {
  ChunkSet what;
  ChunkSet who;
  ChunkSet count;
  ChunkSet state;
  int occupied = 0;

  friend bool operator==(const ContainerState&, const ContainerState&) = default;
};

namespace detail {
struct StateAccess;
}

// Mover plus the per-location data vectors. A value type: copy to branch,
// mutate in place for playouts. Holds a pointer into its Game, which must
// outlive it.
class GameState {
 public:
  // The empty state: component 0 everywhere and player 1 to move.
  explicit GameState(const Game& game);

  int mover() const { return mover_; }
  // Player who made the last move; 0 before the first move.
  int last_mover() const { return last_mover_; }
  int move_number() const { return move_number_; }
  int consecutive_passes() const { return consecutive_passes_; }
  bool terminal() const { return terminal_; }
  // Empty unless terminal.
  const ScoreVector& scores() const { return scores_; }
  // Site of the last placement made by the last move, or -1.
  int last_to() const { return last_to_; }

  // Unchecked board reads by site.
  int What(int site) const {
    return static_cast<int>(containers_[0].what.GetFast(site));
  }
  int Who(int site) const {
    return stores_who_ ? static_cast<int>(containers_[0].who.GetFast(site))
                       : (*owner_of_)[What(site)];
  }

  // Checked reads; std::out_of_range for an invalid location.
  int What(const Location& loc) const;
  int Who(const Location& loc) const;
  int Count(const Location& loc) const;
  int PieceState(const Location& loc) const;
  bool Hidden(const Location& loc, int player) const;
  bool Playable(const Location& loc) const;

  int num_containers() const { return static_cast<int>(containers_.size()); }
  const ContainerState& container_state(int container) const {
    return containers_.at(container);
  }
  int occupied() const { return containers_[0].occupied; }
  int num_sites() const { return containers_[0].what.chunk_count(); }

  // Zobrist hash of the board contents only.
  std::uint64_t board_hash() const { return board_hash_; }
  // Hash of everything that affects future play.
  std::uint64_t Hash() const;
  // Exact canonical encoding of the container vectors (not the mover).
  std::string PositionKey() const;

  friend bool operator==(const GameState& a, const GameState& b);

 private:
  friend struct detail::StateAccess;

  void CheckLocation(const Location& loc) const;

  const std::vector<int>* owner_of_;
  bool stores_who_;
  int mover_ = 1;
  int last_mover_ = 0;
  int move_number_ = 0;
  int consecutive_passes_ = 0;
  int last_to_ = -1;
  bool terminal_ = false;
  ScoreVector scores_;
  std::vector<ContainerState> containers_;
  std::uint64_t board_hash_ = 0;
  // Incremental union-find over board sites plus virtual region nodes;
  // maintained only for games with a connect condition and no removals.
  std::vector<int> connect_parent_;
};

}  // namespace ludemic

#endif  // LUDEMIC_GAME_STATE_HPP_
