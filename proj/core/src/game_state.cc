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

#include "ludemic/game_state.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ludemic {

GameState::GameState(const Game& game)
    : owner_of_(&game.owner_table()), stores_who_(game.stores_who()) {
  containers_.reserve(game.containers().size());
  for (const Container& c : game.containers()) {
    ContainerState cs;
    cs.what = ChunkSet(game.what_bits(), c.num_sites());
    if (game.stores_who()) cs.who = ChunkSet(game.who_bits(), c.num_sites());
    // Counts and piece states are small integers; 8 bits per site.
    if (game.stores_count()) cs.count = ChunkSet(8, c.num_sites());
    if (game.stores_state()) cs.state = ChunkSet(8, c.num_sites());
    containers_.push_back(std::move(cs));
  }
  if (game.uses_connect() && !game.has_removal()) {
    connect_parent_.resize(game.union_find_size());
    std::iota(connect_parent_.begin(), connect_parent_.end(), 0);
  }
}

void GameState::CheckLocation(const Location& loc) const {
  if (loc.container < 0 || loc.container >= num_containers()) {
    throw std::out_of_range("invalid container " +
                            std::to_string(loc.container));
  }
  if (loc.site < 0 ||
      loc.site >= containers_[loc.container].what.chunk_count()) {
    throw std::out_of_range("invalid site " + std::to_string(loc.site));
  }
  if (loc.level != 0) {
    throw std::out_of_range("stacking levels are not supported");
  }
}

int GameState::What(const Location& loc) const {
  CheckLocation(loc);
  return static_cast<int>(containers_[loc.container].what.GetFast(loc.site));
}

int GameState::Who(const Location& loc) const {
  CheckLocation(loc);
  const ContainerState& cs = containers_[loc.container];
  if (stores_who_) return static_cast<int>(cs.who.GetFast(loc.site));
  return (*owner_of_)[cs.what.GetFast(loc.site)];
}

int GameState::Count(const Location& loc) const {
  CheckLocation(loc);
  const ContainerState& cs = containers_[loc.container];
  if (cs.count.chunk_count() > 0) {
    return static_cast<int>(cs.count.GetFast(loc.site));
  }
  return cs.what.GetFast(loc.site) != 0 ? 1 : 0;
}

int GameState::PieceState(const Location& loc) const {
  CheckLocation(loc);
  const ContainerState& cs = containers_[loc.container];
  if (cs.state.chunk_count() > 0) {
    return static_cast<int>(cs.state.GetFast(loc.site));
  }
  return 0;
}

bool GameState::Hidden(const Location& loc, int player) const {
  CheckLocation(loc);
  if (player < 0) throw std::out_of_range("invalid player");
  return false;
}

bool GameState::Playable(const Location& loc) const {
  CheckLocation(loc);
  return true;
}

std::uint64_t GameState::Hash() const {
  std::uint64_t h = board_hash_;
  h ^= (static_cast<std::uint64_t>(mover_) + 1) * 0x9e3779b97f4a7c15ULL;
  h ^= (static_cast<std::uint64_t>(consecutive_passes_) + 1) *
       0xc2b2ae3d27d4eb4fULL;
  return h;
}

std::string GameState::PositionKey() const {
  std::string key;
  auto append = [&key](const ChunkSet& cs) {
    for (std::uint64_t w : cs.words()) {
      key.append(reinterpret_cast<const char*>(&w), sizeof(w));
    }
    key += '|';
  };
  for (const ContainerState& cs : containers_) {
    append(cs.what);
    append(cs.who);
    append(cs.count);
    append(cs.state);
  }
  return key;
}

bool operator==(const GameState& a, const GameState& b) {
  return a.mover_ == b.mover_ && a.last_mover_ == b.last_mover_ &&
         a.move_number_ == b.move_number_ &&
         a.consecutive_passes_ == b.consecutive_passes_ &&
         a.terminal_ == b.terminal_ && a.scores_ == b.scores_ &&
         a.containers_ == b.containers_ && a.board_hash_ == b.board_hash_;
}

}  // namespace ludemic
