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

#ifndef LUDEMIC_MOVE_HPP_
#define LUDEMIC_MOVE_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string_view>

namespace ludemic {

enum class ActionType : std::uint8_t {
  kPlace,
  kRemove,
  kSetMover,
  kPass,
  kSetCount,
  kSetPieceState,
};

std::string_view ActionTypeName(ActionType type);

// One primitive state mutation. `value` is the component for kPlace, the
// player for kSetMover and the new count or piece state otherwise.
struct Action {
  ActionType type = ActionType::kPass;
  std::int16_t container = 0;
  std::int32_t site = -1;
  std::int32_t value = 0;

  static constexpr Action Place(int component, int site) {
    return {ActionType::kPlace, 0, site, component};
  }
  static constexpr Action Remove(int site) {
    return {ActionType::kRemove, 0, site, 0};
  }
  static constexpr Action SetMover(int player) {
    return {ActionType::kSetMover, 0, -1, player};
  }
  static constexpr Action Pass() { return {ActionType::kPass, 0, -1, 0}; }
  static constexpr Action SetCount(int site, int count) {
    return {ActionType::kSetCount, 0, site, count};
  }
  static constexpr Action SetPieceState(int site, int state) {
    return {ActionType::kSetPieceState, 0, site, state};
  }

  friend bool operator==(const Action&, const Action&) = default;
};

inline constexpr int kMaxMoveActions = 4;
inline constexpr int kPassProvenance = -1;

// A complete list of actions chosen by one player. Stored inline; moves are
// copied freely on the playout hot path.
class Move {
 public:
  Move() = default;
  Move(int mover, int provenance, std::initializer_list<Action> actions)
      : mover_(static_cast<std::uint8_t>(mover)),
        provenance_(static_cast<std::int16_t>(provenance)) {
    for (const Action& a : actions) Add(a);
  }

  static Move MakePass(int mover) {
    return Move(mover, kPassProvenance, {Action::Pass()});
  }

  void Add(const Action& action) {
    if (size_ == kMaxMoveActions) {
      throw std::length_error("too many actions in one move");
    }
    actions_[size_++] = action;
  }

  std::span<const Action> actions() const { return {actions_.data(), size_}; }
  int size() const { return size_; }
  int mover() const { return mover_; }
  // Index of the play-rule generator that produced the move; -1 for pass.
  int provenance() const { return provenance_; }
  bool is_pass() const {
    return size_ == 1 && actions_[0].type == ActionType::kPass;
  }

  // Site a piece left, or -1.
  int from() const;
  // Site of the last placement, or -1.
  int to() const;

  friend bool operator==(const Move& a, const Move& b) {
    if (a.size_ != b.size_ || a.mover_ != b.mover_) return false;
    for (int i = 0; i < a.size_; ++i) {
      if (!(a.actions_[i] == b.actions_[i])) return false;
    }
    return true;
  }

 private:
  std::array<Action, kMaxMoveActions> actions_{};
  std::uint8_t size_ = 0;
  std::uint8_t mover_ = 0;
  std::int16_t provenance_ = kPassProvenance;
};

}  // namespace ludemic

#endif  // LUDEMIC_MOVE_HPP_
