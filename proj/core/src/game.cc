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

#include "ludemic/game.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ludemic/chunk_set.hpp"

namespace ludemic {

std::string_view ActionTypeName(ActionType type) {
  switch (type) {
    case ActionType::kPlace: return "place";
    case ActionType::kRemove: return "remove";
    case ActionType::kSetMover: return "set-mover";
    case ActionType::kPass: return "pass";
    case ActionType::kSetCount: return "set-count";
    case ActionType::kSetPieceState: return "set-state";
  }
  return "?";
}

int Move::from() const {
  for (int i = 0; i < size_; ++i) {
    if (actions_[i].type == ActionType::kRemove) return actions_[i].site;
  }
  return -1;
}

int Move::to() const {
  for (int i = size_ - 1; i >= 0; --i) {
    if (actions_[i].type == ActionType::kPlace) return actions_[i].site;
  }
  return -1;
}

std::string_view RepresentationName(Representation r) {
  switch (r) {
    case Representation::kUniformPieces: return "uniform-pieces";
    case Representation::kDistinguishedPieces: return "distinguished-pieces";
    case Representation::kPieceState: return "piece-state";
    case Representation::kPieceCount: return "piece-count";
    case Representation::kStacking: return "stacking";
    case Representation::kNoFixedBoard: return "no-fixed-board";
    case Representation::kHiddenInformation: return "hidden-information";
  }
  return "?";
}

std::string_view ResultKindName(ResultKind kind) {
  switch (kind) {
    case ResultKind::kWin: return "Win";
    case ResultKind::kLoss: return "Loss";
    case ResultKind::kDraw: return "Draw";
    case ResultKind::kTie: return "Tie";
    case ResultKind::kAbort: return "Abort";
    case ResultKind::kPayoff: return "Payoff";
  }
  return "?";
}

ScoreVector ScoreVector::Win(int winner, int num_players) {
  ScoreVector s{std::vector<double>(num_players, -1.0), ResultKind::kWin};
  s.utilities.at(winner - 1) = 1.0;
  return s;
}

ScoreVector ScoreVector::Loss(int loser, int num_players) {
  const double others = num_players == 2 ? 1.0 : 0.0;
  ScoreVector s{std::vector<double>(num_players, others), ResultKind::kLoss};
  s.utilities.at(loser - 1) = -1.0;
  return s;
}

ScoreVector ScoreVector::Neutral(ResultKind kind, int num_players) {
  return {std::vector<double>(num_players, 0.0), kind};
}

Game::Game(GameDefinition definition) : def_(std::move(definition)) {
  if (def_.containers.empty()) {
    throw std::invalid_argument("a game needs at least one container");
  }
  if (def_.components.empty() || def_.components[0].index != 0) {
    throw std::invalid_argument("component 0 must be the empty component");
  }
  const int k = def_.players.count;
  const int sites = num_sites();
  def_.regions.resize(k + 1);

  owner_of_.resize(def_.components.size());
  pieces_of_.assign(k + 1, {});
  for (const Component& c : def_.components) {
    owner_of_[c.index] = c.owner;
    if (c.index > 0) pieces_of_[c.owner].push_back(c.index);
  }
  what_bits_ = ChunkSet::BitsForValues(def_.components.size());
  who_bits_ = ChunkSet::BitsForValues(static_cast<std::uint64_t>(k) + 1);

  end_rules_ = def_.end;
  const bool explicit_all_passed = std::any_of(
      end_rules_.begin(), end_rules_.end(), [](const EndRule& r) {
        return r.condition.kind == ConditionKind::kAllPassed;
      });
  at_only_ = !end_rules_.empty() &&
             std::all_of(end_rules_.begin(), end_rules_.end(),
                         [](const EndRule& r) {
                           return r.condition.kind == ConditionKind::kAt;
                         });
  if (at_only_) {
    at_index_.assign(sites, -1);
    for (std::size_t i = 0; i < end_rules_.size(); ++i) {
      const int site = end_rules_[i].condition.site;
      if (site >= 0 && site < sites && at_index_[site] == -1) {
        at_index_[site] = static_cast<int>(i);
      }
    }
  }
  if (!explicit_all_passed) {
    EndRule all_passed;
    all_passed.condition.kind = ConditionKind::kAllPassed;
    all_passed.outcome.result = ResultKind::kDraw;
    end_rules_.push_back(all_passed);
  }
  for (const EndRule& r : end_rules_) {
    uses_connect_ = uses_connect_ || r.condition.kind == ConditionKind::kConnect;
  }
  for (const Generator& g : def_.generators) {
    has_removal_ = has_removal_ || g.kind == GeneratorKind::kStep ||
                   g.kind == GeneratorKind::kDescend;
  }
  placement_only_ =
      !def_.generators.empty() &&
      std::all_of(def_.generators.begin(), def_.generators.end(),
                  [](const Generator& g) {
                    return g.kind == GeneratorKind::kToEmpty;
                  });

  int total_sites = 0;
  for (const Container& c : def_.containers) total_sites += c.num_sites();
  max_moves_ = 50 * total_sites;

  for (Direction d : board().pregen.directions) {
    const Direction o = Opposite(d);
    if (d < o && std::find(board().pregen.directions.begin(),
                           board().pregen.directions.end(),
                           o) != board().pregen.directions.end()) {
      line_axes_.emplace_back(d, o);
    }
  }

  region_mask_.assign(k + 1, std::vector<std::uint32_t>(sites, 0));
  region_node_base_.assign(k + 1, sites);
  int next_node = sites;
  for (int p = 1; p <= k; ++p) {
    const auto& sets = def_.regions[p];
    if (sets.size() > 32) {
      throw std::invalid_argument("at most 32 region sets per player");
    }
    region_node_base_[p] = next_node;
    next_node += static_cast<int>(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (int site : sets[i]) region_mask_[p][site] |= 1u << i;
    }
  }
  union_find_size_ = next_node;

  std::mt19937_64 keygen(0x1d5eedULL);
  what_keys_.resize(static_cast<std::size_t>(sites) * def_.components.size());
  for (auto& key : what_keys_) key = keygen();
  who_keys_.resize(static_cast<std::size_t>(sites) * (k + 1));
  for (auto& key : who_keys_) key = keygen();
  // Empty sites contribute nothing, so s0 of an empty board hashes to the
  // mover key alone.
  for (int s = 0; s < sites; ++s) {
    what_keys_[static_cast<std::size_t>(s) * def_.components.size()] = 0;
    who_keys_[static_cast<std::size_t>(s) * (k + 1)] = 0;
  }
  mover_keys_.resize(k + 1);
  for (auto& key : mover_keys_) key = keygen();
}

std::string Game::SiteName(int site) const {
  const Container& b = board();
  if (site < 0 || site >= b.num_sites()) return "?";
  const Vertex& v = b.vertices[site];
  if (b.tiling == Tiling::kGraph || v.column < 0 || v.column >= 26) {
    return std::to_string(site);
  }
  return std::string(1, static_cast<char>('a' + v.column)) +
         std::to_string(v.row + 1);
}

}  // namespace ludemic
