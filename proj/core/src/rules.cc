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

#include "ludemic/rules.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ludemic/error.hpp"

namespace ludemic {

// Mutation primitives. Kept out of GameState's public surface so that
// every state change goes through move application.
struct detail::StateAccess {
  static int Find(GameState& s, int x) {
    auto& parent = s.connect_parent_;
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  static void Union(GameState& s, int a, int b) {
    a = Find(s, a);
    b = Find(s, b);
    if (a != b) s.connect_parent_[std::max(a, b)] = std::min(a, b);
  }

  static bool TracksConnect(const GameState& s) {
    return !s.connect_parent_.empty();
  }

  static bool ConnectedFast(GameState& s, const Game& game, int player) {
    const auto& sets = game.regions(player);
    if (sets.size() < 2) return false;
    const int base = game.region_node_base(player);
    const int root = Find(s, base);
    for (std::size_t i = 1; i < sets.size(); ++i) {
      if (Find(s, base + static_cast<int>(i)) != root) return false;
    }
    return true;
  }

  static std::uint64_t AuxKey(int site, int value, std::uint64_t tag) {
    std::uint64_t z = (static_cast<std::uint64_t>(site) << 32) ^
                      static_cast<std::uint32_t>(value) ^ (tag << 56);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Hash contribution of a site's count and state. Values equal to what a
  // representation without those vectors would report contribute nothing,
  // so equal positions hash equally under every representation.
  static std::uint64_t AuxHash(const GameState& s, int site) {
    const ContainerState& cs = s.containers_[0];
    std::uint64_t h = 0;
    if (cs.count.chunk_count() > 0) {
      const int count = static_cast<int>(cs.count.GetFast(site));
      const int implied = cs.what.GetFast(site) != 0 ? 1 : 0;
      if (count != implied) h ^= AuxKey(site, count, 0xc0);
    }
    if (cs.state.chunk_count() > 0) {
      const int state = static_cast<int>(cs.state.GetFast(site));
      if (state != 0) h ^= AuxKey(site, state, 0x57);
    }
    return h;
  }

  static bool HasAux(const GameState& s) {
    return s.containers_[0].count.chunk_count() > 0 ||
           s.containers_[0].state.chunk_count() > 0;
  }

  static void Place(const Game& game, GameState& s, int site, int component) {
    ContainerState& cs = s.containers_[0];
    const int owner = game.owner_of(component);
    const bool aux = HasAux(s);
    if (aux) s.board_hash_ ^= AuxHash(s, site);
    cs.what.SetFast(site, static_cast<std::uint32_t>(component));
    if (s.stores_who_) cs.who.SetFast(site, static_cast<std::uint32_t>(owner));
    if (cs.count.chunk_count() > 0) cs.count.SetFast(site, 1);
    if (aux) s.board_hash_ ^= AuxHash(s, site);
    ++cs.occupied;
    s.board_hash_ ^= game.what_key(site, component) ^ game.who_key(site, owner);
    s.last_to_ = site;
    if (TracksConnect(s)) {
      for (int n : game.board().adjacency[site]) {
        if (s.Who(n) == owner) Union(s, site, n);
      }
      std::uint32_t mask = game.region_mask(owner, site);
      const int base = game.region_node_base(owner);
      for (int i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1u) Union(s, site, base + i);
      }
    }
  }

  static void Remove(const Game& game, GameState& s, int site) {
    ContainerState& cs = s.containers_[0];
    const int component = static_cast<int>(cs.what.GetFast(site));
    if (component == 0) return;
    const bool aux = HasAux(s);
    if (aux) s.board_hash_ ^= AuxHash(s, site);
    s.board_hash_ ^= game.what_key(site, component) ^
                     game.who_key(site, game.owner_of(component));
    cs.what.SetFast(site, 0);
    if (s.stores_who_) cs.who.SetFast(site, 0);
    if (cs.count.chunk_count() > 0) cs.count.SetFast(site, 0);
    if (cs.state.chunk_count() > 0) cs.state.SetFast(site, 0);
    if (aux) s.board_hash_ ^= AuxHash(s, site);
    --cs.occupied;
  }

  static void SetAux(GameState& s, ChunkSet& cs, int site, int value) {
    s.board_hash_ ^= AuxHash(s, site);
    cs.Set(site, static_cast<std::uint32_t>(value));
    s.board_hash_ ^= AuxHash(s, site);
  }

  // Applies one action; returns the explicit mover it sets, or 0.
  static int Apply(const Game& game, GameState& s, const Action& a) {
    switch (a.type) {
      case ActionType::kPlace:
        Place(game, s, a.site, a.value);
        return 0;
      case ActionType::kRemove:
        Remove(game, s, a.site);
        return 0;
      case ActionType::kSetMover:
        return a.value;
      case ActionType::kPass:
        return 0;
      case ActionType::kSetCount:
        SetAux(s, s.containers_[0].count, a.site, a.value);
        return 0;
      case ActionType::kSetPieceState:
        SetAux(s, s.containers_[0].state, a.site, a.value);
        return 0;
    }
    return 0;
  }

  static void ValidateStartAction(const Game& game, const GameState& s,
                                  const Action& a) {
    const int sites = game.num_sites();
    auto fail = [&](const std::string& why) {
      throw RuleError("start action " + std::string(ActionTypeName(a.type)) +
                      " is inapplicable: " + why);
    };
    if (a.type == ActionType::kSetMover) {
      if (a.value < 1 || a.value > game.num_players()) fail("no such player");
      return;
    }
    if (a.site < 0 || a.site >= sites) {
      fail("site " + std::to_string(a.site) + " is off the board");
    }
    switch (a.type) {
      case ActionType::kPlace:
        if (a.value <= 0 || a.value >= game.num_components()) {
          fail("unknown component");
        }
        if (s.What(a.site) != 0) {
          fail("site " + std::to_string(a.site) + " is occupied");
        }
        break;
      case ActionType::kSetCount:
        if (!game.stores_count()) fail("representation has no counts");
        if (a.value < 0 || a.value > 255) fail("count out of range");
        break;
      case ActionType::kSetPieceState:
        if (!game.stores_state()) fail("representation has no piece states");
        if (a.value < 0 || a.value > 255) fail("piece state out of range");
        break;
      default:
        fail("not allowed in start rules");
    }
  }

  static void Stamp(GameState& s, ScoreVector scores) {
    s.terminal_ = true;
    s.scores_ = std::move(scores);
  }

  static void ApplyMove(const Game& game, GameState& s, const Move& m);
  static GameState Start(const Game& game);
};

namespace {

using Access = detail::StateAccess;

int ResolveRole(const RoleRef& role, const GameState& s) {
  switch (role.kind) {
    case RoleRef::Kind::kMover: return s.last_mover();
    case RoleRef::Kind::kNext: return s.mover();
    case RoleRef::Kind::kPlayer: return role.player;
  }
  return 0;
}

// Score vector for a fired rule, or nothing when its role names no player
// (e.g. "Mover" before anyone has moved).
std::optional<ScoreVector> Score(const Game& game, const EndOutcome& outcome,
                                 const GameState& s) {
  const int k = game.num_players();
  switch (outcome.result) {
    case ResultKind::kPayoff:
      return ScoreVector{outcome.payoff, ResultKind::kPayoff};
    case ResultKind::kDraw:
    case ResultKind::kTie:
    case ResultKind::kAbort:
      return ScoreVector::Neutral(outcome.result, k);
    case ResultKind::kWin:
    case ResultKind::kLoss: {
      const int p = ResolveRole(outcome.role, s);
      if (p < 1 || p > k) return std::nullopt;
      return outcome.result == ResultKind::kWin ? ScoreVector::Win(p, k)
                                                : ScoreVector::Loss(p, k);
    }
  }
  return std::nullopt;
}

bool ReachFull(const Game& game, const GameState& s, int player) {
  for (const auto& set : game.regions(player)) {
    for (int site : set) {
      if (s.Who(site) == player) return true;
    }
  }
  return false;
}

int TokenSite(const GameState& s) {
  if (s.last_to() >= 0 && s.What(s.last_to()) != 0) return s.last_to();
  for (int site = 0; site < s.num_sites(); ++site) {
    if (s.What(site) != 0) return site;
  }
  return -1;
}

// Visits moves in canonical order; stops early when `sink` returns false.
// Returns false if stopped.
template <typename Sink>
bool ForEachMove(const Game& game, const GameState& s, Sink&& sink) {
  const int player = s.mover();
  const Container& board = game.board();
  const int sites = board.num_sites();
  const auto& gens = game.generators();
  bool steps_done = false;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Generator& gen = gens[gi];
    const int provenance = static_cast<int>(gi);
    switch (gen.kind) {
      case GeneratorKind::kToEmpty: {
        const auto& pieces = game.pieces_of(player);
        for (int site = 0; site < sites; ++site) {
          if (s.What(site) != 0) continue;
          for (int piece : pieces) {
            if (!sink(Move(player, provenance, {Action::Place(piece, site)}))) {
              return false;
            }
          }
        }
        break;
      }
      case GeneratorKind::kToLowestEmpty: {
        const auto& pieces = game.pieces_of(player);
        const int rows = board.pregen.rows;
        const int cols = board.pregen.columns;
        std::vector<int> targets;
        targets.reserve(cols);
        for (int col = 0; col < cols; ++col) {
          for (int row = 0; row < rows; ++row) {
            const int site = row * cols + col;
            if (s.What(site) == 0) {
              targets.push_back(site);
              break;
            }
          }
        }
        std::sort(targets.begin(), targets.end());
        for (int site : targets) {
          for (int piece : pieces) {
            if (!sink(Move(player, provenance, {Action::Place(piece, site)}))) {
              return false;
            }
          }
        }
        break;
      }
      case GeneratorKind::kStep: {
        // All step generators are merged site-major at the first one.
        if (steps_done) break;
        steps_done = true;
        for (int site = 0; site < sites; ++site) {
          if (s.Who(site) != player) continue;
          const int piece = s.What(site);
          for (std::size_t sj = gi; sj < gens.size(); ++sj) {
            const Generator& step = gens[sj];
            if (step.kind != GeneratorKind::kStep) continue;
            for (Direction d : step.directions[player]) {
              const int target = board.pregen.Neighbor(site, d);
              if (target < 0) continue;
              const int owner = s.Who(target);
              const bool empty = s.What(target) == 0;
              const bool enemy = !empty && owner != player;
              bool ok = false;
              switch (step.target) {
                case StepTarget::kEmpty: ok = empty; break;
                case StepTarget::kEnemy: ok = enemy; break;
                case StepTarget::kEmptyOrEnemy: ok = empty || enemy; break;
              }
              if (!ok) continue;
              Move m(player, static_cast<int>(sj), {Action::Remove(site)});
              if (!empty) m.Add(Action::Remove(target));
              m.Add(Action::Place(piece, target));
              if (!sink(m)) return false;
            }
          }
        }
        break;
      }
      case GeneratorKind::kDescend: {
        const int token_site = TokenSite(s);
        if (token_site < 0) break;
        const int token = s.What(token_site);
        for (int child : board.pregen.children[token_site]) {
          Move m(player, provenance,
                 {Action::Remove(token_site), Action::Place(token, child)});
          if (gen.control[child] != 0) {
            m.Add(Action::SetMover(gen.control[child]));
          }
          if (!sink(m)) return false;
        }
        break;
      }
    }
  }
  return true;
}

// End rules after `s` was reached by a move: line, connect and reach only
// look at the last placement.
std::optional<ScoreVector> EvalEndIncremental(const Game& game, GameState& s) {
  const auto& rules = game.end_rules();
  const int moved = s.last_mover();
  const int to = s.last_to();
  if (game.at_only()) {
    const int index = to >= 0 ? game.at_index()[to] : -1;
    if (index >= 0) {
      if (auto score = Score(game, rules[index].outcome, s)) return score;
    }
  }
  for (const EndRule& rule : rules) {
    bool fired = false;
    const EndCondition& c = rule.condition;
    switch (c.kind) {
      case ConditionKind::kLine:
        fired = moved > 0 && to >= 0 && s.Who(to) == moved &&
                LineThrough(game, s, to, moved, c.length);
        break;
      case ConditionKind::kConnect:
        if (moved > 0 && to >= 0 && s.Who(to) == moved) {
          fired = Access::TracksConnect(s) ? Access::ConnectedFast(s, game, moved)
                                           : IsConnected(game, s, moved);
        }
        break;
      case ConditionKind::kReach:
        fired = moved > 0 && to >= 0 && s.Who(to) == moved &&
                game.region_mask(moved, to) != 0;
        break;
      case ConditionKind::kNoMoves:
        fired = !HasAnyMove(game, s);
        break;
      case ConditionKind::kBoardFull:
        fired = s.occupied() == s.num_sites();
        break;
      case ConditionKind::kAllPassed:
        fired = s.consecutive_passes() >= game.num_players();
        break;
      case ConditionKind::kAt:
        if (game.at_only()) continue;
        fired = s.What(c.site) != 0;
        break;
    }
    if (fired) {
      if (auto score = Score(game, rule.outcome, s)) return score;
    }
  }
  if (s.move_number() >= game.max_moves()) {
    return ScoreVector::Neutral(ResultKind::kDraw, game.num_players());
  }
  return std::nullopt;
}

}  // namespace

void detail::StateAccess::ApplyMove(const Game& game, GameState& s,
                                    const Move& m) {
  const int moved = s.mover_;
  int explicit_mover = 0;
  s.last_to_ = -1;
  for (const Action& a : m.actions()) {
    if (const int who = Apply(game, s, a); who != 0) explicit_mover = who;
  }
  ++s.move_number_;
  s.consecutive_passes_ = m.is_pass() ? s.consecutive_passes_ + 1 : 0;
  s.last_mover_ = moved;
  s.mover_ = explicit_mover != 0 ? explicit_mover : game.NextPlayer(moved);
  if (auto scores = EvalEndIncremental(game, s)) Stamp(s, std::move(*scores));
}

GameState detail::StateAccess::Start(const Game& game) {
  GameState s(game);
  int explicit_mover = 0;
  for (const Action& a : game.start()) {
    ValidateStartAction(game, s, a);
    if (const int who = Apply(game, s, a); who != 0) explicit_mover = who;
  }
  if (explicit_mover != 0) s.mover_ = explicit_mover;
  if (auto scores = EvalEnd(game, s)) Stamp(s, std::move(*scores));
  return s;
}

GameState ApplyStart(const Game& game) { return Access::Start(game); }

void GenerateMoves(const Game& game, const GameState& state,
                   std::vector<Move>& out) {
  out.clear();
  ForEachMove(game, state, [&out](const Move& m) {
    out.push_back(m);
    return true;
  });
  if (out.empty()) out.push_back(Move::MakePass(state.mover()));
}

std::vector<Move> LegalMoves(const Game& game, const GameState& state) {
  if (state.terminal()) {
    throw RuleError("legal moves requested for a terminal state");
  }
  std::vector<Move> moves;
  GenerateMoves(game, state, moves);
  return moves;
}

int CountPlacementMoves(const Game& game, const GameState& state) {
  const int pieces = static_cast<int>(game.pieces_of(state.mover()).size());
  const int generators = static_cast<int>(game.generators().size());
  return (state.num_sites() - state.occupied()) * pieces * generators;
}

Move NthPlacementMove(const Game& game, const GameState& state, int index) {
  const auto& pieces = game.pieces_of(state.mover());
  const int per_generator =
      (state.num_sites() - state.occupied()) * static_cast<int>(pieces.size());
  const int provenance = index / per_generator;
  index %= per_generator;
  int empties = index / static_cast<int>(pieces.size());
  const int piece = pieces[index % pieces.size()];
  for (int site = 0;; ++site) {
    if (state.What(site) == 0 && empties-- == 0) {
      return Move(state.mover(), provenance, {Action::Place(piece, site)});
    }
  }
}

bool HasAnyMove(const Game& game, const GameState& state) {
  return !ForEachMove(game, state, [](const Move&) { return false; });
}

std::optional<ScoreVector> EvalEnd(const Game& game, const GameState& s) {
  const int moved = s.last_mover();
  for (const EndRule& rule : game.end_rules()) {
    bool fired = false;
    const EndCondition& c = rule.condition;
    switch (c.kind) {
      case ConditionKind::kLine:
        fired = moved > 0 && HasLine(game, s, moved, c.length);
        break;
      case ConditionKind::kConnect:
        fired = moved > 0 && IsConnected(game, s, moved);
        break;
      case ConditionKind::kReach:
        fired = moved > 0 && ReachFull(game, s, moved);
        break;
      case ConditionKind::kNoMoves:
        fired = !HasAnyMove(game, s);
        break;
      case ConditionKind::kBoardFull:
        fired = s.occupied() == s.num_sites();
        break;
      case ConditionKind::kAllPassed:
        fired = s.consecutive_passes() >= game.num_players();
        break;
      case ConditionKind::kAt:
        fired = s.What(c.site) != 0;
        break;
    }
    if (fired) {
      if (auto score = Score(game, rule.outcome, s)) return score;
    }
  }
  if (s.move_number() >= game.max_moves()) {
    return ScoreVector::Neutral(ResultKind::kDraw, game.num_players());
  }
  return std::nullopt;
}

void ApplyMove(const Game& game, GameState& state, const Move& move) {
  Access::ApplyMove(game, state, move);
}

GameState Successor(const Game& game, const GameState& state,
                    const Move& move) {
  GameState next = state;
  Access::ApplyMove(game, next, move);
  return next;
}

bool IsLegal(const Game& game, const GameState& state, const Move& move) {
  if (state.terminal()) return false;
  std::vector<Move> moves;
  GenerateMoves(game, state, moves);
  return std::find(moves.begin(), moves.end(), move) != moves.end();
}

GameState CheckedSuccessor(const Game& game, const GameState& state,
                           const Move& move) {
  if (state.terminal()) throw RuleError("the game is already over");
  if (!IsLegal(game, state, move)) {
    throw RuleError("illegal move: " + DescribeMove(game, move));
  }
  return Successor(game, state, move);
}

std::string DescribeMove(const Game& game, const Move& move) {
  if (move.is_pass()) return "pass";
  const int from = move.from();
  const int to = move.to();
  if (game.board().tiling == Tiling::kGraph && from >= 0 && to >= 0) {
    return "token " + game.SiteName(from) + " -> " + game.SiteName(to);
  }
  if (from >= 0 && to >= 0) {
    int removals = 0;
    for (const Action& a : move.actions()) {
      removals += a.type == ActionType::kRemove ? 1 : 0;
    }
    return game.SiteName(from) + (removals > 1 ? " x " : " - ") +
           game.SiteName(to);
  }
  if (to >= 0) {
    for (const Action& a : move.actions()) {
      if (a.type == ActionType::kPlace) {
        return game.components()[a.value].name + " at " + game.SiteName(to);
      }
    }
  }
  std::string out;
  for (const Action& a : move.actions()) {
    if (!out.empty()) out += ", ";
    out += ActionTypeName(a.type);
  }
  return out;
}

bool LineThrough(const Game& game, const GameState& state, int site,
                 int player, int length) {
  const PregenData& pregen = game.board().pregen;
  for (const auto& [forward, backward] : game.line_axes()) {
    int count = 1;
    for (int n = pregen.Neighbor(site, forward);
         n >= 0 && state.Who(n) == player; n = pregen.Neighbor(n, forward)) {
      ++count;
    }
    for (int n = pregen.Neighbor(site, backward);
         n >= 0 && state.Who(n) == player; n = pregen.Neighbor(n, backward)) {
      ++count;
    }
    if (count >= length) return true;
  }
  return false;
}

bool HasLine(const Game& game, const GameState& state, int player,
             int length) {
  const PregenData& pregen = game.board().pregen;
  for (int site = 0; site < state.num_sites(); ++site) {
    if (state.Who(site) != player) continue;
    for (const auto& [forward, backward] : game.line_axes()) {
      const int before = pregen.Neighbor(site, backward);
      if (before >= 0 && state.Who(before) == player) continue;
      int count = 1;
      for (int n = pregen.Neighbor(site, forward);
           n >= 0 && state.Who(n) == player;
           n = pregen.Neighbor(n, forward)) {
        ++count;
      }
      if (count >= length) return true;
    }
  }
  return false;
}

bool IsConnected(const Game& game, const GameState& state, int player) {
  const auto& sets = game.regions(player);
  if (sets.size() < 2) return false;
  const Container& board = game.board();
  const std::uint32_t all = sets.size() == 32
                                ? ~std::uint32_t{0}
                                : ((std::uint32_t{1} << sets.size()) - 1);
  std::vector<char> seen(board.num_sites(), 0);
  std::vector<int> stack;
  for (int start : sets[0]) {
    if (seen[start] || state.Who(start) != player) continue;
    std::uint32_t touched = 0;
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      touched |= game.region_mask(player, v);
      for (int n : board.adjacency[v]) {
        if (!seen[n] && state.Who(n) == player) {
          seen[n] = 1;
          stack.push_back(n);
        }
      }
    }
    if (touched == all) return true;
  }
  return false;
}

}  // namespace ludemic
