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

#include "ludemic/service/session.hpp"

#include <cstdio>

#include "ludemic/engine.hpp"
#include "ludemic/random.hpp"
#include "ludemic/rules.hpp"

namespace ludemic::service {

struct SessionManager::Session {
  std::mutex mu;
  std::string id;
  GamePtr game;
  GameState state;
  std::vector<Move> history;
  std::vector<Controller> controllers;
  std::uint64_t seed = 0;
  Clock::time_point last_access;

  Session(GamePtr g, GameState s) : game(std::move(g)), state(std::move(s)) {}
};

SessionManager::SessionManager(Corpus& corpus, Clock::duration idle_timeout,
                               std::function<Clock::time_point()> now)
    : corpus_(corpus), idle_timeout_(idle_timeout), now_(std::move(now)) {}

SessionManager::~SessionManager() = default;

SessionView SessionManager::ViewOf(const Session& s) {
  SessionView view{s.id, s.game, s.state, {}, s.history, s.controllers,
                   s.seed};
  if (!s.state.terminal()) view.legal = LegalMoves(*s.game, s.state);
  return view;
}

SessionView SessionManager::Create(const SessionConfig& config) {
  if (corpus_.Find(config.game) == nullptr) {
    throw ServiceError("unknown-game", "unknown game \"" + config.game + "\"");
  }
  GamePtr game;
  try {
    game = corpus_.Get(config.game, config.options);
  } catch (const LudemicError& e) {
    throw ServiceError("bad-request", e.what());
  }
  const int k = game->num_players();
  if (static_cast<int>(config.controllers.size()) > k) {
    throw ServiceError("bad-request", "more controllers than players");
  }
  for (const Controller& c : config.controllers) {
    if (c.kind == Controller::Kind::kFlatMonteCarlo && c.budget < 1) {
      throw ServiceError("bad-request", "flat-mc budget must be positive");
    }
  }
  auto session = std::make_shared<Session>(game, ApplyStart(*game));
  session->controllers = config.controllers;
  session->controllers.resize(k, Controller::Human());
  session->seed = config.seed;
  EvictIdle();
  std::lock_guard<std::mutex> lock(mu_);
  char id[32];
  std::snprintf(id, sizeof id, "s%06llu",
                static_cast<unsigned long long>(next_id_++));
  session->id = id;
  session->last_access = now_();
  sessions_[session->id] = session;
  return ViewOf(*session);
}

std::shared_ptr<SessionManager::Session> SessionManager::Find(
    const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw ServiceError("unknown-session", "unknown session \"" + id + "\"");
  }
  return it->second;
}

SessionView SessionManager::Get(const std::string& id) {
  auto s = Find(id);
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = now_();
  return ViewOf(*s);
}

SessionView SessionManager::SubmitMove(const std::string& id, int index) {
  auto s = Find(id);
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = now_();
  if (s->state.terminal()) {
    throw ServiceError("illegal-move", "the game is over");
  }
  const Controller& c = s->controllers[s->state.mover() - 1];
  if (c.kind != Controller::Kind::kHuman) {
    throw ServiceError("wrong-turn", "player " +
                                         std::to_string(s->state.mover()) +
                                         " is not human");
  }
  const std::vector<Move> legal = LegalMoves(*s->game, s->state);
  if (index < 0 || index >= static_cast<int>(legal.size())) {
    throw ServiceError("illegal-move",
                       "move index " + std::to_string(index) +
                           " is not in 0.." +
                           std::to_string(legal.size() - 1));
  }
  ApplyMove(*s->game, s->state, legal[index]);
  s->history.push_back(legal[index]);
  return ViewOf(*s);
}

SessionView SessionManager::AiMove(const std::string& id) {
  auto s = Find(id);
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = now_();
  if (s->state.terminal()) {
    throw ServiceError("illegal-move", "the game is over");
  }
  const Controller& c = s->controllers[s->state.mover() - 1];
  if (c.kind != Controller::Kind::kFlatMonteCarlo) {
    throw ServiceError("wrong-turn", "player " +
                                         std::to_string(s->state.mover()) +
                                         " is human");
  }
  const int legal = static_cast<int>(LegalMoves(*s->game, s->state).size());
  const std::uint64_t seed = Rng::Split(
      s->seed, static_cast<std::uint64_t>(s->state.move_number()));
  const FlatMonteCarloResult choice = FlatMonteCarloChoose(
      *s->game, s->state, std::max(c.budget, legal), seed);
  ApplyMove(*s->game, s->state, choice.move);
  s->history.push_back(choice.move);
  return ViewOf(*s);
}

std::size_t SessionManager::EvictIdle() {
  const Clock::time_point cutoff = now_() - idle_timeout_;
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t evicted = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    bool idle = false;
    {
      std::unique_lock<std::mutex> session_lock(it->second->mu,
                                                std::try_to_lock);
      // A session busy with a request is in use, not idle.
      idle = session_lock.owns_lock() && it->second->last_access < cutoff;
    }
    if (idle) {
      it = sessions_.erase(it);
      ++evicted;
    } else {
      ++it;
    }
  }
  return evicted;
}

std::size_t SessionManager::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

}  // namespace ludemic::service
