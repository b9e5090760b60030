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

#ifndef LUDEMIC_SERVICE_SESSION_HPP_
#define LUDEMIC_SERVICE_SESSION_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ludemic/corpus.hpp"
#include "ludemic/error.hpp"
#include "ludemic/game.hpp"
#include "ludemic/game_state.hpp"
#include "ludemic/move.hpp"

namespace ludemic::service {

// A request the service refuses; `code` is the machine-readable tag sent
// to clients (unknown-game, unknown-session, illegal-move, wrong-turn,
// bad-request).
class ServiceError : public LudemicError {
 public:
  ServiceError(std::string code, const std::string& message)
      : LudemicError(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Controller {
  enum class Kind { kHuman, kFlatMonteCarlo };
  Kind kind = Kind::kHuman;
  int budget = 1000;  // kFlatMonteCarlo only

  static Controller Human() { return {Kind::kHuman, 0}; }
  static Controller FlatMonteCarlo(int budget) {
    return {Kind::kFlatMonteCarlo, budget};
  }
};

struct SessionConfig {
  std::string game;
  OptionSelection options;
  // Per player 1..k; missing entries are human.
  std::vector<Controller> controllers;
  std::uint64_t seed = 1;
};

// A consistent copy of one session, taken under its lock.
struct SessionView {
  std::string id;
  GamePtr game;
  GameState state;
  std::vector<Move> legal;  // empty when terminal
  std::vector<Move> history;
  std::vector<Controller> controllers;  // index p-1
  std::uint64_t seed = 0;
};

// In-memory sessions. Each session's mutations are serialized by its own
// mutex; compiled games come from the corpus and are shared.
class SessionManager {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionManager(Corpus& corpus,
                          Clock::duration idle_timeout = std::chrono::hours(1),
                          std::function<Clock::time_point()> now = Clock::now);
  ~SessionManager();

  SessionView Create(const SessionConfig& config);
  SessionView Get(const std::string& id);
  // Applies legal move `index` for a human mover.
  SessionView SubmitMove(const std::string& id, int index);
  // Lets the flat Monte Carlo controller of the mover choose and play.
  SessionView AiMove(const std::string& id);

  // Drops sessions idle for longer than the timeout; returns how many.
  std::size_t EvictIdle();
  std::size_t size() const;
  Corpus& corpus() { return corpus_; }

 private:
  struct Session;

  std::shared_ptr<Session> Find(const std::string& id);
  static SessionView ViewOf(const Session& s);

  Corpus& corpus_;
  Clock::duration idle_timeout_;
  std::function<Clock::time_point()> now_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

}  // namespace ludemic::service

#endif  // LUDEMIC_SERVICE_SESSION_HPP_
