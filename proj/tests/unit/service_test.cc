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

#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>
#include <httplib.h>

#include "ludemic/engine.hpp"
#include "ludemic/rules.hpp"
#include "ludemic/service/server.hpp"
#include "ludemic/service/session.hpp"
#include "ludemic/service/wire.hpp"
#include "test_util.hpp"

namespace ludemic::service {
namespace {

SessionConfig Config(std::string game, OptionSelection options = {},
                     std::vector<Controller> controllers = {},
                     std::uint64_t seed = 1) {
  SessionConfig c;
  c.game = std::move(game);
  c.options = std::move(options);
  c.controllers = std::move(controllers);
  c.seed = seed;
  return c;
}

class SessionTest : public ::testing::Test {
 protected:
  SessionTest() : corpus_(ludemic::testing::GamesDir()), sessions_(corpus_) {}

  std::string ErrorCode(const std::function<void()>& f) {
    try {
      f();
    } catch (const ServiceError& e) {
      return e.code();
    }
    return "";
  }

  Corpus corpus_;
  SessionManager sessions_;
};

TEST_F(SessionTest, CreateTicTacToe) {
  const SessionView v = sessions_.Create(Config(
      "Tic-Tac-Toe", {}, {Controller::Human(), Controller::FlatMonteCarlo(1000)}, 7));
  EXPECT_EQ(v.id, "s000001");
  EXPECT_EQ(v.state.mover(), 1);
  EXPECT_EQ(v.state.occupied(), 0);
  EXPECT_EQ(v.legal.size(), 9u);
  EXPECT_TRUE(v.history.empty());
  ASSERT_EQ(v.controllers.size(), 2u);
  EXPECT_EQ(v.controllers[1].kind, Controller::Kind::kFlatMonteCarlo);
  EXPECT_EQ(sessions_.size(), 1u);
  EXPECT_EQ(sessions_.Create(Config("Tic-Tac-Toe")).id, "s000002");
}

TEST_F(SessionTest, CreateErrors) {
  EXPECT_EQ(ErrorCode([&] { sessions_.Create(Config("Chess")); }), "unknown-game");
  EXPECT_EQ(ErrorCode([&] {
              sessions_.Create(Config("Hex", {{"Board Size", "2x2"}}));
            }),
            "bad-request");
  EXPECT_EQ(ErrorCode([&] {
              sessions_.Create(Config("Tic-Tac-Toe", {}, std::vector<Controller>(3)));
            }),
            "bad-request");
  EXPECT_EQ(ErrorCode([&] { sessions_.Get("s999999"); }), "unknown-session");
  EXPECT_EQ(sessions_.size(), 0u);
}

TEST_F(SessionTest, HexGeometry) {
  const SessionView v = sessions_.Create(Config("Hex"));
  EXPECT_EQ(v.state.num_sites(), 121);
  const Json g = GeometryJson(*v.game);
  EXPECT_EQ(g["sites"].size(), 121u);
  EXPECT_EQ(g["tiling"], "hex");
  EXPECT_EQ(g["sites"][0]["polygon"].size(), 6u);
  EXPECT_EQ(g["options"]["Board Size"], "11x11");
  const SessionView small =
      sessions_.Create(Config("Hex", {{"Board Size", "9x9"}, {"End Rules", "Misere"}}));
  EXPECT_EQ(GeometryJson(*small.game)["sites"].size(), 81u);
  EXPECT_EQ(small.game->options().at("End Rules"), "Misere");
}

TEST_F(SessionTest, SubmitMoves) {
  const std::string id = sessions_.Create(Config("Tic-Tac-Toe")).id;
  SessionView v = sessions_.SubmitMove(id, 4);
  EXPECT_EQ(v.state.What(4), 1);
  EXPECT_EQ(v.state.mover(), 2);
  EXPECT_EQ(v.legal.size(), 8u);
  EXPECT_EQ(v.legal, LegalMoves(*v.game, v.state));
  const std::uint64_t before = v.state.Hash();
  EXPECT_EQ(ErrorCode([&] { sessions_.SubmitMove(id, 99); }), "illegal-move");
  EXPECT_EQ(ErrorCode([&] { sessions_.SubmitMove(id, -1); }), "illegal-move");
  EXPECT_EQ(sessions_.Get(id).state.Hash(), before);
  EXPECT_EQ(ErrorCode([&] { sessions_.AiMove(id); }), "wrong-turn");
  EXPECT_EQ(sessions_.Get(id).history.size(), 1u);
}

TEST_F(SessionTest, HistoryReplaysToState) {
  const std::string id = sessions_.Create(Config("Tic-Tac-Toe")).id;
  sessions_.SubmitMove(id, 0);
  sessions_.SubmitMove(id, 0);
  const SessionView v = sessions_.SubmitMove(id, 0);
  ASSERT_EQ(v.history.size(), 3u);
  GameState s = ApplyStart(*v.game);
  for (const Move& m : v.history) s = CheckedSuccessor(*v.game, s, m);
  EXPECT_EQ(s.Hash(), v.state.Hash());
  EXPECT_EQ(s, v.state);
}

TEST(SessionAiTest, TakesImmediateWin) {
  Corpus corpus(ludemic::testing::FixturesDir() / "corpus");
  SessionManager sessions(corpus);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const std::string id =
        sessions
            .Create(Config("Almost", {},
                           {Controller::FlatMonteCarlo(900), Controller::Human()},
                           seed))
            .id;
    EXPECT_THROW(sessions.SubmitMove(id, 0), ServiceError);
    const SessionView v = sessions.AiMove(id);
    ASSERT_EQ(v.history.size(), 1u);
    EXPECT_EQ(v.history[0].to(), 2);
    EXPECT_TRUE(v.state.terminal());
    EXPECT_EQ(v.state.scores(), ScoreVector::Win(1, 2));
  }
}

TEST_F(SessionTest, AiIsDeterministicPerSeed) {
  const std::vector<Controller> ai = {Controller::FlatMonteCarlo(200),
                                      Controller::FlatMonteCarlo(200)};
  const std::string a = sessions_.Create(Config("Tic-Tac-Toe", {}, ai, 11)).id;
  const std::string b = sessions_.Create(Config("Tic-Tac-Toe", {}, ai, 11)).id;
  for (int ply = 0; ply < 4; ++ply) {
    EXPECT_EQ(sessions_.AiMove(a).history.back(),
              sessions_.AiMove(b).history.back());
  }
}

TEST_F(SessionTest, AiVersusAiTerminates) {
  const std::string id =
      sessions_
          .Create(Config("Tic-Tac-Toe",
                   {},
                   {Controller::FlatMonteCarlo(300), Controller::FlatMonteCarlo(300)},
                   5))
          .id;
  SessionView v = sessions_.Get(id);
  int plies = 0;
  while (!v.state.terminal()) {
    v = sessions_.AiMove(id);
    ++plies;
    ASSERT_LE(plies, 11);
  }
  EXPECT_LE(v.state.occupied(), 9);
  EXPECT_TRUE(v.legal.empty());
  EXPECT_FALSE(v.state.scores().empty());
  EXPECT_EQ(ErrorCode([&] { sessions_.AiMove(id); }), "illegal-move");
}

TEST_F(SessionTest, SmallBudgetIsRaisedToMoveCount) {
  const std::string id = sessions_
                             .Create(Config("Gomoku", {}, {Controller::FlatMonteCarlo(1)}, 2))
                             .id;
  EXPECT_EQ(sessions_.AiMove(id).history.size(), 1u);
}

TEST_F(SessionTest, ConcurrentSubmissionsSerialize) {
  const std::string id = sessions_.Create(Config("Gomoku")).id;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 10; ++i) sessions_.SubmitMove(id, 0);
    });
  }
  for (auto& t : threads) t.join();
  const SessionView v = sessions_.Get(id);
  ASSERT_EQ(v.history.size(), 40u);
  GameState s = ApplyStart(*v.game);
  for (const Move& m : v.history) s = CheckedSuccessor(*v.game, s, m);
  EXPECT_EQ(s, v.state);
}

TEST(SessionEvictionTest, IdleSessionsAreDropped) {
  Corpus corpus(ludemic::testing::GamesDir());
  auto now = SessionManager::Clock::time_point{};
  SessionManager sessions(corpus, std::chrono::minutes(10),
                          [&] { return now; });
  const std::string old_id = sessions.Create(Config("Tic-Tac-Toe")).id;
  now += std::chrono::minutes(6);
  const std::string new_id = sessions.Create(Config("Tic-Tac-Toe")).id;
  now += std::chrono::minutes(6);
  EXPECT_EQ(sessions.EvictIdle(), 1u);
  EXPECT_THROW(sessions.Get(old_id), ServiceError);
  EXPECT_NO_THROW(sessions.Get(new_id));
  EXPECT_EQ(sessions.size(), 1u);
}

TEST(WireTest, StateFields) {
  Corpus corpus(ludemic::testing::GamesDir());
  SessionManager sessions(corpus);
  SessionView v = sessions.Create(Config("Tic-Tac-Toe"));
  const Json s = StateJson(v);
  for (const char* key : {"session", "game", "mover", "moveNumber", "terminal",
                          "scores", "what", "who", "legalMoves", "history",
                          "controllers", "hash"}) {
    EXPECT_TRUE(s.contains(key)) << key;
  }
  EXPECT_TRUE(s["scores"].is_null());
  EXPECT_EQ(s["what"].size(), 9u);
  EXPECT_EQ(s["legalMoves"].size(), 9u);
  EXPECT_EQ(s["legalMoves"][4]["index"], 4);
  EXPECT_EQ(s["legalMoves"][4]["description"], "Disc at b2");
  EXPECT_EQ(s["legalMoves"][4]["to"], 4);
  EXPECT_EQ(s["legalMoves"][4]["actions"][0]["type"], "place");
  EXPECT_EQ(s["controllers"][0]["type"], "human");
  EXPECT_EQ(s["hash"].get<std::string>().size(), 16u);
  EXPECT_EQ(s["hash"], HashString(v.state.Hash()));

  for (int index : {0, 3, 0, 2, 0}) v = sessions.SubmitMove(v.id, index);
  const Json done = StateJson(v);
  EXPECT_TRUE(done["terminal"]);
  EXPECT_EQ(done["scores"]["kind"], "Win");
  EXPECT_EQ(done["scores"]["utilities"], Json::array({1.0, -1.0}));
  EXPECT_TRUE(done["legalMoves"].empty());
  EXPECT_EQ(done["history"].size(), 5u);
}

TEST(WireTest, EmptyOptionsAreAnObject) {
  Corpus corpus(ludemic::testing::GamesDir());
  const Json g = GeometryJson(*corpus.Get("Tic-Tac-Toe"));
  EXPECT_TRUE(g["options"].is_object());
  EXPECT_EQ(g["edges"].size(), 12u);
  EXPECT_EQ(g["components"].size(), 3u);
  EXPECT_EQ(g["sites"][5]["label"], "c2");
}

TEST(WireTest, Catalog) {
  Corpus corpus(ludemic::testing::GamesDir());
  const Json c = CatalogJson(corpus);
  EXPECT_GE(c["games"].size(), 6u);
  bool hex = false;
  for (const Json& g : c["games"]) {
    EXPECT_FALSE(g.contains("error")) << g["name"];
    if (g["name"] == "Hex") {
      hex = true;
      EXPECT_EQ(g["options"][0]["name"], "Board Size");
      EXPECT_EQ(g["options"][0]["default"], "11x11");
      EXPECT_EQ(g["options"][1]["items"][1]["label"], "Misere");
    }
  }
  EXPECT_TRUE(hex);
  EXPECT_EQ(c["presets"].size(), 7u);
}

TEST(WireTest, ParseSessionConfig) {
  const SessionConfig c = ParseSessionConfig(Json::parse(R"({
    "game": "Hex", "options": {"Board Size": "9x9"},
    "players": [{"type": "human"}, {"type": "flat-mc", "budget": 50}],
    "seed": 9})"));
  EXPECT_EQ(c.game, "Hex");
  EXPECT_EQ(c.options.at("Board Size"), "9x9");
  ASSERT_EQ(c.controllers.size(), 2u);
  EXPECT_EQ(c.controllers[1].budget, 50);
  EXPECT_EQ(c.seed, 9u);
  for (const char* bad : {R"([])", R"({})", R"({"game": 3})",
                          R"({"game": "Hex", "options": {"a": 1}})",
                          R"({"game": "Hex", "players": [{"type": "robot"}]})",
                          R"({"game": "Hex", "players": [{"type": "flat-mc", "budget": "x"}]})",
                          R"({"game": "Hex", "seed": -1})"}) {
    try {
      ParseSessionConfig(Json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const ServiceError& e) {
      EXPECT_EQ(e.code(), "bad-request");
    }
  }
}

TEST(WireTest, Errors) {
  const Json e = ErrorJson("wrong-turn", "not yours");
  EXPECT_EQ(e["error"]["code"], "wrong-turn");
  EXPECT_EQ(e["error"]["message"], "not yours");
  EXPECT_EQ(HashString(0xabcULL), "0000000000000abc");
}

class HttpTest : public ::testing::Test {
 protected:
  HttpTest()
      : corpus_(ludemic::testing::GamesDir()),
        sessions_(corpus_),
        server_(sessions_, {"127.0.0.1", 0, 4}) {
    server_.Bind();
    thread_ = std::thread([this] { server_.Run(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", server_.port());
  }
  ~HttpTest() override {
    server_.Stop();
    thread_.join();
  }

  Json Body(const httplib::Result& r) {
    EXPECT_TRUE(r);
    return r ? Json::parse(r->body) : Json();
  }

  Json Post(const std::string& path, const Json& body, int expected_status) {
    auto r = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(r) << path;
    if (!r) return Json();
    EXPECT_EQ(r->status, expected_status) << path << " " << r->body;
    return Json::parse(r->body);
  }

  Corpus corpus_;
  SessionManager sessions_;
  Server server_;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpTest, HealthAndCatalog) {
  auto health = client_->Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(Body(health)["status"], "ok");
  EXPECT_EQ(health->get_header_value("Access-Control-Allow-Origin"), "*");
  auto games = client_->Get("/api/games");
  ASSERT_TRUE(games);
  EXPECT_GE(Body(games)["games"].size(), 6u);
}

TEST_F(HttpTest, PlayAFullGame) {
  const Json created = Post(
      "/api/sessions",
      {{"game", "Tic-Tac-Toe"},
       {"players", {{{"type", "human"}}, {{"type", "flat-mc"}, {"budget", 200}}}},
       {"seed", 4}},
      201);
  const std::string id = created["session"];
  EXPECT_EQ(created["geometry"]["sites"].size(), 9u);
  EXPECT_EQ(created["state"]["legalMoves"].size(), 9u);
  Json state = created["state"];
  int plies = 0;
  while (!state["terminal"].get<bool>()) {
    if (state["mover"] == 1) {
      const Json legal = state["legalMoves"];
      ASSERT_FALSE(legal.empty());
      state = Post("/api/sessions/" + id + "/move",
                   {{"index", legal.size() - 1}}, 200)["state"];
    } else {
      const Json reply = Post("/api/sessions/" + id + "/ai", Json::object(), 200);
      EXPECT_TRUE(reply.contains("move"));
      state = reply["state"];
    }
    ASSERT_LE(++plies, 11);
  }
  EXPECT_FALSE(state["scores"].is_null());
  auto fetched = client_->Get("/api/sessions/" + id);
  ASSERT_TRUE(fetched);
  EXPECT_EQ(Body(fetched)["state"]["hash"], state["hash"]);
}

TEST_F(HttpTest, ErrorCodes) {
  EXPECT_EQ(Post("/api/sessions", {{"game", "Chess"}}, 404)["error"]["code"],
            "unknown-game");
  EXPECT_EQ(Post("/api/sessions/s424242/move", {{"index", 0}}, 404)["error"]["code"],
            "unknown-session");
  const std::string id = Post("/api/sessions", {{"game", "Tic-Tac-Toe"}}, 201)["session"];
  const Json before = Body(client_->Get("/api/sessions/" + id));
  EXPECT_EQ(Post("/api/sessions/" + id + "/move", {{"index", 99}}, 400)["error"]["code"],
            "illegal-move");
  EXPECT_EQ(Post("/api/sessions/" + id + "/ai", Json::object(), 409)["error"]["code"],
            "wrong-turn");
  EXPECT_EQ(Post("/api/sessions/" + id + "/move", {{"index", "x"}}, 400)["error"]["code"],
            "bad-request");
  auto garbage = client_->Post("/api/sessions", "{not json", "application/json");
  ASSERT_TRUE(garbage);
  EXPECT_EQ(garbage->status, 400);
  EXPECT_EQ(Body(client_->Get("/api/sessions/" + id))["state"]["hash"],
            before["state"]["hash"]);
  auto missing = client_->Get("/api/nothing");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
}

TEST_F(HttpTest, OccupiedPortIsAnError) {
  Server second(sessions_, {"127.0.0.1", server_.port(), 1});
  EXPECT_THROW(second.Bind(), LudemicError);
}

}  // namespace
}  // namespace ludemic::service
