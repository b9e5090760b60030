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

#include "ludemic/compiler.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ludemic/engine.hpp"
#include "ludemic/error.hpp"
#include "ludemic/rules.hpp"
#include "test_util.hpp"

namespace ludemic {
namespace {

// Expects CompileError whose message contains `needle`.
void ExpectCompileError(const std::string& text, const std::string& needle,
                        int line = -1, int column = -1) {
  try {
    CompileDescription(text);
    ADD_FAILURE() << "compiled: " << text;
  } catch (const CompileError& e) {
    EXPECT_NE(e.message().find(needle), std::string::npos) << e.message();
    if (line >= 0) {
      EXPECT_EQ(e.line(), line);
    }
    if (column >= 0) {
      EXPECT_EQ(e.column(), column);
    }
  }
}

std::string Wrap(const std::string& players, const std::string& equipment,
                 const std::string& rules) {
  return "(game \"T\" " + players + " (equipment {" + equipment + "}) (rules " +
         rules + "))";
}

const char kBoard[] = "(board (square 3) (square)) (piece \"A\" P1) "
                      "(piece \"A\" P2)";

TEST(CompileTest, TicTacToeStructure) {
  const GamePtr game = testing::TicTacToe();
  EXPECT_EQ(game->name(), "Tic-Tac-Toe");
  EXPECT_EQ(game->num_players(), 2);
  EXPECT_EQ(game->num_sites(), 9);
  EXPECT_EQ(game->board().edges.size(), 12u);
  ASSERT_EQ(game->num_components(), 3);
  EXPECT_EQ(game->components()[1].name, "Disc");
  EXPECT_EQ(game->owner_of(1), 1);
  EXPECT_EQ(game->owner_of(2), 2);
  EXPECT_EQ(game->pieces_of(2), std::vector<int>{2});
  EXPECT_EQ(game->representation(), Representation::kUniformPieces);
  ASSERT_EQ(game->generators().size(), 1u);
  EXPECT_EQ(game->generators()[0].kind, GeneratorKind::kToEmpty);
  EXPECT_TRUE(game->placement_only());
  ASSERT_EQ(game->end_rules().size(), 2u);
  EXPECT_EQ(game->end_rules()[0].condition.kind, ConditionKind::kLine);
  EXPECT_EQ(game->end_rules()[0].condition.length, 3);
  EXPECT_EQ(game->end_rules()[0].outcome.result, ResultKind::kWin);
  EXPECT_EQ(game->end_rules()[1].condition.kind, ConditionKind::kAllPassed);
  EXPECT_EQ(game->end_rules()[1].outcome.result, ResultKind::kDraw);
  EXPECT_TRUE(game->start().empty());
  EXPECT_EQ(game->max_moves(), 450);
  EXPECT_EQ(game->SiteName(0), "a1");
  EXPECT_EQ(game->SiteName(8), "c3");
}

TEST(CompileTest, BreakthroughStructure) {
  const GamePtr game = testing::LoadGame("breakthrough.lud");
  EXPECT_EQ(game->num_sites(), 64);
  EXPECT_EQ(game->board().edges.size(), 210u);
  EXPECT_EQ(game->start().size(), 32u);
  ASSERT_EQ(game->generators().size(), 2u);
  const Generator& diagonal = game->generators()[1];
  EXPECT_EQ(diagonal.target, StepTarget::kEmptyOrEnemy);
  EXPECT_EQ(diagonal.directions[1],
            (std::vector<Direction>{Direction::kNW, Direction::kNE}));
  EXPECT_EQ(diagonal.directions[2],
            (std::vector<Direction>{Direction::kSE, Direction::kSW}));
  EXPECT_EQ(game->generators()[0].directions[2],
            std::vector<Direction>{Direction::kS});
  ASSERT_EQ(game->regions(1).size(), 1u);
  EXPECT_EQ(game->regions(1)[0].front(), 56);
  EXPECT_EQ(game->regions(2)[0].back(), 7);
  EXPECT_FALSE(game->placement_only());
}

TEST(CompileTest, OptionsAreRecorded) {
  const GamePtr standard = testing::LoadGame("hex.lud");
  EXPECT_EQ(standard->num_sites(), 121);
  EXPECT_EQ(standard->options(),
            (OptionSelection{{"Board Size", "11x11"}, {"End Rules", "Standard"}}));
  EXPECT_TRUE(standard->uses_connect());
  const GamePtr small =
      testing::LoadGame("hex.lud", {{"Board Size", "9x9"}, {"End Rules", "Misere"}});
  EXPECT_EQ(small->num_sites(), 81);
  EXPECT_EQ(small->options().at("End Rules"), "Misere");
  EXPECT_EQ(small->end_rules()[0].outcome.result, ResultKind::kLoss);
}

TEST(CompileTest, SourceTreeIsKept) {
  const std::string text = testing::GameFile("tic_tac_toe.lud");
  const GamePtr game = CompileDescription(text);
  EXPECT_EQ(game->source(), ParseDescription(text));
  EXPECT_EQ(CountTokens(game->source()), 26);
}

TEST(CompileErrorTest, UnknownLudeme) {
  ExpectCompileError(
      "(game \"T\"\n (players 2)\n (equipment {(board (square 3)) "
      "(piece \"A\" P1)})\n (rules (play (fly Mover))))",
      "unknown ludeme 'fly'", 4, 15);
}

TEST(CompileErrorTest, ArityMismatch) {
  ExpectCompileError(Wrap("(players 2)", kBoard, "(play (to Mover))"),
                     "arity mismatch: (to) takes 2 arguments, got 1");
  ExpectCompileError(Wrap("(players 2)", "(board (square 3 4)) (piece \"A\" P1)",
                          "(play (to Mover (empty)))"),
                     "arity mismatch: (square)");
}

TEST(CompileErrorTest, PlayersAndFlow) {
  ExpectCompileError(Wrap("(players 0)", kBoard, "(play (to Mover (empty)))"),
                     "player count < 1");
  ExpectCompileError(
      Wrap("(players 2 Simultaneous)", kBoard, "(play (to Mover (empty)))"),
      "unsupported flow: Simultaneous");
  ExpectCompileError(
      Wrap("(players 2 Realtime)", kBoard, "(play (to Mover (empty)))"),
      "unsupported flow: Realtime");
  ExpectCompileError(Wrap("(players 2)", "(board (square 3)) (piece \"A\" P3)",
                          "(play (to Mover (empty)))"),
                     "no such player P3");
}

TEST(CompileErrorTest, UnresolvedOptions) {
  const LudemeTree raw = ParseDescription(testing::GameFile("hex.lud"));
  try {
    Compile(raw);
    FAIL() << "compiled an unresolved option block";
  } catch (const CompileError& e) {
    EXPECT_NE(e.message().find("unresolved option block"), std::string::npos);
  }
  EXPECT_THROW(testing::LoadGame("hex.lud", {{"Board Size", "1x1"}}),
               CompileError);
}

TEST(CompileErrorTest, IllFormedRules) {
  const std::string play = "(play (to Mover (empty)))";
  ExpectCompileError(Wrap("(players 2)", kBoard, "(end (line 3))"),
                     "missing (play");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (line 3))"), "pairs");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (line 0) (result Mover Win))"),
      "line length");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (connect Mover) (result Mover Win))"),
      "connect needs");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (at 9) (result Mover Win))"),
      "off the board");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (at 1) (payoff {1}))"),
      "one utility per player");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (at 1) (payoff {2 0}))"),
      "outside [-1, 1]");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (at 1) (payoff {\"x\" 0}))"),
      "not a number");
  ExpectCompileError(
      Wrap("(players 2)", kBoard, play + " (end (line 3) (result Mover Glory))"),
      "unknown result");
  ExpectCompileError(Wrap("(players 2)", kBoard, "(play (step Up (empty)))"),
                     "unknown direction Up");
  ExpectCompileError(Wrap("(players 2)", kBoard, "(play (step NE (empty)))"),
                     "not an edge direction");
  ExpectCompileError(
      Wrap("(players 2)", "(board (hexagon 3) (hex)) (piece \"A\" P1)",
           "(play (step Forward (empty)))"),
      "relative directions");
  ExpectCompileError(Wrap("(players 2)", kBoard,
                          "(start {(place \"B\" P1 (site 0))}) " + play),
                     "no piece \"B\" for P1");
  ExpectCompileError(
      Wrap("(players 2)", "(board (square 3)) (piece \"A\" P1) (piece \"A\" P1)",
           play),
      "duplicate piece");
  ExpectCompileError("(game \"T\" (players 2) (rules " + play + "))",
                     "missing (equipment");
  ExpectCompileError(Wrap("(players 2)", "(board (tree {-1 -1}))", play),
                     "two roots");
  ExpectCompileError(Wrap("(players 2)", kBoard, "(play (descend {1 0 0}))"),
                     "descend needs a tree board");
  ExpectCompileError(Wrap("(players 2)", "(board (tree {-1 0 0}))",
                          "(play (descend {0 0 0}))"),
                     "internal vertices");
  ExpectCompileError(Wrap("(players 2)", "(board (hexagon 3))",
                          "(play (to Mover (lowest-empty)))"),
                     "lowest-empty needs a square board");
}

TEST(RepresentationTest, Selection) {
  const std::string play = "(play (to Mover (empty)))";
  EXPECT_EQ(CompileDescription(Wrap("(players 2)", kBoard, play))
                ->representation(),
            Representation::kUniformPieces);
  EXPECT_EQ(CompileDescription(
                Wrap("(players 2)",
                     "(board (square 3)) (piece \"A\" P1) (piece \"B\" P1)",
                     play))
                ->representation(),
            Representation::kDistinguishedPieces);
  EXPECT_EQ(CompileDescription(
                Wrap("(players 2)", kBoard,
                     "(start {(set-count (site 0) 3)}) " + play))
                ->representation(),
            Representation::kPieceCount);
  EXPECT_EQ(CompileDescription(
                Wrap("(players 2)", kBoard,
                     "(start {(set-state (row 0) 2)}) " + play))
                ->representation(),
            Representation::kPieceState);
  ExpectCompileError(
      Wrap("(players 2)", kBoard,
           "(start {(set-state (row 0) 2) (set-count (site 1) 2)}) " + play),
      "cannot be combined");
}

TEST(RepresentationTest, ForcingRules) {
  const std::string text = testing::GameFile("tic_tac_toe.lud");
  for (Representation r :
       {Representation::kUniformPieces, Representation::kDistinguishedPieces,
        Representation::kPieceCount, Representation::kPieceState}) {
    EXPECT_EQ(CompileDescription(text, {}, {r})->representation(), r);
  }
  EXPECT_THROW(CompileDescription(text, {}, {Representation::kStacking}),
               CompileError);
  EXPECT_THROW(
      CompileDescription(text, {}, {Representation::kHiddenInformation}),
      CompileError);
  const std::string counted =
      Wrap("(players 2)", kBoard,
           "(start {(set-count (site 0) 3)}) (play (to Mover (empty)))");
  EXPECT_THROW(
      CompileDescription(counted, {}, {Representation::kDistinguishedPieces}),
      CompileError);
  const std::string distinguished =
      Wrap("(players 2)", "(board (square 3)) (piece \"A\" P1) (piece \"B\" P1)",
           "(play (to Mover (empty)))");
  EXPECT_THROW(
      CompileDescription(distinguished, {}, {Representation::kUniformPieces}),
      CompileError);
}

// The same game behaves identically under every representation that can
// hold it: same legal moves, same hashes, same outcomes.
void ExpectRepresentationsAgree(const std::string& file, int games) {
  const std::vector<Representation> reps = {
      Representation::kUniformPieces, Representation::kDistinguishedPieces,
      Representation::kPieceCount, Representation::kPieceState};
  std::vector<GamePtr> compiled;
  for (Representation r : reps) {
    compiled.push_back(testing::LoadGame(file, {}, {r}));
  }
  for (int g = 0; g < games; ++g) {
    const Trial reference = RandomPlayout(*compiled[0], 100 + g);
    for (std::size_t i = 1; i < compiled.size(); ++i) {
      const Game& game = *compiled[i];
      GameState state = ApplyStart(game);
      EXPECT_EQ(state.Hash(), reference.initial.Hash());
      for (const TrialRecord& record : reference.records) {
        const auto ours = LegalMoves(game, state);
        ASSERT_FALSE(ours.empty());
        EXPECT_NE(std::find(ours.begin(), ours.end(), record.move), ours.end());
        ApplyMove(game, state, record.move);
        ASSERT_EQ(state.Hash(), record.hash)
            << file << " under " << RepresentationName(reps[i]);
      }
      EXPECT_TRUE(state.terminal());
      EXPECT_EQ(state.scores(), reference.scores());
      for (int site = 0; site < game.num_sites(); ++site) {
        EXPECT_EQ(state.Who(site), reference.final.Who(site));
        EXPECT_EQ(state.What(site), reference.final.What(site));
      }
    }
  }
}

TEST(RepresentationTest, TicTacToeAgrees) {
  ExpectRepresentationsAgree("tic_tac_toe.lud", 30);
}

TEST(RepresentationTest, BreakthroughAgrees) {
  ExpectRepresentationsAgree("breakthrough.lud", 10);
}

TEST(RepresentationTest, ConnectFourAgrees) {
  ExpectRepresentationsAgree("connect4.lud", 10);
}

TEST(ImmutabilityTest, RecompilingGivesIdenticalPlay) {
  const GamePtr a = testing::LoadGame("breakthrough.lud");
  const GamePtr b = testing::LoadGame("breakthrough.lud");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Trial ta = RandomPlayout(*a, seed);
    const Trial tb = RandomPlayout(*b, seed);
    ASSERT_EQ(ta.num_moves(), tb.num_moves());
    EXPECT_EQ(ta.final.Hash(), tb.final.Hash());
  }
  // Playing does not touch the definition.
  const std::vector<Action> start = a->start();
  RandomPlayout(*a, 99);
  EXPECT_EQ(a->start(), start);
}

}  // namespace
}  // namespace ludemic
