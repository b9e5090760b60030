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

#include "ludemic/service/wire.hpp"

#include <cstdio>

#include "ludemic/compiler.hpp"
#include "ludemic/rules.hpp"

namespace ludemic::service {
namespace {

std::string TilingName(Tiling t) {
  switch (t) {
    case Tiling::kSquare: return "square";
    case Tiling::kHex: return "hex";
    case Tiling::kGraph: return "graph";
  }
  return "graph";
}

Json Point(const ludemic::Point& p) { return Json::array({p.x, p.y}); }

}  // namespace

std::string HashString(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

Json GeometryJson(const Game& game) {
  const Container& board = game.board();
  Json sites = Json::array();
  for (int v = 0; v < board.num_sites(); ++v) {
    const Vertex& vx = board.vertices[v];
    Json polygon = Json::array();
    for (const auto& p : vx.polygon) polygon.push_back(Point(p));
    sites.push_back({{"index", v},
                     {"label", game.SiteName(v)},
                     {"centroid", Point(vx.centroid)},
                     {"polygon", std::move(polygon)},
                     {"row", vx.row},
                     {"column", vx.column}});
  }
  Json edges = Json::array();
  for (const auto& [u, v] : board.edges) edges.push_back(Json::array({u, v}));
  Json components = Json::array();
  for (const Component& c : game.components()) {
    components.push_back(
        {{"index", c.index}, {"name", c.name}, {"owner", c.owner}});
  }
  return {{"name", game.name()},
          {"players", game.num_players()},
          {"tiling", TilingName(board.tiling)},
          {"shape", board.shape},
          {"sites", std::move(sites)},
          {"edges", std::move(edges)},
          {"components", std::move(components)},
          {"options", game.options()}};
}

Json MoveJson(const Game& game, const Move& move) {
  Json actions = Json::array();
  for (const Action& a : move.actions()) {
    actions.push_back({{"type", ActionTypeName(a.type)},
                       {"site", a.site},
                       {"value", a.value}});
  }
  return {{"mover", move.mover()},
          {"description", DescribeMove(game, move)},
          {"from", move.from()},
          {"to", move.to()},
          {"pass", move.is_pass()},
          {"actions", std::move(actions)}};
}

Json ScoresJson(const ScoreVector& scores) {
  if (scores.empty()) return nullptr;
  return {{"kind", ResultKindName(scores.kind)},
          {"utilities", scores.utilities}};
}

Json ControllerJson(const Controller& c) {
  if (c.kind == Controller::Kind::kHuman) return {{"type", "human"}};
  return {{"type", "flat-mc"}, {"budget", c.budget}};
}

Json StateJson(const SessionView& view) {
  const Game& game = *view.game;
  const GameState& s = view.state;
  Json what = Json::array();
  Json who = Json::array();
  for (int v = 0; v < s.num_sites(); ++v) {
    what.push_back(s.What(v));
    who.push_back(s.Who(v));
  }
  Json legal = Json::array();
  for (std::size_t i = 0; i < view.legal.size(); ++i) {
    Json m = MoveJson(game, view.legal[i]);
    m["index"] = i;
    legal.push_back(std::move(m));
  }
  Json history = Json::array();
  for (const Move& m : view.history) history.push_back(MoveJson(game, m));
  Json controllers = Json::array();
  for (const Controller& c : view.controllers) {
    controllers.push_back(ControllerJson(c));
  }
  return {{"session", view.id},
          {"game", game.name()},
          {"mover", s.mover()},
          {"moveNumber", s.move_number()},
          {"terminal", s.terminal()},
          {"scores", ScoresJson(s.scores())},
          {"what", std::move(what)},
          {"who", std::move(who)},
          {"legalMoves", std::move(legal)},
          {"history", std::move(history)},
          {"controllers", std::move(controllers)},
          {"hash", HashString(s.Hash())}};
}

Json CatalogJson(Corpus& corpus) {
  Json games = Json::array();
  for (const Description& d : corpus.descriptions()) {
    Json options = Json::array();
    for (const OptionBlock& block : d.options) {
      Json items = Json::array();
      for (const OptionItem& item : block.items) {
        items.push_back(
            {{"label", item.label}, {"description", item.description}});
      }
      options.push_back({{"name", block.name},
                         {"default", block.items[block.default_item].label},
                         {"items", std::move(items)}});
    }
    Json entry = {{"name", d.name},
                  {"tokens", d.tokens},
                  {"options", std::move(options)}};
    try {
      entry["players"] = corpus.Get(d.name)->num_players();
    } catch (const LudemicError& e) {
      entry["error"] = e.what();
    }
    games.push_back(std::move(entry));
  }
  Json presets = Json::array();
  for (const Preset& p : BenchmarkPresets()) {
    if (corpus.Find(p.game) == nullptr) continue;
    presets.push_back(
        {{"label", p.label}, {"game", p.game}, {"options", p.options}});
  }
  return {{"games", std::move(games)}, {"presets", std::move(presets)}};
}

Json ErrorJson(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

SessionConfig ParseSessionConfig(const Json& body) {
  auto bad = [](const std::string& message) -> ServiceError {
    return ServiceError("bad-request", message);
  };
  if (!body.is_object()) throw bad("request body must be a JSON object");
  SessionConfig config;
  if (!body.contains("game") || !body["game"].is_string()) {
    throw bad("\"game\" must be a string");
  }
  config.game = body["game"].get<std::string>();
  if (body.contains("options")) {
    const Json& options = body["options"];
    if (!options.is_object()) throw bad("\"options\" must be an object");
    for (const auto& [name, item] : options.items()) {
      if (!item.is_string()) throw bad("option values must be strings");
      config.options[name] = item.get<std::string>();
    }
  }
  if (body.contains("players")) {
    const Json& players = body["players"];
    if (!players.is_array()) throw bad("\"players\" must be an array");
    for (const Json& p : players) {
      if (!p.is_object() || !p.contains("type") || !p["type"].is_string()) {
        throw bad("each player needs a \"type\"");
      }
      const std::string type = p["type"].get<std::string>();
      if (type == "human") {
        config.controllers.push_back(Controller::Human());
      } else if (type == "flat-mc") {
        int budget = 1000;
        if (p.contains("budget")) {
          if (!p["budget"].is_number_integer()) {
            throw bad("\"budget\" must be an integer");
          }
          budget = p["budget"].get<int>();
        }
        config.controllers.push_back(Controller::FlatMonteCarlo(budget));
      } else {
        throw bad("unknown player type \"" + type + "\"");
      }
    }
  }
  if (body.contains("seed")) {
    if (!body["seed"].is_number_unsigned()) {
      throw bad("\"seed\" must be a non-negative integer");
    }
    config.seed = body["seed"].get<std::uint64_t>();
  }
  return config;
}

}  // namespace ludemic::service
