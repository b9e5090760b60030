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
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ludemic/container.hpp"
#include "ludemic/error.hpp"

namespace ludemic {
namespace {

using Node = LudemeNode;

[[noreturn]] void Fail(const Node& at, const std::string& message) {
  throw CompileError(message, at.line, at.column);
}

std::string Describe(const Node& n) {
  switch (n.kind) {
    case Node::Kind::kCall: return "(" + n.text + " ...)";
    case Node::Kind::kList: return "list";
    case Node::Kind::kString: return "\"" + n.text + "\"";
    default: return n.text;
  }
}

void Arity(const Node& call, std::size_t min, std::size_t max) {
  const std::size_t n = call.children.size();
  if (n < min || n > max) {
    std::string expected = std::to_string(min);
    if (max != min) expected += ".." + std::to_string(max);
    Fail(call, "arity mismatch: (" + call.text + ") takes " + expected +
                   " argument" + (max == 1 ? "" : "s") + ", got " +
                   std::to_string(n));
  }
}

int Int(const Node& n, const std::string& what) {
  if (n.kind != Node::Kind::kInteger) {
    Fail(n, what + " must be an integer, got " + Describe(n));
  }
  if (n.integer < -1'000'000 || n.integer > 1'000'000) {
    Fail(n, what + " is out of range");
  }
  return static_cast<int>(n.integer);
}

const std::string& Str(const Node& n, const std::string& what) {
  if (n.kind != Node::Kind::kString) {
    Fail(n, what + " must be a string, got " + Describe(n));
  }
  return n.text;
}

// Arguments of a node that is either a list or a single item.
std::vector<const Node*> Items(const Node& n) {
  std::vector<const Node*> out;
  if (n.is_list()) {
    for (const Node& c : n.children) out.push_back(&c);
  } else {
    out.push_back(&n);
  }
  return out;
}

[[noreturn]] void Unknown(const Node& n, const std::string& context) {
  if (n.is_call()) Fail(n, "unknown ludeme '" + n.text + "' in " + context);
  Fail(n, "unexpected " + Describe(n) + " in " + context);
}

class Compiler {
 public:
  explicit Compiler(const LudemeTree& tree) : tree_(tree) {}

  GameDefinition Run() {
    if (!tree_.is_call("game")) Fail(tree_, "root must be a (game ...) call");
    if (tree_.children.empty() ||
        tree_.children[0].kind != Node::Kind::kString) {
      Fail(tree_, "game must start with its name as a string");
    }
    def_.name = tree_.children[0].text;
    const Node* players = nullptr;
    const Node* equipment = nullptr;
    const Node* rules = nullptr;
    for (std::size_t i = 1; i < tree_.children.size(); ++i) {
      const Node& c = tree_.children[i];
      const Node** slot = nullptr;
      if (c.is_call("players")) {
        slot = &players;
      } else if (c.is_call("equipment")) {
        slot = &equipment;
      } else if (c.is_call("rules")) {
        slot = &rules;
      } else if (c.is_call("option")) {
        Fail(c, "unresolved option block '" +
                    (c.children.empty() ? std::string() : c.children[0].text) +
                    "'");
      } else {
        Unknown(c, "game");
      }
      if (*slot != nullptr) Fail(c, "duplicate (" + c.text + ")");
      *slot = &c;
    }
    if (players == nullptr) Fail(tree_, "missing (players ...)");
    if (equipment == nullptr) Fail(tree_, "missing (equipment ...)");
    if (rules == nullptr) Fail(tree_, "missing (rules ...)");
    CompilePlayers(*players);
    CompileEquipment(*equipment);
    CompileRules(*rules);
    def_.source = tree_;
    return std::move(def_);
  }

 private:
  int k() const { return def_.players.count; }
  const Container& board() const { return def_.containers.front(); }

  void CompilePlayers(const Node& n) {
    Arity(n, 1, 2);
    const int count = Int(n.children[0], "player count");
    if (count < 1) Fail(n.children[0], "player count < 1");
    if (count > 16) Fail(n.children[0], "player count > 16 is not supported");
    def_.players.count = count;
    if (n.children.size() == 2) {
      const Node& flow = n.children[1];
      if (flow.is_identifier("Alternating")) {
        def_.players.flow = Flow::kAlternating;
      } else if (flow.is_identifier("Simultaneous") ||
                 flow.is_identifier("Realtime")) {
        Fail(flow, "unsupported flow: " + flow.text);
      } else {
        Fail(flow, "unknown flow " + Describe(flow));
      }
    }
    def_.regions.assign(count + 1, {});
  }

  int Player(const Node& n) const {
    if (n.kind == Node::Kind::kIdentifier && n.text.size() >= 2 &&
        n.text[0] == 'P') {
      int p = 0;
      const char* first = n.text.data() + 1;
      const char* last = n.text.data() + n.text.size();
      auto [ptr, ec] = std::from_chars(first, last, p);
      if (ec == std::errc() && ptr == last) {
        if (p < 1 || p > k()) Fail(n, "no such player " + n.text);
        return p;
      }
    }
    Fail(n, "expected a player such as P1, got " + Describe(n));
  }

  void CompileEquipment(const Node& n) {
    Arity(n, 1, 1);
    if (!n.children[0].is_list()) Fail(n, "equipment takes a list of items");
    def_.components.push_back({0, "", 0});
    std::vector<const Node*> regions;
    for (const Node& item : n.children[0].children) {
      if (item.is_call("board")) {
        if (!def_.containers.empty()) Fail(item, "only one board is supported");
        def_.containers.push_back(CompileBoard(item));
      } else if (item.is_call("piece")) {
        Arity(item, 2, 2);
        const std::string& name = Str(item.children[0], "piece name");
        const int owner = Player(item.children[1]);
        for (const Component& c : def_.components) {
          if (c.index > 0 && c.name == name && c.owner == owner) {
            Fail(item, "duplicate piece \"" + name + "\" for " +
                           item.children[1].text);
          }
        }
        def_.components.push_back(
            {static_cast<int>(def_.components.size()), name, owner});
      } else if (item.is_call("regions")) {
        regions.push_back(&item);
      } else {
        Unknown(item, "equipment");
      }
    }
    if (def_.containers.empty()) Fail(n, "equipment needs a (board ...)");
    if (def_.components.size() > 256) Fail(n, "too many pieces");
    for (const Node* r : regions) {
      Arity(*r, 2, 2);
      const int p = Player(r->children[0]);
      if (!r->children[1].is_list()) Fail(*r, "regions takes a list of sets");
      for (const Node& set : r->children[1].children) {
        std::vector<int> sites = Sites(set);
        for (int site : sites) {
          if (site < 0 || site >= board().num_sites()) {
            Fail(set, "region site " + std::to_string(site) +
                          " is off the board");
          }
        }
        def_.regions[p].push_back(std::move(sites));
      }
      if (def_.regions[p].size() > 32) Fail(*r, "at most 32 region sets");
    }
  }

  Container CompileBoard(const Node& n) {
    Arity(n, 1, 2);
    const Node& shape = n.children[0];
    const Node* tiling = n.children.size() == 2 ? &n.children[1] : nullptr;
    auto positive = [](const Node& arg, const std::string& what, int max) {
      const int v = Int(arg, what);
      if (v < 1) Fail(arg, what + " must be at least 1");
      if (v > max) Fail(arg, what + " exceeds " + std::to_string(max));
      return v;
    };
    if (shape.is_call("square") || shape.is_call("rectangle")) {
      SquareAdjacency adjacency = SquareAdjacency::kOrthogonal;
      if (tiling != nullptr) {
        if (!tiling->is_call("square")) {
          Fail(*tiling, "a square board needs a (square) tiling");
        }
        Arity(*tiling, 0, 1);
        if (tiling->children.size() == 1) {
          if (!tiling->children[0].is_identifier("Diagonal")) {
            Fail(tiling->children[0], "unknown square tiling option " +
                                          Describe(tiling->children[0]));
          }
          adjacency = SquareAdjacency::kOrthogonalDiagonal;
        }
      }
      if (shape.is_call("square")) {
        Arity(shape, 1, 1);
        return BuildSquareGraph(positive(shape.children[0], "board size", 64),
                                adjacency);
      }
      Arity(shape, 2, 2);
      return BuildRectangleGraph(positive(shape.children[0], "rows", 64),
                                 positive(shape.children[1], "columns", 64),
                                 adjacency);
    }
    if (shape.is_call("rhombus") || shape.is_call("hexagon")) {
      if (tiling != nullptr) {
        if (!tiling->is_call("hex")) {
          Fail(*tiling, "a hex board needs a (hex) tiling");
        }
        Arity(*tiling, 0, 0);
      }
      Arity(shape, 1, 1);
      if (shape.is_call("rhombus")) {
        return BuildHexGraph(
            HexShape::Rhombus(positive(shape.children[0], "board size", 64)));
      }
      return BuildHexGraph(
          HexShape::Hexagon(positive(shape.children[0], "board size", 32)));
    }
    if (shape.is_call("tree")) {
      if (tiling != nullptr) Fail(*tiling, "a tree board takes no tiling");
      Arity(shape, 1, 1);
      if (!shape.children[0].is_list()) {
        Fail(shape, "tree takes a list of parent indices");
      }
      std::vector<int> parents;
      for (const Node& p : shape.children[0].children) {
        parents.push_back(Int(p, "parent index"));
      }
      if (parents.empty()) Fail(shape, "a tree needs at least one vertex");
      try {
        return BuildTreeGraph(parents);
      } catch (const std::invalid_argument& e) {
        Fail(shape, e.what());
      }
    }
    Unknown(shape, "board");
  }

  std::vector<int> Sites(const Node& n) const {
    std::set<int> out;
    AddSites(n, out);
    return {out.begin(), out.end()};
  }

  void AddSites(const Node& n, std::set<int>& out) const {
    const Container& b = board();
    if (n.is_list()) {
      for (const Node& c : n.children) AddSites(c, out);
      return;
    }
    if (n.is_call("site")) {
      Arity(n, 1, 1);
      out.insert(Int(n.children[0], "site"));
    } else if (n.is_call("sites")) {
      Arity(n, 1, 1);
      if (!n.children[0].is_list()) Fail(n, "sites takes a list");
      for (const Node& c : n.children[0].children) out.insert(Int(c, "site"));
    } else if (n.is_call("row") || n.is_call("col")) {
      Arity(n, 1, 1);
      const int index = Int(n.children[0], n.text + " index");
      bool any = false;
      for (int v = 0; v < b.num_sites(); ++v) {
        const Vertex& vx = b.vertices[v];
        if ((n.text == "row" ? vx.row : vx.column) == index) {
          out.insert(v);
          any = true;
        }
      }
      if (!any) Fail(n, "no " + n.text + " " + std::to_string(index));
    } else if (n.is_call("side")) {
      Arity(n, 1, 1);
      const Node& name = n.children[0];
      if (name.kind != Node::Kind::kIdentifier) Fail(name, "expected a side");
      auto it = b.pregen.sides.find(name.text);
      if (it == b.pregen.sides.end()) {
        Fail(name, "the board has no side " + name.text);
      }
      out.insert(it->second.begin(), it->second.end());
    } else if (n.is_call("corners")) {
      Arity(n, 0, 0);
      out.insert(b.pregen.corners.begin(), b.pregen.corners.end());
    } else if (n.is_call("all-sites")) {
      Arity(n, 0, 0);
      for (int v = 0; v < b.num_sites(); ++v) out.insert(v);
    } else {
      Unknown(n, "site expression");
    }
  }

  void CompileRules(const Node& n) {
    const Node* start = nullptr;
    const Node* play = nullptr;
    const Node* end = nullptr;
    for (const Node& c : n.children) {
      const Node** slot = nullptr;
      if (c.is_call("start")) {
        slot = &start;
      } else if (c.is_call("play")) {
        slot = &play;
      } else if (c.is_call("end")) {
        slot = &end;
      } else {
        Unknown(c, "rules");
      }
      if (*slot != nullptr) Fail(c, "duplicate (" + c.text + ")");
      *slot = &c;
    }
    if (play == nullptr) Fail(n, "missing (play ...)");
    if (start != nullptr) CompileStart(*start);
    CompilePlay(*play);
    if (end != nullptr) CompileEnd(*end);
  }

  int PieceIndex(const Node& name_node, int owner) const {
    const std::string& name = Str(name_node, "piece name");
    for (const Component& c : def_.components) {
      if (c.index > 0 && c.name == name && c.owner == owner) return c.index;
    }
    Fail(name_node, "no piece \"" + name + "\" for P" + std::to_string(owner));
  }

  void CompileStart(const Node& n) {
    for (const Node& arg : n.children) {
      for (const Node* item : Items(arg)) {
        if (item->is_call("place")) {
          Arity(*item, 3, 3);
          const int owner = Player(item->children[1]);
          const int piece = PieceIndex(item->children[0], owner);
          for (int site : Sites(item->children[2])) {
            def_.start.push_back(Action::Place(piece, site));
          }
        } else if (item->is_call("set-count") || item->is_call("set-state")) {
          Arity(*item, 2, 2);
          const int value = Int(item->children[1], "value");
          const bool count = item->is_call("set-count");
          (count ? uses_count_ : uses_state_) = true;
          for (int site : Sites(item->children[0])) {
            def_.start.push_back(count ? Action::SetCount(site, value)
                                       : Action::SetPieceState(site, value));
          }
        } else if (item->is_call("set-mover")) {
          Arity(*item, 1, 1);
          def_.start.push_back(Action::SetMover(Player(item->children[0])));
        } else {
          Unknown(*item, "start");
        }
      }
    }
  }

  void CompilePlay(const Node& n) {
    if (n.children.empty()) Fail(n, "play needs at least one generator");
    for (const Node& arg : n.children) {
      for (const Node* g : Items(arg)) def_.generators.push_back(Gen(*g));
    }
  }

  Generator Gen(const Node& n) {
    Generator g;
    g.label = n.text;
    if (n.is_call("to")) {
      Arity(n, 2, 2);
      if (!n.children[0].is_identifier("Mover")) {
        Fail(n.children[0], "(to) only supports Mover");
      }
      const Node& where = n.children[1];
      if (where.is_call("empty")) {
        Arity(where, 0, 0);
        g.kind = GeneratorKind::kToEmpty;
      } else if (where.is_call("lowest-empty")) {
        Arity(where, 0, 0);
        if (board().tiling != Tiling::kSquare) {
          Fail(where, "lowest-empty needs a square board");
        }
        g.kind = GeneratorKind::kToLowestEmpty;
      } else {
        Unknown(where, "to");
      }
      g.label = "to " + where.text;
      return g;
    }
    if (n.is_call("step")) {
      Arity(n, 2, 2);
      g.kind = GeneratorKind::kStep;
      g.directions.assign(k() + 1, {});
      for (const Node* d : Items(n.children[0])) AddDirections(*d, g);
      const Node& target = n.children[1];
      if (target.is_call("empty")) {
        g.target = StepTarget::kEmpty;
      } else if (target.is_call("enemy")) {
        g.target = StepTarget::kEnemy;
      } else if (target.is_call("empty-or-enemy")) {
        g.target = StepTarget::kEmptyOrEnemy;
      } else {
        Unknown(target, "step");
      }
      Arity(target, 0, 0);
      return g;
    }
    if (n.is_call("descend")) {
      Arity(n, 1, 1);
      g.kind = GeneratorKind::kDescend;
      if (board().tiling != Tiling::kGraph || board().pregen.parent.empty()) {
        Fail(n, "descend needs a tree board");
      }
      if (!n.children[0].is_list()) Fail(n, "descend takes a list of players");
      const auto& controls = n.children[0].children;
      if (static_cast<int>(controls.size()) != board().num_sites()) {
        Fail(n, "descend needs one control entry per vertex");
      }
      for (std::size_t v = 0; v < controls.size(); ++v) {
        const int p = Int(controls[v], "control");
        const bool leaf = board().pregen.children[v].empty();
        if (leaf ? p != 0 : (p < 1 || p > k())) {
          Fail(controls[v], leaf ? "leaves must have control 0"
                                 : "internal vertices need a player in 1..k");
        }
        g.control.push_back(p);
      }
      return g;
    }
    Unknown(n, "play");
  }

  void AddDirections(const Node& n, Generator& g) const {
    if (n.kind != Node::Kind::kIdentifier) Fail(n, "expected a direction");
    const PregenData& pregen = board().pregen;
    auto add = [&](int player, Direction d) {
      if (std::find(pregen.edge_directions.begin(),
                    pregen.edge_directions.end(),
                    d) == pregen.edge_directions.end()) {
        Fail(n, "direction " + std::string(DirectionName(d)) +
                    " is not an edge direction of this board");
      }
      auto& list = g.directions[player];
      if (std::find(list.begin(), list.end(), d) == list.end()) {
        list.push_back(d);
      }
    };
    if (n.text == "Adjacent") {
      for (int p = 1; p <= k(); ++p) {
        for (Direction d : pregen.edge_directions) add(p, d);
      }
      return;
    }
    if (auto d = ParseDirection(n.text)) {
      for (int p = 1; p <= k(); ++p) add(p, *d);
      return;
    }
    // Relative directions: P1 faces north, P2 south.
    static const std::pair<const char*, int> kRelative[] = {
        {"Forward", 0},   {"ForwardRight", 1}, {"Right", 2},
        {"BackwardRight", 3}, {"Backward", 4}, {"BackwardLeft", 5},
        {"Left", 6},      {"ForwardLeft", 7},
    };
    for (const auto& [name, offset] : kRelative) {
      if (n.text != name) continue;
      if (board().tiling != Tiling::kSquare || k() != 2) {
        Fail(n, "relative directions need a square board and two players");
      }
      add(1, static_cast<Direction>(offset));
      add(2, static_cast<Direction>((offset + 4) % kNumDirections));
      return;
    }
    Fail(n, "unknown direction " + n.text);
  }

  void CompileEnd(const Node& n) {
    if (n.children.size() % 2 != 0) {
      Fail(n, "end takes condition/outcome pairs");
    }
    for (std::size_t i = 0; i < n.children.size(); i += 2) {
      EndRule rule;
      rule.condition = Condition(n.children[i]);
      rule.outcome = Outcome(n.children[i + 1]);
      def_.end.push_back(std::move(rule));
    }
  }

  EndCondition Condition(const Node& n) {
    EndCondition c;
    auto mover_only = [&] {
      Arity(n, 1, 1);
      if (!n.children[0].is_identifier("Mover")) {
        Fail(n.children[0], "(" + n.text + ") only supports Mover");
      }
    };
    if (n.is_call("line")) {
      Arity(n, 1, 1);
      c.kind = ConditionKind::kLine;
      c.length = Int(n.children[0], "line length");
      if (c.length < 1) Fail(n.children[0], "line length must be at least 1");
    } else if (n.is_call("connect")) {
      mover_only();
      c.kind = ConditionKind::kConnect;
      for (int p = 1; p <= k(); ++p) {
        if (def_.regions[p].size() < 2) {
          Fail(n, "connect needs at least two regions for every player");
        }
      }
    } else if (n.is_call("reach")) {
      mover_only();
      c.kind = ConditionKind::kReach;
      for (int p = 1; p <= k(); ++p) {
        if (def_.regions[p].empty()) {
          Fail(n, "reach needs a region for every player");
        }
      }
    } else if (n.is_call("no-moves")) {
      Arity(n, 0, 0);
      c.kind = ConditionKind::kNoMoves;
    } else if (n.is_call("board-full")) {
      Arity(n, 0, 0);
      c.kind = ConditionKind::kBoardFull;
    } else if (n.is_call("all-passed")) {
      Arity(n, 0, 0);
      c.kind = ConditionKind::kAllPassed;
    } else if (n.is_call("at")) {
      Arity(n, 1, 1);
      c.kind = ConditionKind::kAt;
      c.site = Int(n.children[0], "site");
      if (c.site < 0 || c.site >= board().num_sites()) {
        Fail(n.children[0], "site " + std::to_string(c.site) +
                                " is off the board");
      }
    } else {
      Unknown(n, "end");
    }
    return c;
  }

  double Utility(const Node& n) const {
    double v = 0;
    if (n.kind == Node::Kind::kInteger) {
      v = static_cast<double>(n.integer);
    } else if (n.kind == Node::Kind::kString) {
      const char* first = n.text.data();
      const char* last = first + n.text.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        Fail(n, "payoff \"" + n.text + "\" is not a number");
      }
    } else {
      Fail(n, "payoff entries must be integers or decimal strings");
    }
    if (v < -1 || v > 1) Fail(n, "payoff " + n.text + " is outside [-1, 1]");
    return v;
  }

  EndOutcome Outcome(const Node& n) {
    EndOutcome o;
    if (n.is_call("payoff")) {
      Arity(n, 1, 1);
      if (!n.children[0].is_list()) Fail(n, "payoff takes a list of utilities");
      for (const Node& v : n.children[0].children) {
        o.payoff.push_back(Utility(v));
      }
      if (static_cast<int>(o.payoff.size()) != k()) {
        Fail(n, "payoff needs one utility per player");
      }
      o.result = ResultKind::kPayoff;
      return o;
    }
    if (!n.is_call("result")) Unknown(n, "end outcome");
    Arity(n, 2, 2);
    const Node& role = n.children[0];
    if (role.is_identifier("Mover")) {
      o.role.kind = RoleRef::Kind::kMover;
    } else if (role.is_identifier("Next")) {
      o.role.kind = RoleRef::Kind::kNext;
    } else {
      o.role.kind = RoleRef::Kind::kPlayer;
      o.role.player = Player(role);
    }
    static const std::pair<const char*, ResultKind> kResults[] = {
        {"Win", ResultKind::kWin},   {"Loss", ResultKind::kLoss},
        {"Draw", ResultKind::kDraw}, {"Tie", ResultKind::kTie},
        {"Abort", ResultKind::kAbort},
    };
    const Node& kind = n.children[1];
    for (const auto& [name, result] : kResults) {
      if (kind.is_identifier(name)) {
        o.result = result;
        return o;
      }
    }
    Fail(kind, "unknown result " + Describe(kind));
  }

 public:
  bool uses_count_ = false;
  bool uses_state_ = false;

 private:
  const LudemeTree& tree_;
  GameDefinition def_;
};

bool Implemented(Representation r) {
  return r == Representation::kUniformPieces ||
         r == Representation::kDistinguishedPieces ||
         r == Representation::kPieceCount ||
         r == Representation::kPieceState;
}

}  // namespace

Representation SelectRepresentation(const GameDefinition& definition) {
  for (const Action& a : definition.start) {
    if (a.type == ActionType::kSetCount) return Representation::kPieceCount;
  }
  for (const Action& a : definition.start) {
    if (a.type == ActionType::kSetPieceState) {
      return Representation::kPieceState;
    }
  }
  std::vector<int> per_player(definition.players.count + 1, 0);
  for (const Component& c : definition.components) {
    if (c.index > 0 && ++per_player[c.owner] > 1) {
      return Representation::kDistinguishedPieces;
    }
  }
  return Representation::kUniformPieces;
}

namespace {

GameDefinition Define(const LudemeTree& tree, const CompileOptions& options) {
  Compiler compiler(tree);
  GameDefinition def = compiler.Run();
  if (compiler.uses_count_ && compiler.uses_state_) {
    Fail(tree, "counts and piece states cannot be combined");
  }
  def.representation = SelectRepresentation(def);
  if (options.representation) {
    const Representation forced = *options.representation;
    if (!Implemented(forced)) {
      Fail(tree, "representation " + std::string(RepresentationName(forced)) +
                     " is not supported");
    }
    const Representation chosen = def.representation;
    if ((chosen == Representation::kPieceCount ||
         chosen == Representation::kPieceState) && forced != chosen) {
      Fail(tree, "representation " + std::string(RepresentationName(forced)) +
                     " cannot hold this game's state");
    }
    if (chosen == Representation::kDistinguishedPieces &&
        forced == Representation::kUniformPieces) {
      Fail(tree, "uniform pieces cannot hold this game's state");
    }
    def.representation = forced;
  }
  return def;
}

}  // namespace

GamePtr Compile(const LudemeTree& tree, const CompileOptions& options) {
  return std::make_shared<const Game>(Define(tree, options));
}

GamePtr CompileDescription(std::string_view text,
                           const OptionSelection& selection,
                           const CompileOptions& options) {
  const LudemeTree tree = ParseDescription(text);
  OptionSelection full;
  for (const OptionBlock& block : ListOptions(tree)) {
    full[block.name] = block.items[block.default_item].label;
  }
  const LudemeTree resolved = ResolveOptions(tree, selection);
  for (const auto& [name, item] : selection) full[name] = item;
  GameDefinition def = Define(resolved, options);
  def.options = std::move(full);
  return std::make_shared<const Game>(std::move(def));
}

}  // namespace ludemic
