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

#include "ludemic/universality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <system_error>

#include "ludemic/compiler.hpp"
#include "ludemic/error.hpp"
#include "ludemic/random.hpp"
#include "ludemic/rules.hpp"

namespace ludemic {

void ExtensiveTree::Link() {
  for (Node& n : nodes) n.children.clear();
  root = -1;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const int p = nodes[i].parent;
    if (p < 0) {
      if (root >= 0) throw LudemicError("tree has more than one root");
      root = i;
    } else {
      if (p >= static_cast<int>(nodes.size())) {
        throw LudemicError("node " + nodes[i].id + " has an unknown parent");
      }
      nodes[p].children.push_back(i);
    }
  }
  if (root < 0) throw LudemicError("tree has no root");
}

void ExtensiveTree::Validate() const {
  if (num_players < 1) throw LudemicError("player count < 1");
  if (nodes.empty()) throw LudemicError("tree has no nodes");
  if (root < 0 || root >= static_cast<int>(nodes.size()) ||
      nodes[root].parent != -1) {
    throw LudemicError("tree root is not linked");
  }
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : nodes[v].children) {
      if (seen[c]) throw LudemicError("tree contains a cycle");
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  if (reached != nodes.size()) {
    throw LudemicError("tree has nodes unreachable from the root");
  }
  for (const Node& n : nodes) {
    if (!n.is_leaf()) {
      if (n.control == 0) {
        throw LudemicError("internal node " + n.id +
                           " is controlled by nature");
      }
      if (n.control < 1 || n.control > num_players) {
        throw LudemicError("internal node " + n.id +
                           " has no valid controlling player");
      }
      if (!n.payoff.empty()) {
        throw LudemicError("internal node " + n.id + " carries a payoff");
      }
    } else {
      if (static_cast<int>(n.payoff.size()) != num_players) {
        throw LudemicError("leaf " + n.id + " needs " +
                           std::to_string(num_players) + " payoffs");
      }
      for (double u : n.payoff) {
        if (!std::isfinite(u) || u < -1 || u > 1) {
          throw LudemicError("leaf " + n.id + " has a payoff outside [-1, 1]");
        }
      }
    }
  }
}

int ExtensiveTree::depth() const {
  int best = 0;
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (int c : nodes[v].children) stack.emplace_back(c, d + 1);
  }
  return best;
}

int ExtensiveTree::num_leaves() const {
  return static_cast<int>(std::count_if(
      nodes.begin(), nodes.end(), [](const Node& n) { return n.is_leaf(); }));
}

namespace {

std::string ShortestDouble(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double ParseDouble(const std::string& text, int line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw SyntaxError("bad payoff value '" + text + "'", line, 0);
  }
  return v;
}

}  // namespace

ExtensiveTree ParseTree(std::string_view text) {
  ExtensiveTree tree;
  tree.num_players = 0;
  std::map<std::string, int> index;
  std::vector<std::pair<std::string, int>> parents;  // parent id, line
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty() || w[0][0] == '#') continue;
    auto fail = [line](const std::string& message) {
      throw SyntaxError(message, line, 0);
    };
    if (w[0] == "players") {
      if (w.size() != 2) fail("expected: players <k>");
      if (tree.num_players != 0) fail("duplicate players line");
      int k = 0;
      auto [ptr, ec] = std::from_chars(w[1].data(), w[1].data() + w[1].size(), k);
      if (ec != std::errc() || ptr != w[1].data() + w[1].size() || k < 1) {
        fail("player count must be a positive integer");
      }
      tree.num_players = k;
      continue;
    }
    const bool leaf = w[0] == "leaf";
    if (!leaf && w[0] != "node") fail("unknown record '" + w[0] + "'");
    if (w.size() < 4 || w[2] != "parent") {
      fail("expected: " + w[0] + " <id> parent <id|-> ...");
    }
    ExtensiveTree::Node node;
    node.id = w[1];
    if (index.count(node.id)) fail("duplicate id " + node.id);
    if (leaf) {
      if (w.size() < 5 || w[4] != "payoff") fail("expected payoff values");
      for (std::size_t i = 5; i < w.size(); ++i) {
        node.payoff.push_back(ParseDouble(w[i], line));
      }
      if (node.payoff.empty()) fail("leaf " + node.id + " has no payoff");
    } else {
      if (w.size() != 6 || w[4] != "control") fail("expected: control <p>");
      auto [ptr, ec] =
          std::from_chars(w[5].data(), w[5].data() + w[5].size(), node.control);
      if (ec != std::errc() || ptr != w[5].data() + w[5].size()) {
        fail("control must be an integer");
      }
    }
    index[node.id] = static_cast<int>(tree.nodes.size());
    parents.emplace_back(w[3], line);
    tree.nodes.push_back(std::move(node));
  }
  if (tree.num_players == 0) throw SyntaxError("missing players line", 0, 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& [parent, at] = parents[i];
    if (parent == "-") continue;
    auto it = index.find(parent);
    if (it == index.end()) {
      throw SyntaxError("unknown parent '" + parent + "'", at, 0);
    }
    tree.nodes[i].parent = it->second;
  }
  tree.Link();
  for (const auto& n : tree.nodes) {
    if (n.is_leaf() && n.payoff.empty()) {
      throw LudemicError("node " + n.id + " has no children");
    }
  }
  tree.Validate();
  return tree;
}

std::string FormatTree(const ExtensiveTree& tree) {
  std::string out = "players " + std::to_string(tree.num_players) + "\n";
  for (const auto& n : tree.nodes) {
    const std::string parent = n.parent < 0 ? "-" : tree.nodes[n.parent].id;
    if (n.is_leaf()) {
      out += "leaf " + n.id + " parent " + parent + " payoff";
      for (double u : n.payoff) out += " " + ShortestDouble(u);
    } else {
      out += "node " + n.id + " parent " + parent + " control " +
             std::to_string(n.control);
    }
    out += "\n";
  }
  return out;
}

ExtensiveTree RandomTree(std::uint64_t seed, const RandomTreeConfig& config) {
  Rng rng(seed);
  ExtensiveTree tree;
  tree.num_players = 1 + static_cast<int>(rng.Below(config.max_players));
  auto utility = [&rng] {
    // Mix of exact outcomes and arbitrary doubles in [-1, 1].
    switch (rng.Below(4)) {
      case 0: return -1.0;
      case 1: return 0.0;
      case 2: return 1.0;
      default:
        return static_cast<double>(rng.Next() >> 11) * 0x1.0p-52 - 1.0;
    }
  };
  struct Pending {
    int parent;
    int depth;
  };
  std::vector<Pending> queue{{-1, 0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [parent, depth] = queue[head];
    ExtensiveTree::Node node;
    node.id = "n" + std::to_string(head);
    node.parent = parent;
    const double coin = static_cast<double>(rng.Next() >> 11) * 0x1.0p-53;
    const bool leaf = depth >= config.max_depth ||
                      (depth > 0 && coin < config.leaf_probability);
    if (leaf) {
      for (int p = 0; p < tree.num_players; ++p) {
        node.payoff.push_back(utility());
      }
    } else {
      node.control = 1 + static_cast<int>(rng.Below(tree.num_players));
      const int branching = 1 + static_cast<int>(rng.Below(config.max_branching));
      for (int c = 0; c < branching; ++c) {
        queue.push_back({static_cast<int>(head), depth + 1});
      }
    }
    tree.nodes.push_back(std::move(node));
  }
  tree.Link();
  return tree;
}

LudemeTree TreeToLudemes(const ExtensiveTree& tree, const std::string& name) {
  tree.Validate();
  using N = LudemeNode;
  const int n = static_cast<int>(tree.nodes.size());
  std::vector<N> parents;
  std::vector<N> controls;
  for (const auto& node : tree.nodes) {
    parents.push_back(N::Integer(node.parent));
    controls.push_back(N::Integer(node.control));
  }
  std::vector<N> start{N::Call(
      "place", {N::String("Token"), N::Identifier("P1"),
                N::Call("site", {N::Integer(tree.root)})})};
  const int first = tree.nodes[tree.root].control;
  if (first > 1) {
    start.push_back(
        N::Call("set-mover", {N::Identifier("P" + std::to_string(first))}));
  }
  std::vector<N> end;
  for (int v = 0; v < n; ++v) {
    const auto& node = tree.nodes[v];
    if (!node.is_leaf()) continue;
    std::vector<N> values;
    for (double u : node.payoff) {
      if (u == std::trunc(u)) {
        values.push_back(N::Integer(static_cast<std::int64_t>(u)));
      } else {
        values.push_back(N::String(ShortestDouble(u)));
      }
    }
    end.push_back(N::Call("at", {N::Integer(v)}));
    end.push_back(N::Call("payoff", {N::List(std::move(values))}));
  }
  std::vector<N> rules{N::Call("start", {N::List(std::move(start))}),
                       N::Call("play", {N::Call("descend",
                                                {N::List(std::move(controls))})})};
  rules.push_back(N::Call("end", std::move(end)));
  return N::Call(
      "game",
      {N::String(name),
       N::Call("players", {N::Integer(tree.num_players)}),
       N::Call("equipment",
               {N::List({N::Call("board",
                                 {N::Call("tree", {N::List(std::move(parents))})}),
                         N::Call("piece",
                                 {N::String("Token"), N::Identifier("P1")})})}),
       N::Call("rules", std::move(rules))});
}

GamePtr CompileTree(const ExtensiveTree& tree) {
  return Compile(TreeToLudemes(tree));
}

std::string_view MismatchKindName(MismatchKind kind) {
  switch (kind) {
    case MismatchKind::kMover: return "mover";
    case MismatchKind::kBranching: return "branching";
    case MismatchKind::kPayoff: return "payoff";
    case MismatchKind::kTrialLength: return "trial-length";
    case MismatchKind::kToken: return "token";
  }
  return "?";
}

std::size_t BisimulationReport::count(MismatchKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(mismatches.begin(), mismatches.end(),
                    [kind](const Mismatch& m) { return m.kind == kind; }));
}

namespace {

class Bisimulation {
 public:
  Bisimulation(const ExtensiveTree& tree, const Game& game)
      : tree_(tree), game_(game) {}

  BisimulationReport Run(const BisimulationMode& mode) {
    const GameState s0 = ApplyStart(game_);
    if (mode.exhaustive) {
      Walk(tree_.root, s0);
    } else {
      Rng rng(mode.seed);
      for (std::uint64_t i = 0; i < mode.paths; ++i) Sample(s0, rng);
    }
    return std::move(report_);
  }

 private:
  void Report(MismatchKind kind, std::string detail) {
    report_.mismatches.push_back({path_, kind, std::move(detail)});
  }

  // Checks the pair (z, s). Returns the legal moves if the walk continues.
  std::optional<std::vector<Move>> Check(int z, const GameState& s) {
    ++report_.states_visited;
    const auto& node = tree_.nodes[z];
    int tokens = 0;
    for (int v = 0; v < s.num_sites(); ++v) tokens += s.What(v) != 0 ? 1 : 0;
    if (tokens != 1 || s.What(z) == 0) {
      Report(MismatchKind::kToken,
             std::to_string(tokens) + " tokens, node " + node.id +
                 (s.What(z) == 0 ? " empty" : " occupied"));
    }
    const int depth = static_cast<int>(path_.size());
    if (node.is_leaf()) {
      ++report_.paths_checked;
      if (!s.terminal()) {
        Report(MismatchKind::kTrialLength,
               "game continues past leaf " + node.id);
      } else if (s.move_number() != depth) {
        Report(MismatchKind::kTrialLength,
               "trial has " + std::to_string(s.move_number()) +
                   " moves, path has " + std::to_string(depth));
      } else if (s.scores().utilities != node.payoff) {
        Report(MismatchKind::kPayoff, "wrong score vector at leaf " + node.id);
      }
      return std::nullopt;
    }
    if (s.terminal()) {
      ++report_.paths_checked;
      Report(MismatchKind::kTrialLength,
             "game ended at internal node " + node.id);
      return std::nullopt;
    }
    if (s.mover() != node.control) {
      Report(MismatchKind::kMover, "mover " + std::to_string(s.mover()) +
                                       ", tree says " +
                                       std::to_string(node.control));
    }
    std::vector<Move> moves = LegalMoves(game_, s);
    if (moves.size() != node.children.size()) {
      Report(MismatchKind::kBranching,
             std::to_string(moves.size()) + " moves for " +
                 std::to_string(node.children.size()) + " children");
    }
    return moves;
  }

  void Walk(int z, const GameState& s) {
    auto moves = Check(z, s);
    if (!moves) return;
    const auto& children = tree_.nodes[z].children;
    const std::size_t n = std::min(moves->size(), children.size());
    for (std::size_t i = 0; i < n; ++i) {
      path_.push_back(static_cast<int>(i));
      Walk(children[i], Successor(game_, s, (*moves)[i]));
      path_.pop_back();
    }
  }

  void Sample(const GameState& s0, Rng& rng) {
    path_.clear();
    int z = tree_.root;
    GameState s = s0;
    for (;;) {
      auto moves = Check(z, s);
      if (!moves) break;
      const auto& children = tree_.nodes[z].children;
      const std::size_t n = std::min(moves->size(), children.size());
      if (n == 0) break;
      const auto i = rng.Below(static_cast<std::uint32_t>(n));
      path_.push_back(static_cast<int>(i));
      ApplyMove(game_, s, (*moves)[i]);
      z = children[i];
    }
    path_.clear();
  }

  const ExtensiveTree& tree_;
  const Game& game_;
  BisimulationReport report_;
  std::vector<int> path_;
};

}  // namespace

BisimulationReport BisimulationCheck(const ExtensiveTree& tree,
                                     const Game& game,
                                     const BisimulationMode& mode) {
  return Bisimulation(tree, game).Run(mode);
}

}  // namespace ludemic
