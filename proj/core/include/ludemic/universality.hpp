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

#ifndef LUDEMIC_UNIVERSALITY_HPP_
#define LUDEMIC_UNIVERSALITY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ludemic/game.hpp"
#include "ludemic/grammar.hpp"

namespace ludemic {

// A finite deterministic perfect-information game in extensive form.
struct ExtensiveTree {
  struct Node {
    std::string id;
    int parent = -1;
    // Player to move at an internal node; 0 at leaves.
    int control = 0;
    // Leaves only: one utility per player.
    std::vector<double> payoff;
    // Filled by Link(), in file order.
    std::vector<int> children;

    bool is_leaf() const { return children.empty(); }
  };

  int num_players = 2;
  std::vector<Node> nodes;
  int root = 0;

  // Recomputes children and root from the parent links.
  void Link();
  // Throws LudemicError unless the tree is well formed: one root, every
  // node reachable, controls in 1..k on internal nodes, k payoffs in
  // [-1, 1] on leaves.
  void Validate() const;
  int depth() const;
  int num_leaves() const;
};

// Line format:
//   players k
//   node <id> parent <id|-> control <p>
//   leaf <id> parent <id|-> payoff v1 ... vk
// Blank lines and lines starting with '#' are ignored. Throws SyntaxError
// (with the line number) or LudemicError for a malformed tree.
ExtensiveTree ParseTree(std::string_view text);
std::string FormatTree(const ExtensiveTree& tree);

struct RandomTreeConfig {
  int max_depth = 6;
  int max_branching = 4;
  int max_players = 3;
  // Probability that a non-root node above max_depth is a leaf.
  double leaf_probability = 0.25;
};

ExtensiveTree RandomTree(std::uint64_t seed, const RandomTreeConfig& config = {});

// The ludeme description mirroring `tree`: a tree-shaped board, a single
// token on the root, one descend move per child and one (at v) payoff rule
// per leaf. Node i becomes vertex i.
LudemeTree TreeToLudemes(const ExtensiveTree& tree,
                         const std::string& name = "Extensive Form");
GamePtr CompileTree(const ExtensiveTree& tree);

enum class MismatchKind { kMover, kBranching, kPayoff, kTrialLength, kToken };

std::string_view MismatchKindName(MismatchKind kind);

struct Mismatch {
  // Child indices from the root.
  std::vector<int> path;
  MismatchKind kind;
  std::string detail;
};

struct BisimulationReport {
  std::uint64_t paths_checked = 0;
  std::uint64_t states_visited = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::size_t count(MismatchKind kind) const;
};

struct BisimulationMode {
  bool exhaustive = true;
  std::uint64_t paths = 0;
  std::uint64_t seed = 0;

  static BisimulationMode Exhaustive() { return {true, 0, 0}; }
  static BisimulationMode Sampled(std::uint64_t paths, std::uint64_t seed) {
    return {false, paths, seed};
  }
};

// Walks `tree` and `game` in lockstep, pairing the i-th legal move with the
// i-th child. Every paired state is checked for mover, branching, the
// single-token invariant and, at leaves, exact payoffs and trial length.
BisimulationReport BisimulationCheck(const ExtensiveTree& tree,
                                     const Game& game,
                                     const BisimulationMode& mode);

}  // namespace ludemic

#endif  // LUDEMIC_UNIVERSALITY_HPP_
