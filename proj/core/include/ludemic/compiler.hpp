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

#ifndef LUDEMIC_COMPILER_HPP_
#define LUDEMIC_COMPILER_HPP_

#include <optional>
#include <string_view>

#include "ludemic/game.hpp"
#include "ludemic/grammar.hpp"

namespace ludemic {

struct CompileOptions {
  // Overrides the automatically selected state representation. Only the
  // implemented representations are accepted.
  std::optional<Representation> representation;
};

// Compiles a tree whose option blocks have been resolved. Throws
// CompileError for unknown ludemes, arity mismatches, unsupported flow,
// a player count below 1 and any other ill-formed rule.
GamePtr Compile(const LudemeTree& tree, const CompileOptions& options = {});

// Parse, resolve options and compile. The Game records the full option
// selection, defaults included.
GamePtr CompileDescription(std::string_view text,
                           const OptionSelection& selection = {},
                           const CompileOptions& options = {});

// The representation Compile picks for `definition`'s rules.
Representation SelectRepresentation(const GameDefinition& definition);

}  // namespace ludemic

#endif  // LUDEMIC_COMPILER_HPP_
