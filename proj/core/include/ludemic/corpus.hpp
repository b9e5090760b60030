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

#ifndef LUDEMIC_CORPUS_HPP_
#define LUDEMIC_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "ludemic/game.hpp"
#include "ludemic/grammar.hpp"

namespace ludemic {

// One description file.
struct Description {
  std::string name;
  std::filesystem::path path;
  std::string text;
  LudemeTree tree;
  std::vector<OptionBlock> options;
  int tokens = 0;
};

// The games found in a directory of .lud files, with compiled games cached
// per option selection. Thread-safe.
class Corpus {
 public:
  // Loads every *.lud file in `dir`, sorted by name. Files that fail to
  // parse are skipped and listed in errors().
  explicit Corpus(const std::filesystem::path& dir);

  const std::filesystem::path& directory() const { return dir_; }
  const std::vector<Description>& descriptions() const { return descriptions_; }
  const std::vector<std::string>& errors() const { return errors_; }
  // nullptr if there is no such game.
  const Description* Find(const std::string& name) const;

  // Compiles (or returns the cached) game. Throws LudemicError for an
  // unknown game and CompileError for a bad option selection.
  GamePtr Get(const std::string& name, const OptionSelection& options = {});

 private:
  std::filesystem::path dir_;
  std::vector<Description> descriptions_;
  std::vector<std::string> errors_;
  std::mutex mu_;
  std::map<std::pair<std::string, OptionSelection>, GamePtr> cache_;
};

// The directory bundled games are read from when none is given: the
// LUDEMIC_GAMES environment variable, else the source tree's games/.
std::filesystem::path DefaultGamesDirectory();

// Named game + option pairs used by the benchmark tables.
struct Preset {
  std::string label;
  std::string game;
  OptionSelection options;
};

const std::vector<Preset>& BenchmarkPresets();
const Preset* FindPreset(const std::string& label);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace ludemic

#endif  // LUDEMIC_CORPUS_HPP_
