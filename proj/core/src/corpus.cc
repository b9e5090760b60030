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

#include "ludemic/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ludemic/compiler.hpp"
#include "ludemic/error.hpp"

#ifndef LUDEMIC_DEFAULT_GAMES_DIR
#define LUDEMIC_DEFAULT_GAMES_DIR "games"
#endif

namespace ludemic {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LudemicError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Corpus::Corpus(const std::filesystem::path& dir) : dir_(dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw LudemicError("games directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lud") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    try {
      Description d;
      d.path = path;
      d.text = ReadFile(path);
      d.tree = ParseDescription(d.text);
      d.name = GameName(d.tree);
      d.options = ListOptions(d.tree);
      d.tokens = CountTokens(d.tree);
      if (Find(d.name) != nullptr) {
        throw LudemicError("duplicate game name \"" + d.name + "\"");
      }
      descriptions_.push_back(std::move(d));
    } catch (const LudemicError& e) {
      errors_.push_back(path.filename().string() + ": " + e.what());
    }
  }
  std::sort(descriptions_.begin(), descriptions_.end(),
            [](const Description& a, const Description& b) {
              return a.name < b.name;
            });
}

const Description* Corpus::Find(const std::string& name) const {
  for (const Description& d : descriptions_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

GamePtr Corpus::Get(const std::string& name, const OptionSelection& options) {
  const Description* d = Find(name);
  if (d == nullptr) throw LudemicError("unknown game \"" + name + "\"");
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(name, options);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  GamePtr game = CompileDescription(d->text, options);
  cache_.emplace(std::move(key), game);
  return game;
}

std::filesystem::path DefaultGamesDirectory() {
  if (const char* env = std::getenv("LUDEMIC_GAMES"); env && *env) {
    return env;
  }
  return LUDEMIC_DEFAULT_GAMES_DIR;
}

const std::vector<Preset>& BenchmarkPresets() {
  static const std::vector<Preset> kPresets = {
      {"Tic-Tac-Toe", "Tic-Tac-Toe", {}},
      {"Connect-4", "Connect-4", {}},
      {"Gomoku", "Gomoku", {}},
      {"Hex 9x9", "Hex", {{"Board Size", "9x9"}}},
      {"Hex 11x11", "Hex", {{"Board Size", "11x11"}}},
      {"Breakthrough", "Breakthrough", {}},
      {"Yavalath", "Yavalath", {}},
  };
  return kPresets;
}

const Preset* FindPreset(const std::string& label) {
  for (const Preset& p : BenchmarkPresets()) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

}  // namespace ludemic
