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

// Command-line front end: validate and inspect descriptions, count tokens,
// benchmark playouts, compile extensive-form trees and run the service.

#include <signal.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ludemic/compiler.hpp"
#include "ludemic/corpus.hpp"
#include "ludemic/engine.hpp"
#include "ludemic/error.hpp"
#include "ludemic/rules.hpp"
#include "ludemic/service/server.hpp"
#include "ludemic/service/session.hpp"
#include "ludemic/universality.hpp"

namespace {

using namespace ludemic;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;

OptionSelection ParseSelection(const std::vector<std::string>& pairs) {
  OptionSelection out;
  for (const std::string& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--option", "expected Name=Item, got " + p);
    }
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

std::string Where(const fs::path& path, const LudemicError& e) {
  const auto* src = dynamic_cast<const SourceError*>(&e);
  const bool positioned = src != nullptr && src->line() > 0;
  return path.string() + (positioned ? ":" : ": ") + e.what();
}

int Validate(const fs::path& path, const OptionSelection& options) {
  try {
    GamePtr game = CompileDescription(ReadFile(path), options);
    const GameState s0 = ApplyStart(*game);
    std::cout << "ok: " << game->name() << " (" << game->num_players()
              << " players, " << game->num_sites() << " sites, "
              << RepresentationName(game->representation()) << ", "
              << LegalMoves(*game, s0).size() << " opening moves)\n";
    return kExitOk;
  } catch (const LudemicError& e) {
    std::cerr << Where(path, e) << "\n";
    return kExitDomain;
  }
}

int Tokens(const std::vector<std::string>& files) {
  struct Row {
    std::string game;
    int tokens;
    std::string file;
  };
  std::vector<Row> rows;
  int status = kExitOk;
  for (const std::string& f : files) {
    try {
      const LudemeTree tree = ParseDescription(ReadFile(f));
      rows.push_back({GameName(tree), CountTokens(tree), f});
    } catch (const LudemicError& e) {
      std::cerr << Where(f, e) << "\n";
      status = kExitDomain;
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.game < b.game; });
  std::size_t width = 4;
  for (const Row& r : rows) width = std::max(width, r.game.size());
  std::cout << std::left << std::setw(width + 2) << "game" << "tokens\n";
  for (const Row& r : rows) {
    std::cout << std::left << std::setw(width + 2) << r.game << r.tokens
              << "\n";
  }
  return status;
}

struct BenchTarget {
  std::string label;
  GamePtr game;
};

// A bench target is a .lud path, a preset label or a game name.
BenchTarget Resolve(const std::string& game_arg, Corpus* corpus,
                    const OptionSelection& options) {
  std::error_code ec;
  if (fs::is_regular_file(game_arg, ec)) {
    GamePtr game = CompileDescription(ReadFile(game_arg), options);
    return {game->name(), game};
  }
  if (corpus == nullptr) throw LudemicError("no games directory available");
  if (const Preset* p = FindPreset(game_arg); p && options.empty()) {
    return {p->label, corpus->Get(p->game, p->options)};
  }
  return {game_arg, corpus->Get(game_arg, options)};
}

int Bench(std::vector<std::string> game_args, const fs::path& games_dir,
          double seconds, int threads, std::uint64_t seed, bool json,
          const OptionSelection& options) {
  std::optional<Corpus> corpus;
  try {
    corpus.emplace(games_dir);
  } catch (const LudemicError& e) {
    if (game_args.empty()) {
      std::cerr << e.what() << "\n";
      return kExitDomain;
    }
  }
  if (game_args.empty()) {
    for (const Preset& p : BenchmarkPresets()) game_args.push_back(p.label);
  }
  int status = kExitOk;
  nlohmann::json records = nlohmann::json::array();
  if (!json) {
    std::cout << std::left << std::setw(16) << "game" << std::right
              << std::setw(8) << "threads" << std::setw(10) << "seconds"
              << std::setw(12) << "playouts" << std::setw(14) << "playouts/s"
              << std::setw(14) << "moves/s" << "\n";
  }
  for (const std::string& game_arg : game_args) {
    BenchTarget target;
    try {
      target = Resolve(game_arg, corpus ? &*corpus : nullptr, options);
    } catch (const LudemicError& e) {
      std::cerr << "skipping " << game_arg << ": " << e.what() << "\n";
      status = kExitDomain;
      continue;
    }
    const PlayoutStats stats =
        BenchPlayouts(*target.game, {seconds, threads, seed});
    if (json) {
      nlohmann::json wins = nlohmann::json::array();
      for (std::size_t p = 1; p < stats.tally.wins.size(); ++p) {
        wins.push_back(stats.tally.wins[p]);
      }
      records.push_back({{"game", target.label},
                         {"threads", stats.threads},
                         {"seconds", stats.elapsed},
                         {"playouts", stats.playouts},
                         {"playoutsPerSecond", stats.playouts_per_second()},
                         {"movesPerSecond", stats.moves_per_second()},
                         {"outcomes",
                          {{"wins", wins},
                           {"draws", stats.tally.draws},
                           {"other", stats.tally.other}}}});
    } else {
      std::cout << std::left << std::setw(16) << target.label << std::right
                << std::setw(8) << stats.threads << std::setw(10)
                << std::fixed << std::setprecision(2) << stats.elapsed
                << std::setw(12) << stats.playouts << std::setw(14)
                << std::setprecision(0) << stats.playouts_per_second()
                << std::setw(14) << stats.moves_per_second() << "\n"
                << std::defaultfloat << std::flush;
    }
  }
  if (json) std::cout << records.dump(2) << "\n";
  return status;
}

void PrintReport(const BisimulationReport& report, std::size_t max_listed) {
  std::cout << "paths checked: " << report.paths_checked << "\n"
            << "states visited: " << report.states_visited << "\n"
            << "mismatches: " << report.mismatches.size() << "\n";
  for (std::size_t i = 0; i < report.mismatches.size() && i < max_listed;
       ++i) {
    const Mismatch& m = report.mismatches[i];
    std::cout << "  " << MismatchKindName(m.kind) << " at [";
    for (std::size_t j = 0; j < m.path.size(); ++j) {
      std::cout << (j ? " " : "") << m.path[j];
    }
    std::cout << "]: " << m.detail << "\n";
  }
}

struct TreeArgs {
  std::string file;
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string check_against;
  int random = 0;
};

int TreeCompile(const TreeArgs& args) {
  const BisimulationMode mode =
      args.sample > 0 ? BisimulationMode::Sampled(args.sample, args.seed)
                      : BisimulationMode::Exhaustive();
  if (args.random > 0) {
    std::uint64_t mismatches = 0;
    std::uint64_t paths = 0;
    for (int i = 0; i < args.random; ++i) {
      const ExtensiveTree tree =
          RandomTree(args.seed + static_cast<std::uint64_t>(i));
      const BisimulationReport r =
          BisimulationCheck(tree, *CompileTree(tree), mode);
      paths += r.paths_checked;
      mismatches += r.mismatches.size();
    }
    std::cout << "trees: " << args.random << "\n"
              << "paths checked: " << paths << "\n"
              << "mismatches: " << mismatches << "\n";
    return mismatches == 0 ? kExitOk : kExitDomain;
  }
  if (args.file.empty()) {
    throw CLI::RequiredError("tree file (or --random N)");
  }
  try {
    const ExtensiveTree tree = ParseTree(ReadFile(args.file));
    const LudemeTree ludemes =
        TreeToLudemes(tree, fs::path(args.file).stem().string());
    GamePtr game = args.check_against.empty()
                       ? Compile(ludemes)
                       : CompileDescription(ReadFile(args.check_against));
    if (!args.out.empty()) {
      std::ofstream out(args.out);
      out << Format(ludemes);
      if (!out) throw LudemicError("cannot write " + args.out);
      std::cout << "wrote " << args.out << "\n";
    }
    const BisimulationReport report = BisimulationCheck(tree, *game, mode);
    PrintReport(report, 20);
    return report.ok() ? kExitOk : kExitDomain;
  } catch (const LudemicError& e) {
    std::cerr << Where(args.file, e) << "\n";
    return kExitDomain;
  }
}

int EnumerateCommand(const std::string& game_arg, const fs::path& games_dir,
                     const OptionSelection& options, int max_depth) {
  std::optional<Corpus> corpus;
  std::error_code ec;
  if (!fs::is_regular_file(game_arg, ec)) corpus.emplace(games_dir);
  const BenchTarget target = Resolve(game_arg, corpus ? &*corpus : nullptr, options);
  EnumerationLimits limits;
  limits.max_depth = max_depth;
  const EnumerationReport r = Enumerate(*target.game, limits);
  std::cout << "game: " << target.label << "\n"
            << "terminal sequences: " << r.terminal_sequences << "\n"
            << "reachable positions: " << r.reachable_positions << "\n"
            << "max depth: " << r.max_depth << "\n";
  for (std::size_t p = 1; p < r.outcomes.wins.size(); ++p) {
    std::cout << "P" << p << " wins: " << r.outcomes.wins[p] << "\n";
  }
  std::cout << "draws: " << r.outcomes.draws << "\n"
            << "other: " << r.outcomes.other << "\n";
  return kExitOk;
}

int Serve(const std::string& host, int port, const fs::path& games_dir) {
  Corpus corpus(games_dir);
  for (const std::string& e : corpus.errors()) {
    std::cerr << "warning: " << e << "\n";
  }
  service::SessionManager sessions(corpus);
  service::Server server(sessions, {host, port, 8});
  server.Bind();

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread waiter([&server, signals] {
    int received = 0;
    sigwait(&signals, &received);
    server.Stop();
  });
  waiter.detach();

  std::cout << "serving " << corpus.descriptions().size()
            << " games on http://" << host << ":" << server.port()
            << std::endl;
  server.Run();
  std::cout << "stopped" << std::endl;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ludemic general game system"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string games_dir = ludemic::DefaultGamesDirectory().string();
  app.add_option("--games", games_dir, "Directory of bundled .lud games")
      ->envname("LUDEMIC_GAMES");

  std::vector<std::string> option_pairs;

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Parse and compile a game");
  validate->add_option("file", validate_file, "Description file")
      ->required();
  validate->add_option("--option", option_pairs, "Option selection Name=Item");

  std::vector<std::string> token_files;
  auto* tokens = app.add_subcommand("tokens", "Count description tokens");
  tokens->add_option("files", token_files, "Description files")->required();

  std::vector<std::string> bench_games;
  double seconds = 10;
  int threads = 1;
  std::uint64_t seed = 1;
  bool json = false;
  auto* bench = app.add_subcommand("bench", "Random playout throughput");
  bench->add_option("--game", bench_games,
                    "Preset, game name or .lud file (repeatable; default "
                    "all presets)");
  bench->add_option("--seconds", seconds, "Seconds per game")
      ->check(CLI::Range(1.0, 1e7));
  bench->add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1, 1024));
  bench->add_option("--seed", seed, "Random seed");
  bench->add_flag("--json", json, "Machine-readable output");
  bench->add_option("--option", option_pairs, "Option selection Name=Item");

  TreeArgs tree_args;
  auto* tree = app.add_subcommand(
      "tree-compile", "Compile an extensive-form tree and check bisimulation");
  tree->add_option("file", tree_args.file, "Tree file");
  auto* exhaustive =
      tree->add_flag("--exhaustive", tree_args.exhaustive, "Check every path");
  tree->add_option("--sample", tree_args.sample, "Check N random paths")
      ->check(CLI::PositiveNumber)
      ->excludes(exhaustive);
  tree->add_option("--seed", tree_args.seed, "Seed for sampling and --random");
  tree->add_option("--out", tree_args.out, "Write the compiled description");
  tree->add_option("--check-against", tree_args.check_against,
                   "Check this description instead of the compiled one");
  tree->add_option("--random", tree_args.random,
                   "Check N random trees instead of a file")
      ->check(CLI::PositiveNumber);

  std::string enumerate_game;
  int max_depth = 64;
  auto* enumerate =
      app.add_subcommand("enumerate", "Exhaustively enumerate a small game");
  enumerate->add_option("game", enumerate_game, "Preset, game name or file")
      ->required();
  enumerate->add_option("--max-depth", max_depth, "Depth cap")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--option", option_pairs, "Option selection Name=Item");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the play service");
  serve->add_option("--port", port, "TCP port (0 picks one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Interface to bind");

  try {
    app.parse(argc, argv);
    const OptionSelection options = ParseSelection(option_pairs);
    if (*validate) return Validate(validate_file, options);
    if (*tokens) return Tokens(token_files);
    if (*bench) {
      return Bench(bench_games, games_dir, seconds, threads, seed, json,
                   options);
    }
    if (*tree) return TreeCompile(tree_args);
    if (*enumerate) {
      return EnumerateCommand(enumerate_game, games_dir, options, max_depth);
    }
    if (*serve) return Serve(host, port, games_dir);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ludemic::LudemicError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
