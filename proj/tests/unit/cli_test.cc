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

// Runs the ludemic executable as a child process.

#include <fcntl.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "test_util.hpp"

namespace ludemic::testing {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void Exec(const std::vector<std::string>& args) {
  std::vector<char*> argv;
  std::string exe = LUDEMIC_CLI_PATH;
  argv.push_back(exe.data());
  for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);
  execv(exe.c_str(), argv.data());
  _exit(127);
}

int WaitCode(pid_t pid) {
  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return 128 + WTERMSIG(status);
}

Result RunCli(const std::vector<std::string>& args,
           const std::vector<std::pair<std::string, std::string>>& env = {}) {
  const fs::path dir = fs::temp_directory_path();
  const std::string tag = std::to_string(getpid());
  const fs::path out = dir / ("ludemic_cli_out_" + tag);
  const fs::path err = dir / ("ludemic_cli_err_" + tag);
  const pid_t pid = fork();
  if (pid == 0) {
    for (const auto& [k, v] : env) setenv(k.c_str(), v.c_str(), 1);
    const int o = open(out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    const int e = open(err.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    dup2(o, STDOUT_FILENO);
    dup2(e, STDERR_FILENO);
    Exec(args);
  }
  Result r;
  r.code = WaitCode(pid);
  r.out = Slurp(out);
  r.err = Slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

std::string Games() { return GamesDir().string(); }
std::string Fixture(const std::string& f) { return (FixturesDir() / f).string(); }

TEST(CliTest, ValidatesTicTacToe) {
  const Result r = RunCli({"validate", (GamesDir() / "tic_tac_toe.lud").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok: Tic-Tac-Toe"), std::string::npos) << r.out;
}

TEST(CliTest, ValidatesEveryBundledGame) {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(GamesDir())) {
    if (entry.path().extension() != ".lud") continue;
    ++count;
    const Result r = RunCli({"validate", entry.path().string()});
    EXPECT_EQ(r.code, 0) << entry.path() << ": " << r.err;
  }
  EXPECT_EQ(count, 6);
}

TEST(CliTest, ValidateReportsDomainErrors) {
  Result r = RunCli({"validate", Fixture("players0.lud")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("players0.lud:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("players"), std::string::npos) << r.err;

  const fs::path bad = fs::temp_directory_path() / "ludemic_cli_bad.lud";
  std::ofstream(bad) << "(game \"x\"\n  (players 2";
  r = RunCli({"validate", bad.string()});
  fs::remove(bad);
  EXPECT_EQ(r.code, 1);
  // Syntax errors carry line:column.
  EXPECT_TRUE(std::regex_search(r.err, std::regex(R"(ludemic_cli_bad\.lud:\d+:\d+: )")))
      << r.err;

  r = RunCli({"validate", "/nonexistent/x.lud"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/nonexistent/x.lud: "), std::string::npos) << r.err;
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli({}).code, 2);
  EXPECT_EQ(RunCli({"frobnicate"}).code, 2);
  EXPECT_EQ(RunCli({"validate"}).code, 2);
  EXPECT_EQ(RunCli({"bench", "--seconds", "0"}).code, 2);
  EXPECT_EQ(RunCli({"bench", "--threads", "0"}).code, 2);
  EXPECT_EQ(RunCli({"tree-compile"}).code, 2);
  EXPECT_EQ(RunCli({"tree-compile", Fixture("two_leaf.tree"), "--exhaustive",
                 "--sample", "3"})
                .code,
            2);
  EXPECT_EQ(RunCli({"serve", "--port", "70000"}).code, 2);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = RunCli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("validate"), std::string::npos);
}

TEST(CliTest, TokensTableSortedByName) {
  const Result r = RunCli({"tokens", (GamesDir() / "tic_tac_toe.lud").string(),
                        (GamesDir() / "connect4.lud").string(),
                        (GamesDir() / "hex.lud").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::pair<std::string, int>> rows;
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 4), "game");
  const std::regex row(R"(^(.*\S)\s+(\d+)$)");
  while (std::getline(lines, line)) {
    std::smatch m;
    ASSERT_TRUE(std::regex_match(line, m, row)) << line;
    rows.emplace_back(m[1], std::stoi(m[2]));
  }
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].first, "Connect-4");
  EXPECT_EQ(rows[1].first, "Hex");
  EXPECT_EQ(rows[2].first, "Tic-Tac-Toe");
  EXPECT_EQ(rows[0].second, 27);
  EXPECT_EQ(rows[1].second, 122);
  EXPECT_EQ(rows[2].second, 26);
}

TEST(CliTest, TokensReportsBadFilesAndCountsTheRest) {
  const Result r = RunCli({"tokens", "/nonexistent/x.lud",
                        (GamesDir() / "tic_tac_toe.lud").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/nonexistent/x.lud"), std::string::npos);
  EXPECT_NE(r.out.find("Tic-Tac-Toe"), std::string::npos);
}

TEST(CliTest, BenchJson) {
  const Result r = RunCli({"bench", "--games", Games(), "--game", "Tic-Tac-Toe",
                        "--seconds", "1", "--seed", "7", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["game"], "Tic-Tac-Toe");
  EXPECT_EQ(j[0]["threads"], 1);
  EXPECT_GT(j[0]["playouts"].get<long long>(), 1000);
  EXPECT_GT(j[0]["playoutsPerSecond"].get<double>(), 0.0);
  const auto& o = j[0]["outcomes"];
  EXPECT_EQ(o["wins"].size(), 2u);
  const long long total = o["wins"][0].get<long long>() +
                          o["wins"][1].get<long long>() +
                          o["draws"].get<long long>() +
                          o["other"].get<long long>();
  EXPECT_EQ(total, j[0]["playouts"].get<long long>());
}

TEST(CliTest, BenchTableColumnsAndSkippedRows) {
  const Result r =
      RunCli({"bench", "--games", Games(), "--game", "Tic-Tac-Toe", "--game",
           Fixture("players0.lud"), "--seconds", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("skipping"), std::string::npos) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  const std::vector<std::string> columns = {"game", "threads", "seconds",
                                            "playouts", "playouts/s"};
  std::size_t at = 0;
  for (const std::string& c : columns) {
    const std::size_t pos = header.find(c, at);
    ASSERT_NE(pos, std::string::npos) << header;
    at = pos + c.size();
  }
  std::string row;
  ASSERT_TRUE(std::getline(lines, row));
  EXPECT_EQ(row.rfind("Tic-Tac-Toe", 0), 0u) << row;
  EXPECT_FALSE(std::getline(lines, row));
}

TEST(CliTest, GamesDirectoryFromEnvironment) {
  const Result r = RunCli({"enumerate", "Tic-Tac-Toe"}, {{"LUDEMIC_GAMES", Games()}});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("terminal sequences: 255168"), std::string::npos)
      << r.out;
}

TEST(CliTest, TreeCompileTwoLeaf) {
  const fs::path out = fs::temp_directory_path() / "ludemic_cli_two_leaf.lud";
  const Result r = RunCli({"tree-compile", Fixture("two_leaf.tree"),
                        "--exhaustive", "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos) << r.out;
  // The emitted description is itself a valid game.
  EXPECT_EQ(RunCli({"validate", out.string()}).code, 0);
  fs::remove(out);
}

TEST(CliTest, TreeCompileDetectsCorruptedPayoff) {
  const Result r =
      RunCli({"tree-compile", Fixture("two_leaf.tree"), "--check-against",
           Fixture("two_leaf_corrupted.lud")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(std::regex_search(r.out, std::regex(R"(mismatches: [1-9])")))
      << r.out;
  EXPECT_NE(r.out.find("payoff"), std::string::npos) << r.out;
}

TEST(CliTest, TreeCompileSampledAndRandom) {
  Result r = RunCli({"tree-compile", Fixture("depth_two.tree"), "--sample", "5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("paths checked: 5"), std::string::npos) << r.out;

  r = RunCli({"tree-compile", "--random", "20", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("trees: 20"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos);
}

TEST(CliTest, TreeCompileMalformedFile) {
  const fs::path bad = fs::temp_directory_path() / "ludemic_cli_bad.tree";
  std::ofstream(bad) << "(node 1 (leaf";
  const Result r = RunCli({"tree-compile", bad.string()});
  fs::remove(bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ludemic_cli_bad.tree:"), std::string::npos) << r.err;
}

class ServeProcess {
 public:
  explicit ServeProcess(const std::vector<std::string>& args) {
    int fds[2];
    if (pipe(fds) != 0) return;
    pid_ = fork();
    if (pid_ == 0) {
      close(fds[0]);
      dup2(fds[1], STDOUT_FILENO);
      const int null = open("/dev/null", O_WRONLY);
      dup2(null, STDERR_FILENO);
      Exec(args);
    }
    close(fds[1]);
    out_ = fdopen(fds[0], "r");
  }
  ~ServeProcess() {
    if (pid_ > 0 && !reaped_) {
      kill(pid_, SIGKILL);
      WaitCode(pid_);
    }
    if (out_ != nullptr) fclose(out_);
  }

  std::string ReadLine() {
    char buf[512];
    if (out_ == nullptr || fgets(buf, sizeof buf, out_) == nullptr) return {};
    return buf;
  }

  int Terminate() {
    kill(pid_, SIGTERM);
    reaped_ = true;
    return WaitCode(pid_);
  }

  int Wait() {
    reaped_ = true;
    return WaitCode(pid_);
  }

 private:
  pid_t pid_ = -1;
  bool reaped_ = false;
  FILE* out_ = nullptr;
};

int PortFrom(const std::string& banner) {
  std::smatch m;
  if (!std::regex_search(banner, m, std::regex(R"(:(\d+)\s*$)"))) return -1;
  return std::stoi(m[1]);
}

TEST(CliTest, ServeAnswersHealthAndShutsDownOnSigterm) {
  ServeProcess serve({"serve", "--port", "0", "--games", Games()});
  const std::string banner = serve.ReadLine();
  const int port = PortFrom(banner);
  ASSERT_GT(port, 0) << banner;

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);

  // A scripted client plays a full Tic-Tac-Toe game.
  auto created = client.Post("/api/sessions",
                             R"({"game":"Tic-Tac-Toe","seed":5})",
                             "application/json");
  ASSERT_TRUE(created);
  ASSERT_EQ(created->status, 201) << created->body;
  const nlohmann::json session = nlohmann::json::parse(created->body);
  const std::string id = session["session"];
  nlohmann::json state = session["state"];
  int moves = 0;
  while (!state["terminal"].get<bool>()) {
    ASSERT_FALSE(state["legalMoves"].empty());
    auto r = client.Post("/api/sessions/" + id + "/move", R"({"index":0})",
                         "application/json");
    ASSERT_TRUE(r);
    ASSERT_EQ(r->status, 200) << r->body;
    state = nlohmann::json::parse(r->body)["state"];
    ASSERT_LT(++moves, 10);
  }
  // First-listed moves give P1 the anti-diagonal on its fourth stone.
  EXPECT_EQ(moves, 7);
  EXPECT_EQ(state["scores"]["kind"], "Win");
  EXPECT_EQ(state["scores"]["utilities"], nlohmann::json({1.0, -1.0}));

  EXPECT_EQ(serve.Terminate(), 0);
}

TEST(CliTest, ServeOnOccupiedPortFails) {
  const int fd = socket(AF_INET, SOCK_STREAM, 0);
  ASSERT_GE(fd, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  ASSERT_EQ(bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr), 0);
  ASSERT_EQ(listen(fd, 1), 0);
  socklen_t len = sizeof addr;
  getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  const int port = ntohs(addr.sin_port);

  ServeProcess serve(
      {"serve", "--port", std::to_string(port), "--games", Games()});
  EXPECT_EQ(serve.Wait(), 1);
  close(fd);
}

}  // namespace
}  // namespace ludemic::testing
