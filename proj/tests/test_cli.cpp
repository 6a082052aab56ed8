#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apollon/frames.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run_shell(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.append(buffer, got);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

CliResult run_cli(const std::string& args) {
  return run_shell(std::string("'") + APOLLON_CLI_PATH + "' " + args + " 2>&1");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string temp_path(const std::string& tag) {
  return "/tmp/apollon_cli_test_" + std::to_string(getpid()) + "_" + tag + ".svg";
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("enumerate emits csv in canonical order") {
  const auto r = run_cli("enumerate --max-bend 6 --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "B,mu,k,n,b0,b1,b2,b3,b4,shift,symmetry,reducible");
  CHECK(lines[1] == "0,0,0,1,0,0,1,1,1,0,strip,0");
  CHECK(lines[2] == "1,0,1,1,-1,2,2,3,3,0,window,0");
  CHECK(lines[12] == "6,2,5,8,-6,11,14,15,23,4/5,skew,0");
}

TEST_CASE("enumerate bend zero yields the strip alone") {
  const auto r = run_cli("enumerate --max-bend 0 --format csv");
  CHECK(r.status == 0);
  CHECK(lines_of(r.out).size() == 2);
}

TEST_CASE("enumerate table output") {
  const auto r = run_cli("enumerate --max-bend 2");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].find("B") != std::string::npos);
  CHECK(lines[0].find("symmetry") != std::string::npos);
  CHECK(lines[3].find("odd") != std::string::npos);
  for (const auto& line : lines) {
    CHECK(!line.empty());
    CHECK(line.back() != ' ');
  }
}

TEST_CASE("enumerate emits newline-delimited json") {
  const auto r = run_cli("enumerate --max-bend 2 --format json");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  const auto rec = nlohmann::json::parse(lines[2]);
  CHECK(rec.at("B") == 2);
  CHECK(rec.at("mu") == 0);
  CHECK(rec.at("k") == 1);
  CHECK(rec.at("n") == 4);
  CHECK(rec.at("b0") == -2);
  CHECK(rec.at("b4") == 7);
  CHECK(rec.at("shift") == "0");
  CHECK(rec.at("symmetry") == "odd");
  CHECK(rec.at("reducible") == false);
}

TEST_CASE("enumerate with reducible multiples") {
  const auto r = run_cli("enumerate --max-bend 4 --all --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines.size() == 12);
  bool doubled_window = false;
  for (const auto& line : lines) {
    if (line == "2,0,2,2,-2,4,4,6,6,0,window,1") doubled_window = true;
  }
  CHECK(doubled_window);
}

TEST_CASE("enumerate argument errors") {
  CHECK(run_cli("enumerate").status == 2);
  CHECK(run_cli("enumerate --max-bend -1").status == 2);
  CHECK(run_cli("enumerate --max-bend six").status == 2);
  CHECK(run_cli("enumerate --max-bend 5 --format yaml").status == 2);
  CHECK(run_cli("enumerate --max-bend 5 --frobnicate").status == 2);
  CHECK(run_cli("").status == 2);
}

TEST_CASE("thread cap env var") {
  const std::string cli = APOLLON_CLI_PATH;
  const auto once = run_shell("APOLLON_THREADS=1 '" + cli +
                              "' enumerate --max-bend 24 --format csv 2>&1");
  const auto many = run_shell("APOLLON_THREADS=4 '" + cli +
                              "' enumerate --max-bend 24 --format csv 2>&1");
  CHECK(once.status == 0);
  CHECK(once.out == many.out);

  CHECK(run_shell("APOLLON_THREADS=0 '" + cli + "' enumerate --max-bend 5 2>&1").status == 2);
  CHECK(run_shell("APOLLON_THREADS=lots '" + cli + "' enumerate --max-bend 5 2>&1").status == 2);
}

TEST_CASE("generate lists circles with exact and decimal columns") {
  const auto r = run_cli("generate --key 1,0,1,1 --max-bend 3 --format csv");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "bend,x_dot,y_dot,center_x,center_y");
  CHECK(lines[1] == "-1,0,0,0,0");
  CHECK(lines[2] == "2,-1,0,-0.5,0");
  CHECK(lines[3] == "2,1,0,0.5,0");
  CHECK(lines[4] == "3,0,-2,0,-0.666666666667");
  CHECK(lines[5] == "3,0,2,0,0.666666666667");
}

TEST_CASE("generate json symbols") {
  const auto r = run_cli("generate --key 3,1,2,5 --max-bend 12 --format json");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(!lines.empty());
  const auto first = nlohmann::json::parse(lines[0]);
  CHECK(first.at("bend") == -3);
  CHECK(first.at("x_dot") == "0");
  CHECK(first.at("y_dot") == "0");
  CHECK(first.at("center_x") == 0);
  bool fractional = false;
  for (const auto& line : lines) {
    const auto rec = nlohmann::json::parse(line);
    const std::string x = rec.at("x_dot");
    if (x.find('/') != std::string::npos) fractional = true;
  }
  CHECK(fractional);
}

TEST_CASE("generate rejects bad keys and bounds") {
  const auto bad = run_cli("generate --key 1,0,1,2 --max-bend 10");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("master equation violated") != std::string::npos);

  CHECK(run_cli("generate --key 1,0,1 --max-bend 10").status == 2);
  CHECK(run_cli("generate --key 0,0,0,1 --max-bend 10").status == 3);

  const auto low = run_cli("generate --key 6,2,5,8 --max-bend 20");
  CHECK(low.status == 2);
  CHECK(low.out.find("principal bend") != std::string::npos);

  const auto r = run_cli("generate --key 6,2,5,8 --max-bend 23 --format csv");
  CHECK(lines_of(r.out).size() == 6);
}

TEST_CASE("frames walk") {
  const auto r = run_cli("frames --key 2,0,1,4 --depth 0");
  CHECK(r.status == 0);
  CHECK(r.out.find("quintet: -2,3,6,7,7") != std::string::npos);
  CHECK(r.out.find("integral: true") != std::string::npos);
  CHECK(r.out.find("slot 41: delta=-3 gamma=4 h=5") != std::string::npos);
  CHECK(r.out.find("step") == std::string::npos);

  const auto walk = run_cli("frames --key 6,2,5,8 --depth 3");
  CHECK(walk.status == 0);
  CHECK(walk.out.find("integral: false") != std::string::npos);
  CHECK(walk.out.find("step 3: reflect") != std::string::npos);
  size_t consistent = 0, pos = 0;
  while ((pos = walk.out.find("consistent: yes", pos)) != std::string::npos) {
    ++consistent;
    pos += 1;
  }
  CHECK(consistent == 3);
  CHECK(walk.out.find("consistent: no") == std::string::npos);

  CHECK(run_cli("frames --key 1,0,1,2 --depth 1").status == 2);
  CHECK(run_cli("frames --key 0,0,0,1 --depth 1").status == 3);
  CHECK(run_cli("frames --key 2,0,1,4 --depth -1").status == 2);
}

TEST_CASE("render writes svg and reports the circle count") {
  const std::string path_a = temp_path("a");
  const std::string path_b = temp_path("b");

  const auto r = run_cli("render --key 1,0,1,1 --max-bend 100 --out " + path_a);
  CHECK(r.status == 0);
  CHECK(r.out == "169\n");
  const std::string svg = slurp(path_a);
  CHECK(svg.rfind("<svg xmlns", 0) == 0);

  const auto again = run_cli("render --key 1,0,1,1 --max-bend 100 --out " + path_b);
  CHECK(again.status == 0);
  CHECK(slurp(path_b) == svg);

  const auto culled =
      run_cli("render --key 1,0,1,1 --max-bend 100 --min-radius 50 --out " + path_a);
  CHECK(culled.status == 0);
  CHECK(culled.out == "9\n");

  CHECK(run_cli("render --key 1,0,1,1 --max-bend 100 --width 0 --out " + path_a).status == 2);
  CHECK(run_cli("render --key 1,0,1,1 --max-bend 100 --labels big --out " + path_a).status == 2);
  CHECK(run_cli("render --key 1,0,1,2 --max-bend 100 --out " + path_a).status == 2);
  CHECK(run_cli("render --key 1,0,1,1 --max-bend 100 --out /nonexistent/x.svg").status == 4);

  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}

TEST_CASE("matrices subcommand dumps the reference grids") {
  const auto r = run_cli("matrices");
  CHECK(r.status == 0);
  CHECK(r.out == apollon::matrix_reference_dump());
}
