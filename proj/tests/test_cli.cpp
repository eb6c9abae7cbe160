#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CANTOR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("report: six rows, all passing, deterministic") {
  const RunResult csv = run_cli("report --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.out) == 7);  // header + 6 rows
  CHECK(csv.out.find("\r\n") != std::string::npos);
  CHECK(csv.out.find(",no") == std::string::npos);

  const RunResult again = run_cli("report --format csv");
  CHECK(again.out == csv.out);

  const RunResult js = run_cli("report --format json");
  CHECK(js.exit_code == 0);
  const json rows = json::parse(js.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.contains("name"));
    CHECK(row.contains("fraction"));
    CHECK(row["fraction"].contains("exact"));
    CHECK(row["fraction"].contains("decimal"));
    CHECK(row.contains("reference_bound"));
    CHECK(row.contains("engine_bound"));
    CHECK(row["pass"].get<bool>());
  }
}

TEST_CASE("coverage command") {
  const RunResult r = run_cli("coverage --construction octagon-fixed --level 4 --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["inside"] == "60");
  CHECK(j["straddle"] == "4");
  CHECK(j["outside"] == "0");
  CHECK(j["fraction"]["exact"] == "15/16");
  CHECK(j["provenance"] == "certified");

  const RunResult csv = run_cli("coverage --construction octagon-fixed --level 4 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.out) == 2);
  CHECK(csv.out.find("15/16") != std::string::npos);

  const RunResult basic =
      run_cli("coverage --construction basic-interval --param n=2 --level 2 --format json");
  const json jb = json::parse(basic.out);
  CHECK(jb["inside"] == "1");
  CHECK(jb["outside"] == "3");
  CHECK(jb["certified_bound"].get<std::string>().substr(0, 8) == "1.548562");

  CHECK(run_cli("coverage --construction nosuch --level 4").exit_code == 1);
  CHECK(run_cli("coverage --construction octagon-fixed --level 99").exit_code == 1);
  CHECK(run_cli("coverage --construction octagon-fixed").exit_code == 1);  // missing --level
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("render command writes deterministic SVG") {
  const auto dir = std::filesystem::temp_directory_path() / "cantor_cli_test";
  std::filesystem::create_directories(dir);
  const auto fig1 = dir / "fig1.svg";
  const auto fig2 = dir / "fig2.svg";
  CHECK(run_cli("render --construction circle-big --level 6 --out " + fig1.string()).exit_code ==
        0);
  CHECK(run_cli("render --construction circle-big --level 6 --out " + fig2.string()).exit_code ==
        0);
  const std::string svg = slurp(fig1);
  CHECK(svg == slurp(fig2));
  CHECK(svg.find("<svg") == 0);
  CHECK(run_cli("render --construction circle-big --level 6 --out /nonexistent-dir/x.svg")
            .exit_code == 1);
}

TEST_CASE("optimize command") {
  const RunResult r = run_cli("optimize --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["k_star"].get<std::string>().substr(0, 8) == "2.780514");
  CHECK(j["best_integer_k"] == 3);
  const RunResult custom = run_cli("optimize --lo 2 --hi 6 --tol 1e-10 --format json");
  CHECK(json::parse(custom.out)["k_star"].get<std::string>().substr(0, 8) == "2.780514");
}

TEST_CASE("sweep command") {
  const RunResult r = run_cli("sweep --center 1/2,1/2 --r2 145/338,1 --level 4 --format json");
  CHECK(r.exit_code == 0);
  const json rows = json::parse(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].contains("certified_bound"));
  CHECK(run_cli("sweep --r2 0 --level 4").exit_code == 1);
}

TEST_CASE("config file input") {
  const auto dir = std::filesystem::temp_directory_path() / "cantor_cli_test";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "cover.json";
  {
    std::ofstream out(cfg);
    out << R"({"root": {"x0":"0","y0":"0","side":"1"},
               "primitives": [{"kind":"disk","cx":"1/2","cy":"1/2","r2":"145/338"},
                              {"kind":"halfplane","a":"-1","b":"0","c":"0"},
                              {"kind":"halfplane","a":"1","b":"0","c":"1"},
                              {"kind":"halfplane","a":"0","b":"-1","c":"0"},
                              {"kind":"halfplane","a":"0","b":"1","c":"1"}],
               "diameter": {"kind":"sqrt","radicand":"290","scale":"1/13"}})";
  }
  const RunResult r = run_cli("coverage --config " + cfg.string() + " --level 9 --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["inside"] == "61308");  // frozen engine tally, brute-force validated
  CHECK(run_cli("coverage --config /no/such/file.json --level 3").exit_code == 1);

  // an understated claimed diameter must be caught, exit code 2
  const auto bad = dir / "bad_diameter.json";
  {
    std::ofstream out(bad);
    out << R"({"root": {"x0":"0","y0":"0","side":"1"},
               "primitives": [{"kind":"disk","cx":"1/2","cy":"1/2","r2":"145/338"},
                              {"kind":"halfplane","a":"-1","b":"0","c":"0"},
                              {"kind":"halfplane","a":"1","b":"0","c":"1"},
                              {"kind":"halfplane","a":"0","b":"-1","c":"0"},
                              {"kind":"halfplane","a":"0","b":"1","c":"1"}],
               "diameter": {"kind":"sqrt","radicand":"2","scale":"1/3"}})";
  }
  CHECK(run_cli("coverage --config " + bad.string() + " --level 4").exit_code == 2);
}

TEST_CASE("run records replay byte-identically") {
  const auto dir = std::filesystem::temp_directory_path() / "cantor_cli_records";
  std::filesystem::remove_all(dir);
  const RunResult r1 = run_cli("report --format csv --record " + dir.string());
  CHECK(r1.exit_code == 0);
  std::filesystem::path record;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) record = entry.path();
  REQUIRE(!record.empty());
  const json rec1 = json::parse(slurp(record));
  CHECK(rec1["command"] == "report");
  CHECK(rec1["outputs"] == r1.out);
  CHECK(rec1["engine_version"].get<std::string>().find("cantor-cover") == 0);
  CHECK(rec1["timestamp"].get<std::string>().size() == 20);

  const RunResult r2 = run_cli("report --format csv --record " + dir.string());
  const json rec2 = json::parse(slurp(record));
  CHECK(rec2["outputs"] == rec1["outputs"]);  // byte-identical replay
  CHECK(r2.out == r1.out);
}
