#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "varregion/cli.hpp"
#include "varregion/io.hpp"

using namespace varregion;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "varregion");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("varregion_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("region csv contains the theta = pi point at the origin") {
  const Run r = run({"region", "--A", "0", "--B", "0.5", "--lambda", "0.5", "--z0", "0.5,0", "--theta-samples", "4"});
  CHECK(r.code == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"theta", "re", "im"});
  CHECK(rows[4][0] == "3.1415926535897931");
  CHECK(std::abs(std::stod(rows[4][1])) < 1e-15);
  CHECK(std::abs(std::stod(rows[4][2])) < 1e-15);
}

TEST_CASE("region edge cases and errors") {
  const Run single = run({"region", "--z0", "0,0"});
  CHECK(single.code == kExitOk);
  CHECK(single.err.find("single point") != std::string::npos);
  CHECK(csv_rows(single.out).size() == 2);

  const Run badB = run({"region", "--B", "0"});
  CHECK(badB.code == kExitUsage);
  CHECK(badB.err.find("B != 0") != std::string::npos);
  CHECK(run({"region", "--A", "0.6", "--B", "0.5"}).code == kExitUsage);
  CHECK(run({"region", "--z0", "1,0"}).code == kExitUsage);
  CHECK(run({"region", "--lambda", "0,2"}).code == kExitUsage);
  CHECK(run({"region", "--z0", "oops"}).code == kExitUsage);
  CHECK(run({"region", "--theta-samples", "2"}).code == kExitUsage);
  CHECK(run({"region", "--format", "png"}).code == kExitUsage);
  CHECK(run({"region", "--out", "/proc/varregion/r.csv"}).code == kExitIo);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("region json and svg files, re-read by inspect") {
  const fs::path dir = scratch_dir("region");
  const fs::path json = dir / "r.json";
  CHECK(run({"region", "--lambda", "0.3,0.4", "--z0", "-0.2,0.6", "--out", json.string()}).code == kExitOk);
  const Run again = run({"inspect", json.string()});
  CHECK(again.code == kExitOk);
  CHECK(again.out.find("samples=256") != std::string::npos);

  auto j = nlohmann::json::parse(read_file(json));
  j["boundary"][3]["re"] = j["boundary"][3]["re"].get<double>() + 1e-6;
  write_file_atomic(dir / "edited.json", j.dump());
  CHECK(run({"inspect", (dir / "edited.json").string()}).code == kExitVerificationFailed);
  write_file_atomic(dir / "junk.json", "{not json");
  CHECK(run({"inspect", (dir / "junk.json").string()}).code == kExitUsage);

  CHECK(run({"region", "--out", (dir / "r.svg").string()}).code == kExitOk);
  CHECK(read_file(dir / "r.svg").find("<svg") != std::string::npos);
  CHECK(run({"region", "--format", "json"}).out.find("\"radius\"") != std::string::npos);
}

TEST_CASE("extremal prints F and F'") {
  const Run r = run({"extremal", "--a", "0,0", "--lambda", "0.5", "--A", "0", "--B", "0.5", "--z", "0.5,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("0.471132142625534 0\n", 0) == 0);

  const Run origin = run({"extremal", "--z", "0,0"});
  CHECK(origin.code == kExitOk);
  CHECK(origin.out == "0 0\n1 0\n");

  CHECK(run({"extremal", "--a", "2,0"}).code == kExitUsage);
  CHECK(run({"extremal", "--z", "1,0"}).code == kExitUsage);
  CHECK(run({"extremal", "--lambda", "1"}).code == kExitUsage);
  CHECK(run({"extremal", "--nodes", "1"}).code == kExitUsage);
  CHECK(run({"extremal", "--A", "-1", "--B", "1", "--lambda", "0.9", "--z", "-0.95,0", "--nodes", "2",
             "--max-panels", "1", "--quad-tol", "1e-300"})
            .code == kExitNumeric);
}

TEST_CASE("sample is deterministic and contained") {
  const std::vector<std::string> args = {"sample", "--A", "-0.5", "--B", "0.5", "--lambda", "0.3",
                                         "--z0", "0.3,0.4", "--mc-samples", "500", "--seed", "11"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 501);
  CHECK(rows[0] == std::vector<std::string>{"seed_index", "re", "im", "verdict"});
  std::size_t boundary = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][3] != "outside");
    boundary += rows[i][3] == "boundary";
  }
  // Unimodular constant draws land on the boundary.
  CHECK(boundary > 0);

  const Run other = run({"sample", "--mc-samples", "50", "--seed", "12"});
  CHECK(other.out != run({"sample", "--mc-samples", "50", "--seed", "13"}).out);
  CHECK(run({"sample", "--mc-samples", "0"}).code == kExitUsage);
  CHECK(run({"sample", "--z0", "0,0", "--mc-samples", "3"}).code == kExitOk);
  CHECK(run({"sample", "--mc-samples", "20", "--format", "svg"}).out.find("width=\"1\" height=\"1\"") !=
        std::string::npos);
  const auto j = nlohmann::json::parse(run({"sample", "--mc-samples", "5", "--format", "json"}).out);
  CHECK(j["samples"].size() == 5);
}

TEST_CASE("verify command") {
  const Run r = run({"verify", "--suite", "prop1", "--seed", "7"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["suite_name"] == "prop1");
  CHECK(j[0]["max_violation"].get<double>() <= j[0]["tolerance"].get<double>());
  CHECK(j[0]["passed"] == true);

  CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "inclusion", "--tol", "0"}).code == kExitUsage);
}

TEST_CASE("sweep writes content-addressed records") {
  const fs::path dir = scratch_dir("sweep");
  const std::string block1 = "A=0\nB=0.5\nlambda_re=0.5\nz0_re=0.5\n";
  const std::string block2 = "A=-0.5\nB=0.5\nz0_re=0.3\nz0_im=0.4\n";
  write_file_atomic(dir / "two.grid", block1 + "\n" + block2);
  const Run r = run({"sweep", "--grid", (dir / "two.grid").string(), "--out", (dir / "two").string(),
                     "--theta-samples", "32"});
  CHECK(r.code == kExitOk);
  auto index = nlohmann::json::parse(read_file(dir / "two" / "index.json"));
  CHECK(index["records"].size() == 2);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir / "two")) files += e.path().extension() == ".json";
  CHECK(files == 3);
  for (const auto& rec : index["records"]) {
    const auto body = nlohmann::json::parse(read_file(dir / "two" / rec["file"].get<std::string>()));
    CHECK(body["status"] == "ok");
    CHECK(region_from_json(body).boundary.size() == 32);
  }

  // Duplicates share one file; a bad block is recorded, not fatal.
  write_file_atomic(dir / "dup.grid", block1 + "\n" + block1 + "\nA=0.7\nB=0.5\nz0_re=0.5\n");
  const Run d = run({"sweep", "--grid", (dir / "dup.grid").string(), "--out", (dir / "dup").string()});
  CHECK(d.code == kExitOk);
  index = nlohmann::json::parse(read_file(dir / "dup" / "index.json"));
  CHECK(index["records"].size() == 3);
  CHECK(index["records"][0]["hash"] == index["records"][1]["hash"]);
  CHECK(index["records"][1]["status"] == "duplicate");
  CHECK(index["deduplicated"] == 1);
  CHECK(index["records"][2]["status"] == "rejected");
  CHECK(index["records"][2]["reason"].get<std::string>().find("A < B") != std::string::npos);
  files = 0;
  for (const auto& e : fs::directory_iterator(dir / "dup")) files += e.path().extension() == ".json";
  CHECK(files == 3);

  // Same block, same hash across runs.
  CHECK(nlohmann::json::parse(read_file(dir / "two" / "index.json"))["records"][0]["hash"] ==
        index["records"][0]["hash"]);

  write_file_atomic(dir / "bad.grid", "A=0\nB=0.5\nz0_re=0.5\nzz=1\n");
  const Run bad = run({"sweep", "--grid", (dir / "bad.grid").string(), "--out", (dir / "bad").string()});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("line 4") != std::string::npos);
  CHECK(run({"sweep", "--grid", (dir / "missing.grid").string(), "--out", (dir / "m").string()}).code == kExitIo);
}

TEST_CASE("OVERRIDE_OUT_DIR redirects relative outputs") {
  const fs::path dir = scratch_dir("override");
  ::setenv("OVERRIDE_OUT_DIR", dir.c_str(), 1);
  const Run r = run({"region", "--out", "inside.csv"});
  ::unsetenv("OVERRIDE_OUT_DIR");
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(dir / "inside.csv"));
}
