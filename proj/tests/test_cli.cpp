#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "equicolor/cli.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json envelope() const { return json::parse(out); }
};

Outcome run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"equicolor"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = equicolor::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("equicolor_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST(CliThreshold, Kronecker) {
  const Outcome o = run({"threshold", "--family", "kronecker", "-m", "3", "-n", "7", "-r", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json e = o.envelope();
  EXPECT_EQ(e["schema_version"], "1");
  EXPECT_EQ(e["command"], "threshold");
  EXPECT_EQ(e["result"]["value"], 5);
  EXPECT_EQ(e["result"]["case"], "residue-small-gap");
  EXPECT_TRUE(e["result"]["theta"].is_null());
  EXPECT_EQ(e["result"]["gamma"]["trichotomy"], "less");
  EXPECT_EQ(e["result"]["canonical"]["swapped"], false);
}

TEST(CliThreshold, Multipartite) {
  const Outcome o = run({"threshold", "--family", "multipartite", "-m", "2", "-n", "10", "-r", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.envelope()["result"]["value"], 4);
  EXPECT_EQ(o.envelope()["result"]["theta"], 5);
}

TEST(CliThreshold, SwapsToCanonicalOrientation) {
  const Outcome o = run({"threshold", "-m", "7", "-n", "3", "-r", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json e = o.envelope();
  EXPECT_EQ(e["params"]["m"], 7);
  EXPECT_EQ(e["result"]["value"], 5);
  EXPECT_EQ(e["result"]["canonical"]["m"], 3);
  EXPECT_EQ(e["result"]["canonical"]["swapped"], true);
}

TEST(CliThreshold, Edgeless) {
  const Outcome o = run({"threshold", "-m", "1", "-n", "9", "-r", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.envelope()["result"]["value"], 1);
  EXPECT_EQ(o.envelope()["result"]["case"], "edgeless");
}

TEST(CliThreshold, TextFormat) {
  const Outcome o = run({"threshold", "-m", "2", "-n", "2", "-r", "1", "--format", "text"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto lines = lines_of(o.out);
  EXPECT_EQ(lines.front(), "schema_version: 1");
  EXPECT_NE(std::find(lines.begin(), lines.end(), "result.value: 2"), lines.end());
  EXPECT_NE(std::find(lines.begin(), lines.end(), "result.gamma.trichotomy: equal"), lines.end());
}

TEST(CliThreshold, UsageErrors) {
  EXPECT_EQ(run({"threshold", "-m", "0", "-n", "3", "-r", "1"}).code, 2);
  EXPECT_EQ(run({"threshold", "-m", "2", "-n", "3"}).code, 2);
  EXPECT_EQ(run({"threshold", "-m", "2", "-n", "3", "-r", "1", "--family", "petersen"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const Outcome bad = run({"threshold", "-m", "2", "-n", "3", "-r", "0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("r"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(CliDecide, Examples) {
  const Outcome no = run({"decide", "-m", "3", "-n", "7", "-r", "2", "-k", "4"});
  ASSERT_EQ(no.code, 0) << no.err;
  EXPECT_EQ(no.envelope()["result"]["colorable"], false);
  EXPECT_EQ(no.envelope()["result"]["reason"], "multipartite-condition-failed");

  const Outcome yes = run({"decide", "-m", "3", "-n", "7", "-r", "2", "-k", "3"});
  ASSERT_EQ(yes.code, 0) << yes.err;
  EXPECT_EQ(yes.envelope()["result"]["colorable"], true);
}

TEST(CliDecide, OracleCrossCheck) {
  const Outcome o = run({"decide", "-m", "3", "-n", "7", "-r", "2", "-k", "4", "--oracle"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.envelope()["result"]["oracle"]["colorable"], false);
  EXPECT_EQ(o.envelope()["result"]["oracle"]["agrees"], true);

  const Outcome m = run({"decide", "--family", "multipartite", "-m", "2", "-n", "10", "-r", "2", "-k", "3",
                         "--oracle"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.envelope()["result"]["colorable"], false);
}

TEST(CliDecide, OracleBudget) {
  EXPECT_EQ(run({"decide", "-m", "5", "-n", "6", "-r", "1", "-k", "8", "--oracle"}).code, 3);
  EXPECT_EQ(run({"decide", "-m", "2", "-n", "2", "-r", "1", "-k", "0"}).code, 2);

  ::setenv("EQUICOLOR_ORACLE_NODE_LIMIT", "1", 1);
  const int capped = run({"decide", "-m", "4", "-n", "5", "-r", "1", "-k", "7", "--oracle"}).code;
  ::setenv("EQUICOLOR_ORACLE_NODE_LIMIT", "lots", 1);
  const int malformed = run({"decide", "-m", "2", "-n", "2", "-r", "1", "-k", "2", "--oracle"}).code;
  ::unsetenv("EQUICOLOR_ORACLE_NODE_LIMIT");
  EXPECT_EQ(capped, 3);
  EXPECT_EQ(malformed, 2);
}

TEST(CliColor, SizesAndRefusal) {
  const Outcome o = run({"color", "-m", "2", "-n", "10", "-r", "2", "-k", "6"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json e = o.envelope();
  EXPECT_EQ(e["result"]["class_sizes"], json::parse("[2,2,4,4,4,4]"));
  EXPECT_EQ(e["result"]["valid"], true);

  const Outcome rows = run({"color", "-m", "2", "-n", "2", "-r", "1", "-k", "2"});
  ASSERT_EQ(rows.code, 0) << rows.err;
  EXPECT_EQ(rows.envelope()["result"]["coloring"], "equicolor v1\nm=2 n=2 k=2\n1: (1,1) (1,2)\n2: (2,1) (2,2)\n");

  const Outcome refused = run({"color", "-m", "3", "-n", "7", "-r", "2", "-k", "4"});
  EXPECT_EQ(refused.code, 4);
  EXPECT_NE(refused.err.find("floor(k/m)"), std::string::npos);
  EXPECT_TRUE(refused.out.empty());
}

TEST(CliColor, WritesFileThatVerifies) {
  TempDir dir;
  for (const char* k : {"3", "5", "9", "21", "22"}) {
    const std::string path = dir.file(std::string("c") + k + ".txt");
    const Outcome made = run({"color", "-m", "3", "-n", "7", "-r", "2", "-k", k, "-o", path.c_str()});
    ASSERT_EQ(made.code, 0) << made.err;
    EXPECT_EQ(made.envelope()["result"]["file"], path);
    const Outcome checked = run({"verify", "-r", "2", path.c_str()});
    ASSERT_EQ(checked.code, 0) << checked.err;
    EXPECT_EQ(checked.envelope()["result"]["valid"], true) << k;
  }
}

TEST(CliVerify, ThreeExamples) {
  TempDir dir;
  const std::string rows = dir.file("rows.txt");
  const std::string diagonals = dir.file("diag.txt");
  const std::string uneven = dir.file("uneven.txt");
  write_file(rows, "equicolor v1\nm=2 n=2 k=2\n1: (1,1) (1,2)\n2: (2,1) (2,2)\n");
  write_file(diagonals, "equicolor v1\nm=2 n=2 k=2\n1: (1,1) (2,2)\n2: (1,2) (2,1)\n");
  write_file(uneven, "equicolor v1\nm=2 n=4 k=3\n1: (1,1) (1,2) (1,3) (1,4)\n2: (2,1)\n3: (2,2) (2,3) (2,4)\n");

  EXPECT_EQ(run({"verify", "-r", "1", rows.c_str()}).envelope()["result"]["valid"], true);

  const json d = run({"verify", "-r", "1", diagonals.c_str()}).envelope();
  EXPECT_EQ(d["result"]["valid"], false);
  ASSERT_EQ(d["result"]["violations"].size(), 2u);
  EXPECT_EQ(d["result"]["violations"][0]["kind"], "adjacent-pair");
  EXPECT_EQ(d["result"]["violations"][0]["classes"], json::parse("[1]"));

  const json u = run({"verify", "-r", "1", uneven.c_str()}).envelope();
  EXPECT_EQ(u["result"]["valid"], false);
  EXPECT_EQ(u["result"]["violations"][0]["kind"], "imbalance");
  EXPECT_EQ(u["result"]["class_sizes"], json::parse("[4,1,3]"));
}

TEST(CliVerify, MalformedFile) {
  TempDir dir;
  const std::string path = dir.file("bad.txt");
  write_file(path, "equicolor v1\nm=2 n=2 k=2\n1: (1,1) (1,2)\n2: (2,1) (2,x)\n");
  const Outcome o = run({"verify", "-r", "1", path.c_str()});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("line 4"), std::string::npos) << o.err;

  write_file(path, "equicolor v1\nm=2 n=2 k=1\n1: (1,1) (5,5)\n");
  EXPECT_EQ(run({"verify", "-r", "1", path.c_str()}).code, 2);
  EXPECT_EQ(run({"verify", "-r", "1", dir.file("missing.txt").c_str()}).code, 2);
}

TEST(CliTable, RowsPastTheBoundAreEqual) {
  const Outcome o = run({"table", "-m", "2..4", "-n", "2..40", "-r", "2", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto lines = lines_of(o.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.front(),
            "m,n,r,kronecker,kronecker_case,kronecker_theta,gamma,trichotomy,multipartite,"
            "multipartite_theta,equal,equ_bound,clears_bound");
  // 39 + 38 + 37 rows.
  EXPECT_EQ(lines.size(), 1u + 39 + 38 + 37);
  int checked = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("2,", 0) != 0) continue;
    const int n = std::stoi(lines[i].substr(2));
    if (n < 20) continue;
    EXPECT_NE(lines[i].find(",true,20,true"), std::string::npos) << lines[i];
    ++checked;
  }
  EXPECT_EQ(checked, 21);
}

TEST(CliTable, KroneckerBeatsMultipartite) {
  const Outcome o = run({"table", "-m", "4..4", "-n", "7..7", "-r", "1..1", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json rows = o.envelope()["result"]["rows"];
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["kronecker"], 6);
  EXPECT_EQ(rows[0]["multipartite"], 16);
  EXPECT_EQ(rows[0]["equal"], false);
  EXPECT_TRUE(rows[0]["equ_bound"].is_null());
}

TEST(CliTable, EmptyRange) {
  const Outcome o = run({"table", "-m", "3..2", "-n", "2..5", "-r", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(lines_of(o.out).size(), 1u);
}

TEST(CliTable, SingleFamily) {
  const Outcome o = run({"table", "-m", "2", "-n", "3", "-r", "1", "--family", "multipartite"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto lines = lines_of(o.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "m,n,r,multipartite,multipartite_theta,equ_bound,clears_bound");
  EXPECT_EQ(lines[1], "2,3,1,4,1,,false");
}

TEST(CliTable, BadRanges) {
  EXPECT_EQ(run({"table", "-m", "1..3", "-n", "2..5", "-r", "1"}).code, 2);
  EXPECT_EQ(run({"table", "-m", "2..x", "-n", "2..5", "-r", "1"}).code, 2);
  EXPECT_EQ(run({"table", "-m", "2", "-n", "2", "-r", "0..1"}).code, 2);
}
