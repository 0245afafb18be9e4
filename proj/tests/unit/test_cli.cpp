#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "adk/io.hpp"
#include "cli.hpp"
#include "oracle.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = adk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Cli, DualityCount) {
  const auto r = run({"dualities", "--group", "3,3", "--count-only"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "48 total, 18 symmetric\n");
  const auto j = run({"dualities", "--group", "3,3", "--count-only", "--format", "json"});
  EXPECT_EQ(adk::Json::parse(j.out)["symmetric"], 18);
}

TEST(Cli, SubgroupListing) {
  const auto r = run({"group", "--group", "2,4", "--subgroups"});
  ASSERT_EQ(r.code, 0);
  const auto want = oracle::subgroups({2, 4}).size();
  EXPECT_EQ(want, 8u);
  EXPECT_NE(r.out.find(std::to_string(want) + " subgroups\n"), std::string::npos);
  const auto j = adk::Json::parse(run({"group", "--group", "2,4", "--subgroups", "--format", "json"}).out);
  EXPECT_EQ(j["subgroups"].size(), want);
}

TEST(Cli, PaperTableAdjointColumn) {
  const auto r = run({"paper-table", "3.3"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  // title, header, rule, 4 rows, rule, 2 rows, note
  ASSERT_EQ(ls.size(), 11u);
  auto cell = [](const std::string& line, std::size_t col) {
    std::istringstream in(line);
    std::string w;
    for (std::size_t i = 0; i <= col; ++i) in >> w;
    return w;
  };
  EXPECT_EQ(cell(ls[8], 0), "φ_4");
  EXPECT_EQ(cell(ls[8], 6), "φ_5");
  EXPECT_EQ(cell(ls[9], 0), "φ_5");
  EXPECT_EQ(cell(ls[9], 6), "φ_4");
}

TEST(Cli, PaperTablesMatchGoldens) {
  for (const char* id : {"3.3", "3.4", "4.4", "4.5", "4.11", "6.3-classes", "6.3-duals"}) {
    const auto r = run({"paper-table", id});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(std::string(ADK_GOLDEN_DIR) + "/" + id + ".txt")) << id;
    EXPECT_EQ(run({"table", std::string("example-") + id}).out, r.out);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"paper-table", "9.9"}).code, 1);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dualities"}).code, 2);
  EXPECT_EQ(run({"dualities", "--group", "2,4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"dualities", "--group", "1,4"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LimitReportsCardinality) {
  const auto r = run({"dual", "--group", "3,3", "--n", "3", "--code-gens", "100000", "--limit", "100"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("729"), std::string::npos) << r.err;
}

TEST(Cli, EnvironmentLimit) {
  ::setenv("ADK_LIMIT", "50", 1);
  const auto r = run({"dual", "--group", "2,4", "--n", "2", "--code-gens", "1001"});
  ::unsetenv("ADK_LIMIT");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("64"), std::string::npos) << r.err;
  EXPECT_EQ(run({"dual", "--group", "2,4", "--n", "2", "--code-gens", "1001"}).code, 0);
}

TEST(Cli, DualCode) {
  const auto r = run({"dual", "--group", "2,2", "--code-gens", "10", "--duality-index", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = adk::Json::parse(r.out);
  EXPECT_EQ(j["left"]["order"], 2);
  EXPECT_EQ(j["right"]["order"], 2);
  EXPECT_NE(j["left"], j["right"]);
  EXPECT_EQ(run({"dual", "--group", "2,2", "--code-gens", "10", "--duality-index", "6"}).code, 1);
}

TEST(Cli, MacWilliamsVerify) {
  for (const char* e : {"hamming", "complete", "both"}) {
    const auto r = run({"macwilliams", "verify", "--group", "2,4", "--n", "2", "--code-gens", "(10,01)", "--duality-index",
                        "4", "--enumerator", e, "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(adk::Json::parse(r.out)["holds"].get<bool>());
  }
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"filtration", "--group", "2,8"}).code, 0);
  EXPECT_EQ(run({"filtration", "--group", "6"}).code, 1);
  EXPECT_EQ(run({"congruence", "--group", "3,3", "--format", "json"}).code, 0);
  const auto d = run({"duals-table", "--group", "2,4", "--order", "2"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(lines(d.out).size(), 3u + 8u + 3u);
  const auto c = run({"construct-pair", "--group", "2,2,2", "--h-gens", "100", "--k-gens", "100", "010"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("symmetric"), std::string::npos);
  EXPECT_EQ(run({"construct-pair", "--group", "2,4", "--h-gens", "02", "--k-gens", "01"}).code, 1);
  const auto s = run({"construct-pair", "--group", "4,4", "--h-gens", "20", "02", "--k-gens", "20", "02", "--format", "json"});
  EXPECT_EQ(s.code, 0) << s.err;
}

TEST(Cli, JsonOutputsParse) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"dualities", "--group", "2,4", "--list"},
           {"duals-table", "--group", "2,2"},
           {"filtration", "--group", "9"},
           {"paper-table", "6.3-duals"}}) {
    auto a = args;
    a.insert(a.end(), {"--format", "json"});
    const auto r = run(a);
    EXPECT_EQ(r.code, 0);
    EXPECT_NO_THROW(adk::Json::parse(r.out));
  }
}
