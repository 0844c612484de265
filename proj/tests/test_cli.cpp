#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "superchar/character_table.hpp"
#include "superchar/json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "superchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = superchar::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string("file:") + SUPERCHAR_TEST_DATA + "/" + name; }
std::string data_path(const char* name) { return std::string(SUPERCHAR_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, ChartabS3) {
  auto r = run({"chartab", "--group", "S3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto t = superchar::ingest_table(r.out, superchar::catalog_group("S3"));
  std::multiset<long> degrees;
  for (std::size_t i = 0; i < t->size(); ++i) degrees.insert(t->degree(i));
  EXPECT_EQ(degrees, (std::multiset<long>{1, 1, 2}));
}

TEST(Cli, ChartabC2) {
  auto r = run({"chartab", "--group", "C2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = superchar::Json::parse(r.out);
  EXPECT_EQ(j["characters"].size(), 2u);
  EXPECT_EQ(j["classes"].size(), 2u);
}

TEST(Cli, TextAndJsonCarryTheSameTable) {
  auto text = run({"chartab", "--group", "A4"});
  auto json = run({"chartab", "--group", "A4", "--format", "json"});
  auto t = superchar::ingest_table(text.out, superchar::catalog_group("A4"));
  auto j = superchar::Json::parse(json.out);
  for (std::size_t chi = 0; chi < t->size(); ++chi)
    for (std::size_t c = 0; c < t->num_classes(); ++c)
      EXPECT_EQ(j["characters"][chi]["values"][c], t->value(chi, c).to_string());
}

TEST(Cli, EnumerateCounts) {
  for (auto [group, count] : {std::pair{"S3", 2}, {"C4", 3}, {"C2", 1}}) {
    auto r = run({"enumerate", "--group", group, "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(superchar::Json::parse(r.out)["count"], count) << group;
    auto text = run({"enumerate", "--group", group});
    EXPECT_NE(text.out.find("count " + std::to_string(count)), std::string::npos) << group;
  }
}

TEST(Cli, AnalyzeSpotValues) {
  auto q8 = run({"analyze", "--group", "Q8", "--sct", "finest"});
  ASSERT_EQ(q8.code, 0) << q8.err;
  EXPECT_NE(q8.out.find("VZ: true"), std::string::npos);
  EXPECT_NE(q8.out.find("U(S) = {0,2}"), std::string::npos);
  EXPECT_NE(q8.out.find("[G,S] = {0,2}"), std::string::npos);
  EXPECT_NE(q8.out.find("Z(S) = {0,2}"), std::string::npos);
  EXPECT_NE(q8.out.find("nilpotence class: 2"), std::string::npos);

  auto s3 = run({"analyze", "--group", "S3", "--sct", "finest", "--format", "json"});
  auto j = superchar::Json::parse(s3.out)["analysis"];
  EXPECT_EQ(j["v_theory"]["order"], 3);
  bool pair = false;
  for (const auto& n : j["s_normal"])
    if (n["order"] == 3) pair = n["camina_pair"]["holds"];
  EXPECT_TRUE(pair);

  auto c4 = run({"analyze", "--group", "C4", "--sct", "coarsest", "--format", "json"});
  auto k = superchar::Json::parse(c4.out)["analysis"];
  EXPECT_EQ(k["center"]["order"], 1);
  EXPECT_EQ(k["v_theory"]["order"], 4);
  EXPECT_EQ(k["vz"]["holds"], false);
}

TEST(Cli, AnalyzeByIndexMatchesEnumeration) {
  auto r = run({"analyze", "--group", "C4", "--sct", "index:1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(superchar::Json::parse(r.out)["analysis"]["theory"]["size"], 3);
  EXPECT_EQ(run({"analyze", "--group", "C4", "--sct", "index:9"}).code, 2);
  EXPECT_EQ(run({"analyze", "--group", "C4", "--sct", "middle"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  auto r = run({"verify", "--group", "S3", "--all-scts", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = superchar::Json::parse(r.out);
  EXPECT_EQ(j["groups"][0]["theory_count"], 2);
  EXPECT_EQ(j["summary"]["fail"], 0);
  auto missing = run({"verify", "--group", "file:missing.tbl"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", "other"}).code, 2);
}

TEST(Cli, NegativePaths) {
  auto loop = run({"chartab", "--group", data("loop5.grp")});
  EXPECT_EQ(loop.code, 2);
  EXPECT_NE(loop.err.find("associative"), std::string::npos);
  auto corrupt = run({"chartab", "--group", "S3", "--table", data_path("s3_corrupt.tbl")});
  EXPECT_EQ(corrupt.code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"chartab", "--group", "S3", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"chartab", "--group", "S4", "--max-order", "10"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FileAndPermutationGroups) {
  auto c6 = run({"enumerate", "--group", data("c6.grp"), "--format", "json"});
  ASSERT_EQ(c6.code, 0) << c6.err;
  EXPECT_EQ(superchar::Json::parse(c6.out)["count"], 7);
  auto s3 = run({"enumerate", "--group", std::string("perm:") + data_path("s3.perm"), "--format", "json"});
  ASSERT_EQ(s3.code, 0) << s3.err;
  EXPECT_EQ(superchar::Json::parse(s3.out)["count"], 2);
}

TEST(Cli, WritesToOutFile) {
  auto path = std::filesystem::temp_directory_path() / "superchar_cli_test.json";
  auto r = run({"chartab", "--group", "C3", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = superchar::Json::parse(in);
  EXPECT_EQ(j["group"], "C3");
  std::filesystem::remove(path);
}
