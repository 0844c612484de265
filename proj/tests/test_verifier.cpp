#include <gtest/gtest.h>

#include <set>

#include "superchar/json.hpp"
#include "superchar/verifier.hpp"

using namespace superchar;

namespace {

TablePtr table(const char* name) { return dixon_character_table(catalog_group(name)); }

std::size_t count(const std::vector<TheoremReport>& reports, Status status) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.status == status;
  return n;
}

const TheoremReport* find(const std::vector<TheoremReport>& reports, const std::string& id,
                          const std::string& scope) {
  for (const auto& r : reports)
    if (r.theorem_id == id && r.scope == scope) return &r;
  return nullptr;
}

}  // namespace

TEST(Suite, ThirtyOneStableIds) {
  const auto& ids = theorem_ids();
  EXPECT_EQ(ids.size(), 31u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), 31u);
}

TEST(Suite, EveryIdReportedInOrder) {
  for (const char* name : {"C2", "S3", "Q8", "D8"}) {
    auto reports = run_suite(finest(table(name)));
    std::vector<std::string> seen;
    for (const auto& r : reports)
      if (seen.empty() || seen.back() != r.theorem_id) seen.push_back(r.theorem_id);
    EXPECT_EQ(seen, theorem_ids()) << name;
    EXPECT_EQ(count(reports, Status::fail), 0u) << name;
  }
}

TEST(Suite, VacuousAndNotApplicableStatuses) {
  auto reports = run_suite(finest(table("S3")));
  // (G,G) is a GCP only vacuously.
  const auto* whole = find(reports, "T-corgcp", "N={0,1,2,3,4,5}");
  ASSERT_NE(whole, nullptr);
  EXPECT_EQ(whole->status, Status::vacuous);
  // S3 is not S-nilpotent.
  const auto* cls = find(reports, "C-class", "theory");
  ASSERT_NE(cls, nullptr);
  EXPECT_EQ(cls->status, Status::not_applicable);
  const auto* hyper = find(reports, "C-hyper", "theory");
  ASSERT_NE(hyper, nullptr);
  EXPECT_EQ(hyper->status, Status::pass);
}

TEST(Suite, SAbelianTheoriesSkipNonabelianStatements) {
  auto reports = run_suite(finest(table("C4")));
  for (const char* id : {"T-ugroupp", "L-ucap", "T-final", "T-vznilp", "L-scd"}) {
    for (const auto& r : reports)
      if (r.theorem_id == id) EXPECT_EQ(r.status, Status::not_applicable) << id;
  }
}

TEST(Corpus, SmallCatalogHasNoFailures) {
  CorpusOptions opts;
  auto report = run_corpus({"C4", "S3", "Q8", "D4"}, opts);
  ASSERT_EQ(report.groups.size(), 4u);
  EXPECT_EQ(report.groups[0].theory_count, 3u);
  EXPECT_EQ(report.groups[1].theory_count, 2u);
  EXPECT_EQ(report.groups[2].theory_count, 9u);
  EXPECT_EQ(report.groups[3].theory_count, 9u);
  EXPECT_EQ(report.summary.fail, 0u);
  EXPECT_GT(report.summary.pass, 0u);
  auto again = summarize(report.groups);
  EXPECT_EQ(again.pass, report.summary.pass);
}

TEST(Corpus, WithoutEnumerationUsesFinestAndCoarsest) {
  CorpusOptions opts;
  opts.enumerate = false;
  auto report = run_corpus({"C2", "S4"}, opts);
  EXPECT_EQ(report.groups[0].theory_count, 1u);  // finest = coarsest for C2
  EXPECT_EQ(report.groups[1].theory_count, 2u);
  EXPECT_TRUE(report.groups[1].notice.empty());
}

TEST(Corpus, GuardFallsBackWithNotice) {
  CorpusOptions opts;
  opts.max_irreducibles = 4;
  auto report = run_corpus({"Q8"}, opts);
  EXPECT_EQ(report.groups[0].theory_count, 2u);
  EXPECT_FALSE(report.groups[0].notice.empty());
  opts.dixon.max_order = 4;
  auto skipped = run_corpus({"Q8"}, opts);
  EXPECT_EQ(skipped.groups[0].theory_count, 0u);
  EXPECT_NE(skipped.groups[0].notice.find("skipped"), std::string::npos);
}

TEST(Corpus, DeterministicAcrossJobCounts) {
  CorpusOptions one, four;
  four.jobs = 4;
  auto a = to_json(run_corpus({"C2xC4", "D6", "Q16"}, one)).dump();
  auto b = to_json(run_corpus({"C2xC4", "D6", "Q16"}, four)).dump();
  EXPECT_EQ(a, b);
}
