#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "superchar/error.hpp"
#include "superchar/structure.hpp"
#include "superchar/supertheory.hpp"

using namespace superchar;

namespace {

TablePtr table(const char* name) { return dixon_character_table(catalog_group(name)); }

std::set<oracle::Partition> enumerated(const TablePtr& t, EnumerateOptions opts = {}) {
  std::set<oracle::Partition> out;
  for (const auto& s : enumerate_scts(t, opts)) out.insert(oracle::blocks_of(s));
  return out;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_scts(table("C2")).size(), 1u);
  EXPECT_EQ(enumerate_scts(table("S3")).size(), 2u);
  EXPECT_EQ(enumerate_scts(table("C4")).size(), 3u);
}

// Every partition of G \ {1} paired with every partition of Irr(G).
TEST(Enumerate, MatchesExhaustiveSearchOverAllPartitions) {
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "C5", "S3", "C6"}) {
    auto t = table(name);
    EXPECT_EQ(enumerated(t), oracle::all_theories(*t, false)) << name;
  }
}

// Y restricted to unions of conjugacy classes, for the groups of order 8-10.
TEST(Enumerate, MatchesExhaustiveSearchOverClassUnions) {
  for (const char* name : {"D4", "Q8", "D5", "A4"}) {
    auto t = table(name);
    EXPECT_EQ(enumerated(t), oracle::all_theories(*t, true)) << name;
  }
}

TEST(Enumerate, PruningAndJobsDoNotChangeTheResult) {
  for (const char* name : {"C2xC4", "D6", "Q8"}) {
    auto t = table(name);
    auto base = enumerate_scts(t);
    EnumerateOptions pruned;
    pruned.prune_principal = true;
    pruned.jobs = 3;
    auto other = enumerate_scts(t, pruned);
    ASSERT_EQ(base.size(), other.size()) << name;
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_TRUE(base[i] == other[i]) << name;
  }
}

TEST(Enumerate, GuardAndEnvironment) {
  EnumerateOptions small;
  small.max_irreducibles = 4;
  EXPECT_THROW(enumerate_scts(table("Q8"), small), GuardError);
  ::setenv("SUPERCHAR_MAX_BELL", "7", 1);
  EXPECT_EQ(max_irreducibles_from_env(), 7u);
  ::setenv("SUPERCHAR_MAX_BELL", "junk", 1);
  EXPECT_THROW(max_irreducibles_from_env(3), InputError);
  ::unsetenv("SUPERCHAR_MAX_BELL");
  EXPECT_EQ(max_irreducibles_from_env(), 12u);
}

TEST(Enumerate, OrderedByPartsDescending) {
  auto all = enumerate_scts(table("C2xC4"));
  ASSERT_EQ(all.size(), 28u);
  EXPECT_EQ(all.front().size(), 8u);
  EXPECT_EQ(all.back().size(), 2u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GE(all[i - 1].size(), all[i].size());
}

TEST(Theory, FinestAndCoarsest) {
  auto t = table("S3");
  auto f = finest(t);
  auto c = coarsest(t);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(oracle::blocks_of(f), oracle::canonical(oracle::conjugacy_classes(t->group())));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.degree(1), Rational(5));
  EXPECT_THROW(coarsest(table("C1")), PreconditionError);
}

TEST(Theory, ConstructionFromEitherPartition) {
  auto t = table("C4");
  for (const auto& s : enumerate_scts(t)) {
    auto from_x = sct_from_character_partition(t, s.xparts());
    ASSERT_TRUE(from_x);
    EXPECT_TRUE(*from_x == s);
    auto from_y = sct_from_class_partition(t, s.yparts());
    ASSERT_TRUE(from_y);
    EXPECT_EQ(from_y->xparts(), s.xparts());
  }
  // {chi_1, chi_2} | {chi_0, chi_3} does not give a theory.
  EXPECT_FALSE(sct_from_character_partition(t, {{0, 3}, {1, 2}}));
}

TEST(Theory, ClassPartitionPreconditions) {
  auto t = table("S3");
  // Splits the class of transpositions.
  ElementPartition bad(6, {{0}, {1}, {2, 3, 4, 5}});
  EXPECT_THROW(sct_from_class_partition(t, bad), PreconditionError);
}

TEST(Theory, SupercharacterValuesMatchTheTable) {
  for (const char* name : {"Q8", "D5", "C3xC3"}) {
    for (const auto& s : enumerate_scts(table(name))) {
      auto direct = oracle::sigma_values(s);
      for (std::size_t p = 0; p < s.size(); ++p) {
        auto sigma = s.supercharacter(p);
        for (Element g = 0; g < s.group().order(); ++g) EXPECT_EQ(sigma.at(g), direct[p][g]) << name;
        EXPECT_EQ(sigma.degree(), s.norm_sq(p)) << name;
      }
      EXPECT_TRUE(check_definition(s).ok()) << name;
      EXPECT_TRUE(oracle::is_theory(s.table(), s.xparts(), oracle::blocks_of(s))) << name;
    }
  }
}

TEST(Restriction, DeflationAndSubquotientAreTheories) {
  for (const char* name : {"D4", "Q8", "A4", "D6"}) {
    for (const auto& s : enumerate_scts(table(name))) {
      for (const auto& n : s_normal_subgroups(s)) {
        auto r = restriction(s, n);
        EXPECT_EQ(r.theory.group().order(), n.order());
        EXPECT_TRUE(check_definition(r.theory).ok()) << name;
        auto d = deflation(s, n);
        EXPECT_EQ(d.theory.group().order(), s.group().order() / n.order());
        EXPECT_TRUE(check_definition(d.theory).ok()) << name;
        // Deflated classes are the images of the S-classes.
        for (Element g = 0; g < s.group().order(); ++g) {
          ElementSet image = d.quotient.image(s.s_class_set(g));
          EXPECT_EQ(image, d.theory.s_class_set(d.quotient.projection[g])) << name;
        }
        auto sq = subquotient(s, n, Subgroup::trivial(s.group()));
        EXPECT_EQ(sq.theory.theory.size(), r.theory.size()) << name;
      }
    }
  }
}

TEST(Products, StarConstructionIsStarProduct) {
  for (const char* name : {"D4", "Q8", "C2xC4", "S4"}) {
    auto t = table(name);
    std::vector<SuperTheory> theories;
    if (t->size() <= 8)
      theories = enumerate_scts(t);
    else
      theories = {finest(t), coarsest(t)};
    for (const auto& s : theories)
      for (const auto& n : s_normal_subgroups(s)) {
        auto star = star_construct(s, n);
        EXPECT_TRUE(is_star_product(star, n)) << name;
        EXPECT_TRUE(is_coarsening(star.yparts(), s.yparts())) << name;
        if (is_star_product(s, n)) EXPECT_TRUE(star == s) << name;
        for (const auto& m : s_normal_subgroups(s)) {
          if (!m.contained_in(n)) continue;
          auto coarse = delta_coarsen(s, m, n);
          if (coarse) EXPECT_TRUE(is_delta_product(*coarse, m, n)) << name;
          if (is_delta_product(s, m, n)) {
            ASSERT_TRUE(coarse) << name;
            EXPECT_TRUE(*coarse == s) << name;
          }
        }
      }
  }
}

// Star product over N means every S-class outside N is a union of N-cosets.
TEST(Products, PredicateMatchesCosetDefinition) {
  for (const char* name : {"D4", "Q8", "D5"}) {
    for (const auto& s : enumerate_scts(table(name))) {
      const auto& g = s.group();
      auto y = oracle::blocks_of(s);
      for (const auto& n : s_normal_subgroups(s)) {
        auto nset = oracle::to_set(n);
        bool expect = true;
        for (const auto& b : y) {
          if (nset.count(b.front())) continue;
          oracle::Set bs(b.begin(), b.end());
          if (oracle::product(g, bs, nset) != bs) expect = false;
        }
        EXPECT_EQ(is_star_product(s, n), expect) << name;
      }
    }
  }
}

// Randomised orthogonality over every enumerated theory of a random group.
TEST(TheoryProperties, RowAndColumnOrthogonality) {
  std::mt19937 rng(424242);
  const char* names[] = {"C6", "D4", "Q8", "C2xC4", "A4", "D6", "C3xC3", "D8", "Q16"};
  std::uniform_int_distribution<std::size_t> pick_group(0, std::size(names) - 1);
  for (int trial = 0; trial < 12; ++trial) {
    auto t = table(names[pick_group(rng)]);
    auto all = enumerate_scts(t);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const auto& s = all[pick(rng)];
    EXPECT_TRUE(check_row_orthogonality(s).ok());
    std::uniform_int_distribution<Element> elem(0, static_cast<Element>(t->group().order() - 1));
    for (int k = 0; k < 20; ++k) {
      Element g = elem(rng), h = elem(rng);
      auto col = check_column_orthogonality(s, g, h);
      EXPECT_TRUE(col.passed) << t->group().label();
      bool same = s.class_of(g) == s.class_of(h);
      Rational expect = same ? Rational(static_cast<long>(t->group().order())) / static_cast<long>(s.s_class(g).size())
                             : Rational(0);
      EXPECT_EQ(col.expected, expect);
    }
    // sum over parts of sigma(1) = |G|
    Rational total = 0;
    for (std::size_t p = 0; p < s.size(); ++p) total += s.degree(p);
    EXPECT_EQ(total, Rational(static_cast<long>(t->group().order())));
  }
}
