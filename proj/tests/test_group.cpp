#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superchar/error.hpp"
#include "superchar/group.hpp"

using namespace superchar;

namespace {

struct CatalogCase {
  const char* name;
  std::size_t order;
  std::size_t classes;
};

const CatalogCase kCatalog[] = {
    {"C2", 2, 2},   {"C3", 3, 3},    {"C4", 4, 4},   {"C5", 5, 5},  {"C6", 6, 6},   {"C2xC2", 4, 4},
    {"C8", 8, 8},   {"C2xC4", 8, 8}, {"C2^3", 8, 8}, {"S3", 6, 3},  {"D4", 8, 5},   {"Q8", 8, 5},
    {"D5", 10, 4},  {"D6", 12, 6},   {"A4", 12, 4},  {"C3xC3", 9, 9}, {"D8", 16, 7}, {"Q16", 16, 7},
    {"S4", 24, 5},
};

}  // namespace

TEST(Catalog, OrdersAndClassCountsMatchBruteForce) {
  for (const auto& c : kCatalog) {
    auto g = catalog_group(c.name);
    EXPECT_EQ(g->order(), c.order) << c.name;
    auto brute = oracle::conjugacy_classes(*g);
    EXPECT_EQ(brute.size(), c.classes) << c.name;
    EXPECT_EQ(oracle::canonical(conjugacy_classes(*g).blocks()), oracle::canonical(brute)) << c.name;
  }
}

TEST(Catalog, UnknownNameIsInputError) {
  EXPECT_THROW(catalog_group("X7"), InputError);
  EXPECT_THROW(load_group("file:/nonexistent/table.grp"), InputError);
}

TEST(GroupTable, RejectsNonAssociativeLoop) {
  std::string text = "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  EXPECT_THROW(parse_group_table(text, "loop"), InputError);
}

TEST(GroupTable, RejectsNonLatinSquare) {
  EXPECT_THROW(parse_group_table("order 2\n0 1\n1 1\n", "bad"), InputError);
  EXPECT_THROW(parse_group_table("order 2\n0 1\n1\n", "short"), InputError);
}

TEST(GroupTable, FormatRoundTrips) {
  auto g = catalog_group("D4");
  auto h = parse_group_table(format_group_table(*g), "D4");
  for (Element a = 0; a < g->order(); ++a)
    for (Element b = 0; b < g->order(); ++b) EXPECT_EQ(g->mul(a, b), h->mul(a, b));
}

TEST(Permutations, S3FromGeneratorsHasThreeClasses) {
  auto g = group_from_permutations("S3", parse_permutations("(1 2 3)\n(1 2)\n"));
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(oracle::conjugacy_classes(*g).size(), 3u);
  EXPECT_EQ(oracle::center(*g).size(), 1u);
}

TEST(Subgroups, GeneratedSubgroupMatchesClosure) {
  std::mt19937 rng(7);
  for (const char* name : {"S4", "D8", "Q16", "C2xC4"}) {
    auto g = catalog_group(name);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
    for (int trial = 0; trial < 30; ++trial) {
      ElementSet seed(g->order());
      oracle::Set s;
      for (int k = 0; k < 2; ++k) {
        Element e = pick(rng);
        seed.insert(e);
        s.insert(e);
      }
      EXPECT_EQ(oracle::to_set(generated_subgroup(*g, seed)), oracle::closure(*g, s)) << name;
    }
  }
}

TEST(Quotients, QuotientByCenterOfQ8IsKleinFour) {
  auto g = catalog_group("Q8");
  auto z = oracle::center(*g);
  ElementSet n(g->order());
  for (Element e : z) n.insert(e);
  auto q = quotient_group(g, n);
  EXPECT_EQ(q.group->order(), 4u);
  for (Element a = 0; a < 4; ++a) EXPECT_EQ(q.group->mul(a, a), 0u);
  // The projection is a homomorphism.
  for (Element a = 0; a < g->order(); ++a)
    for (Element b = 0; b < g->order(); ++b)
      EXPECT_EQ(q.projection[g->mul(a, b)], q.group->mul(q.projection[a], q.projection[b]));
}

TEST(Quotients, NonNormalSubgroupIsRejected) {
  auto g = catalog_group("S3");
  // A subgroup of order 2 generated by a transposition.
  for (Element e = 1; e < g->order(); ++e)
    if (g->element_order(e) == 2) {
      EXPECT_THROW(quotient_group(g, generated_subgroup(*g, ElementSet(6, {e})).members()), PreconditionError);
      break;
    }
}

TEST(Properties, ElementOrdersDivideGroupOrder) {
  std::mt19937 rng(11);
  for (const auto& c : kCatalog) {
    auto g = catalog_group(c.name);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
    for (int trial = 0; trial < 20; ++trial) {
      Element a = pick(rng), b = pick(rng), x = pick(rng);
      EXPECT_EQ(g->order() % g->element_order(a), 0u);
      EXPECT_EQ(g->power(a, static_cast<long long>(g->element_order(a))), 0u);
      EXPECT_EQ(g->mul(a, g->inv(a)), 0u);
      // (ab)^x = a^x b^x
      EXPECT_EQ(g->conj(g->mul(a, b), x), g->mul(g->conj(a, x), g->conj(b, x)));
    }
  }
}
