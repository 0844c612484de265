#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superchar/json.hpp"
#include "superchar/vanishing.hpp"

using namespace superchar;

namespace {

TablePtr table(const char* name) { return dixon_character_table(catalog_group(name)); }

std::vector<SuperTheory> theories(const char* name) {
  auto t = table(name);
  if (t->size() <= 9) return enumerate_scts(t);
  return {finest(t), coarsest(t)};
}

const char* const kGroups[] = {"C4", "S3", "D4", "Q8", "D5", "A4", "C2xC4", "D6", "Q16", "D8", "S4"};

}  // namespace

TEST(SpotValues, FinestS3) {
  auto s = finest(table("S3"));
  Analysis a(s);
  auto a3 = oracle::derived_subgroup(s.group());
  ASSERT_EQ(a3.size(), 3u);
  EXPECT_EQ(oracle::to_set(a.commutator()), a3);
  EXPECT_TRUE(a.center().is_trivial());
  EXPECT_EQ(oracle::to_set(a.v_theory()), a3);
  auto a3_sub = a.commutator();
  EXPECT_EQ(oracle::to_set(a.u_rel(a3_sub)), a3);
  EXPECT_TRUE(a.camina_pair(a3_sub).holds);
  EXPECT_TRUE(a.camina_pair(a3_sub).agree());
  EXPECT_TRUE(a.s_gcp(a3_sub).holds);
  EXPECT_TRUE(a.s_gcp(a3_sub).agree());
}

TEST(SpotValues, FinestQ8) {
  auto s = finest(table("Q8"));
  Analysis a(s);
  auto z = oracle::center(s.group());
  ASSERT_EQ(z.size(), 2u);
  EXPECT_TRUE(a.vz().holds);
  EXPECT_TRUE(a.vz().agree());
  EXPECT_EQ(oracle::to_set(a.v_theory()), z);
  EXPECT_EQ(oracle::to_set(a.center()), z);
  EXPECT_EQ(oracle::to_set(a.commutator()), z);
  EXPECT_EQ(oracle::to_set(a.u_theory()), z);
  EXPECT_EQ(a.nilpotence_class(), 2u);
  // The nonlinear supercharacter: sigma(1) = 4 = ||X|| sqrt(|G:Z(S)|) = 2 * 2.
  for (std::size_t p = 0; p < s.size(); ++p)
    if (s.degree(p) != 1) {
      EXPECT_EQ(s.degree(p), 4);
      EXPECT_EQ(s.norm_sq(p), 4);
    }
  EXPECT_TRUE(a.scd_check().ok());
}

TEST(SpotValues, CoarsestHasNoCaminaElements) {
  for (const char* name : {"C3", "C4", "S3", "Q8", "A4", "D8", "S4", "C3xC3"}) {
    auto s = coarsest(table(name));
    Analysis a(s);
    EXPECT_TRUE(a.center().is_trivial()) << name;
    EXPECT_TRUE(a.commutator().is_whole()) << name;
    EXPECT_TRUE(a.v_theory().is_whole()) << name;
    EXPECT_FALSE(a.vz().holds) << name;
    for (Element g = 0; g < s.group().order(); ++g) {
      auto v = a.camina_element(g);
      EXPECT_FALSE(v.holds) << name << " g=" << g;
      EXPECT_TRUE(v.agree()) << name;
    }
  }
}

TEST(VanishingOff, VRelMatchesOracle) {
  for (const char* name : kGroups)
    for (const auto& s : theories(name)) {
      Analysis a(s);
      for (const auto& n : a.s_normal()) {
        EXPECT_EQ(oracle::to_set(a.v_rel(n)), oracle::v_rel(s, oracle::to_set(n))) << name;
        EXPECT_EQ(a.v_rel_product(n), a.v_rel(n)) << name;
      }
      EXPECT_EQ(oracle::to_set(a.v_theory()), oracle::v_rel(s, oracle::to_set(a.commutator()))) << name;
    }
}

TEST(VanishingOff, URelMatchesOracle) {
  for (const char* name : {"S3", "D4", "Q8", "A4", "D5", "C2xC4"})
    for (const auto& s : theories(name)) {
      Analysis a(s);
      for (const auto& n : a.s_normal())
        EXPECT_EQ(oracle::to_set(a.u_rel(n)), oracle::u_rel(s, oracle::to_set(n))) << name;
    }
}

TEST(Camina, ElementsMatchCosetOracle) {
  for (const char* name : kGroups)
    for (const auto& s : theories(name)) {
      Analysis a(s);
      for (Element g = 0; g < s.group().order(); ++g) {
        auto v = a.camina_element(g);
        EXPECT_EQ(v.holds, oracle::camina_element(s, g)) << name << " g=" << g;
        EXPECT_TRUE(v.agree()) << name << " " << v.disagreement();
      }
    }
}

TEST(Camina, GcpAndPairMatchDefinitions) {
  for (const char* name : kGroups)
    for (const auto& s : theories(name)) {
      Analysis a(s);
      const auto& g = s.group();
      auto y = oracle::blocks_of(s);
      for (const auto& n : a.s_normal()) {
        auto nset = oracle::to_set(n);
        bool gcp = true, pair = true;
        for (Element x = 0; x < g.order(); ++x)
          if (!nset.count(x) && !oracle::camina_element(s, x)) gcp = false;
        for (const auto& b : y) {
          if (nset.count(b.front())) continue;
          oracle::Set bs(b.begin(), b.end());
          if (oracle::product(g, bs, nset) != bs) pair = false;
        }
        auto vg = a.s_gcp(n);
        auto vp = a.camina_pair(n);
        EXPECT_EQ(vg.holds, gcp) << name;
        EXPECT_EQ(vp.holds, pair) << name;
        EXPECT_EQ(vg.vacuous, n.is_whole()) << name;
        EXPECT_TRUE(vg.agree()) << name << " " << vg.disagreement();
        EXPECT_TRUE(vp.agree()) << name << " " << vp.disagreement();
      }
    }
}

TEST(VZ, DefinitionMatchesOracle) {
  for (const char* name : kGroups)
    for (const auto& s : theories(name)) {
      Analysis a(s);
      auto z = oracle::to_set(a.center());
      auto gs = oracle::to_set(a.commutator());
      bool expect = true;
      for (const auto& row : oracle::sigma_values(s)) {
        if (oracle::subset(gs, oracle::kernel(row))) continue;
        for (Element g = 0; g < s.group().order(); ++g)
          if (!z.count(g) && !row[g].is_zero()) expect = false;
      }
      auto v = a.vz();
      EXPECT_EQ(v.holds, expect) << name;
      EXPECT_TRUE(v.agree()) << name << " " << v.disagreement();
    }
}

TEST(Series, VSeriesStartsAtVAndDescends) {
  auto s = finest(table("D8"));
  Analysis a(s);
  const auto& v = a.v_series();
  EXPECT_EQ(v.terms.front(), a.v_theory());
  for (std::size_t i = 1; i < v.terms.size(); ++i) EXPECT_TRUE(v.terms[i].proper_in(v.terms[i - 1]));
  EXPECT_TRUE(v.terms.back().is_trivial());
}

TEST(UChain, DescendsToFixedPoint) {
  for (const auto& s : theories("D4")) {
    Analysis a(s);
    for (const auto& n : a.s_normal()) {
      auto chain = a.u_chain(n);
      EXPECT_EQ(a.u_rel(chain.terms.back()), chain.terms.back());
    }
  }
}

TEST(Wrappers, AgreeWithAnalysis) {
  auto s = finest(table("D4"));
  Analysis a(s);
  EXPECT_EQ(v_theory(s), a.v_theory());
  EXPECT_EQ(u_theory(s), a.u_theory());
  EXPECT_EQ(is_vz(s).holds, a.vz().holds);
  for (const auto& n : a.s_normal()) {
    EXPECT_EQ(v_rel(s, n), a.v_rel(n));
    EXPECT_EQ(u_rel(s, n), a.u_rel(n));
    EXPECT_EQ(is_s_gcp(s, n).holds, a.s_gcp(n).holds);
    EXPECT_TRUE(u_kernel_check(s, n).ok());
    for (Element g = 0; g < s.group().order(); ++g) EXPECT_TRUE(u_membership_check(s, n, g));
  }
  for (std::size_t p = 0; p < s.size(); ++p) EXPECT_EQ(vanish_off(s.supercharacter(p)), a.vanish_off(p));
}

// Invariants over random (group, theory, N, M) draws.
TEST(VanishingProperties, RandomTuples) {
  std::mt19937 rng(8675309);
  const char* names[] = {"C6", "D4", "Q8", "C2xC4", "A4", "D5", "D6", "C3xC3", "D8", "Q16"};
  std::uniform_int_distribution<std::size_t> pick_group(0, std::size(names) - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const char* name = names[pick_group(rng)];
    auto all = theories(name);
    std::uniform_int_distribution<std::size_t> pick_theory(0, all.size() - 1);
    const auto& s = all[pick_theory(rng)];
    Analysis a(s);
    const auto& normals = a.s_normal();
    std::uniform_int_distribution<std::size_t> pick(0, normals.size() - 1);
    const auto& n = normals[pick(rng)];
    const auto& m = normals[pick(rng)];
    const auto& vn = a.v_rel(n);
    const auto& un = a.u_rel(n);
    // V(S|N) and U(S|N) are S-normal; N <= V(S|N) unless Irr(S|N) is empty.
    EXPECT_TRUE(is_s_normal(s, vn)) << name;
    EXPECT_TRUE(is_s_normal(s, un)) << name;
    if (!a.irr_over(n).empty()) EXPECT_TRUE(n.contained_in(vn)) << name;
    // Monotonicity in N.
    if (m.contained_in(n)) {
      EXPECT_TRUE(a.v_rel(m).contained_in(vn)) << name;
      EXPECT_TRUE(a.u_rel(m).contained_in(un)) << name;
    }
    // Galois correspondence between U and V.
    EXPECT_EQ(m.contained_in(un), a.v_rel(m).contained_in(n)) << name;
    // [G,S] <= V(S) and U(S) <= V(S) when not S-abelian.
    EXPECT_TRUE(a.commutator().contained_in(a.v_theory())) << name;
    if (!a.s_abelian()) EXPECT_TRUE(a.u_theory().contained_in(a.v_theory())) << name;
    // Camina elements lie outside [G,S] unless [G,S] = 1.
    if (!a.commutator().is_trivial())
      for (Element g = 0; g < s.group().order(); ++g)
        if (a.camina_element(g).holds) EXPECT_FALSE(a.commutator().contains(g)) << name;
  }
}

// The raw nonvanishing set versus the subgroup it generates.
TEST(Vanishing, NonvanishingClosureMatchesOracle) {
  std::size_t open = 0;
  for (const char* name : kGroups)
    for (const auto& s : theories(name)) {
      Analysis a(s);
      auto rows = oracle::sigma_values(s);
      auto flags = analysis_json(a)["nonvanishing_is_subgroup"];
      ASSERT_EQ(flags.size(), s.size());
      for (std::size_t p = 0; p < s.size(); ++p) {
        oracle::Set raw;
        for (Element g = 0; g < s.group().order(); ++g)
          if (!rows[p][g].is_zero()) raw.insert(g);
        bool closed = oracle::is_subgroup(s.group(), raw);
        EXPECT_EQ(flags[p].get<bool>(), closed) << name;
        EXPECT_EQ(oracle::to_set(a.vanish_off(p)), oracle::closure(s.group(), raw)) << name;
        if (!closed) ++open;
      }
    }
  RecordProperty("open_sets", static_cast<int>(open));
}
