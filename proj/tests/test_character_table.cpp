#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "superchar/character_table.hpp"
#include "superchar/error.hpp"

using namespace superchar;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(SUPERCHAR_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Row multiset of a table, as display strings.
std::multiset<std::string> rows(const CharacterTable& t) {
  std::multiset<std::string> out;
  for (const auto& row : t.values()) {
    std::string s;
    for (const auto& v : row) s += v.to_string() + ";";
    out.insert(s);
  }
  return out;
}

// Exact inner product <chi, psi> computed element by element.
Cyclotomic inner(const CharacterTable& t, std::size_t a, std::size_t b) {
  Cyclotomic sum;
  for (Element g = 0; g < t.group().order(); ++g) sum += t.value_at(a, g) * t.value_at(b, g).conjugate();
  return sum / Rational(static_cast<long>(t.group().order()));
}

const char* const kCatalog[] = {"C2", "C3", "C4", "C5", "C6", "C2xC2", "C8", "C2xC4", "C2^3", "S3",
                                "D4", "Q8", "D5", "D6", "A4", "C3xC3", "D8", "Q16", "S4"};

}  // namespace

TEST(Dixon, MatchesGoldenTables) {
  for (const auto& [name, file] : {std::pair{"S3", "s3.tbl"}, {"Q8", "q8.tbl"}, {"C4", "c4.tbl"}}) {
    auto g = catalog_group(name);
    auto computed = dixon_character_table(g);
    auto golden = ingest_table(read_data(file), g);
    EXPECT_EQ(rows(*computed), rows(*golden)) << name;
  }
}

TEST(Dixon, DegreesOfS3AndS4) {
  auto s3 = dixon_character_table(catalog_group("S3"));
  std::multiset<long> d3;
  for (std::size_t i = 0; i < s3->size(); ++i) d3.insert(s3->degree(i));
  EXPECT_EQ(d3, (std::multiset<long>{1, 1, 2}));
  auto s4 = dixon_character_table(catalog_group("S4"));
  std::multiset<long> d4;
  for (std::size_t i = 0; i < s4->size(); ++i) d4.insert(s4->degree(i));
  EXPECT_EQ(d4, (std::multiset<long>{1, 1, 2, 3, 3}));
}

// Both orthogonality relations element by element, plus the oracle class
// count and sum of squared degrees.
TEST(Dixon, CatalogTablesAreOrthonormal) {
  for (const char* name : kCatalog) {
    auto g = catalog_group(name);
    auto t0 = std::chrono::steady_clock::now();
    auto t = dixon_character_table(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(secs, 5.0) << name;
    EXPECT_EQ(t->size(), oracle::conjugacy_classes(*g).size()) << name;
    long squares = 0;
    for (std::size_t i = 0; i < t->size(); ++i) squares += t->degree(i) * t->degree(i);
    EXPECT_EQ(static_cast<std::size_t>(squares), g->order()) << name;
    for (std::size_t a = 0; a < t->size(); ++a)
      for (std::size_t b = 0; b < t->size(); ++b)
        EXPECT_EQ(inner(*t, a, b), Cyclotomic::from_int(a == b ? 1 : 0)) << name << " " << a << "," << b;
    for (std::size_t c = 0; c < t->num_classes(); ++c)
      for (std::size_t d = 0; d < t->num_classes(); ++d) {
        Cyclotomic sum;
        for (std::size_t chi = 0; chi < t->size(); ++chi) sum += t->value(chi, c) * t->value(chi, d).conjugate();
        long expect = c == d ? static_cast<long>(g->order() / t->class_size(c)) : 0;
        EXPECT_EQ(sum, Cyclotomic::from_int(expect)) << name;
      }
    EXPECT_TRUE(validate_table(*t).ok()) << name;
  }
}

// Class coefficients a_ijk counted directly agree with the table through
// |K_i||K_j|/|G| sum_chi chi(x_i)chi(x_j)conj(chi(x_k))/chi(1).
TEST(Dixon, ClassCoefficientsFromTable) {
  for (const char* name : {"S3", "Q8", "A4", "D5"}) {
    auto g = catalog_group(name);
    auto t = dixon_character_table(g);
    std::size_t k = t->num_classes();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          long count = 0;
          Element z = t->rep(l);
          for (Element x : t->classes().block(i))
            for (Element y : t->classes().block(j))
              if (g->mul(x, y) == z) ++count;
          Cyclotomic sum;
          for (std::size_t chi = 0; chi < t->size(); ++chi)
            sum += t->value(chi, i) * t->value(chi, j) * t->value(chi, l).conjugate() /
                   Rational(t->degree(chi));
          Rational scale(static_cast<long>(t->class_size(i) * t->class_size(j)), static_cast<long>(g->order()));
          scale.canonicalize();
          sum *= scale;
          EXPECT_EQ(sum, Cyclotomic::from_int(count)) << name;
        }
  }
}

TEST(Ingest, FormatRoundTrip) {
  for (const char* name : {"S3", "A4", "C5", "Q16"}) {
    auto g = catalog_group(name);
    auto t = dixon_character_table(g);
    auto back = ingest_table(format_table(*t), g);
    EXPECT_EQ(back->values(), t->values()) << name;
  }
}

TEST(Ingest, CorruptedTableIsRejected) {
  auto g = catalog_group("S3");
  EXPECT_THROW(ingest_table(read_data("s3_corrupt.tbl"), g), InputError);
  EXPECT_THROW(ingest_table("chartab S3 classes=2 exponent=6\n", g), InputError);
  EXPECT_THROW(ingest_table(read_data("q8.tbl"), g), InputError);
}

TEST(Dixon, GuardRejectsLargeGroups) {
  DixonOptions opts;
  opts.max_order = 10;
  EXPECT_THROW(dixon_character_table(catalog_group("S4"), opts), GuardError);
}

// Random products of characters decompose with nonnegative integer
// multiplicities.
TEST(CharacterProperties, ProductsDecomposeIntegrally) {
  std::mt19937 rng(99);
  for (const char* name : {"S4", "D6", "Q16", "A4", "C3xC3"}) {
    auto t = dixon_character_table(catalog_group(name));
    std::uniform_int_distribution<std::size_t> pick(0, t->size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t a = pick(rng), b = pick(rng);
      long total = 0;
      for (std::size_t c = 0; c < t->size(); ++c) {
        Cyclotomic m;
        for (Element g = 0; g < t->group().order(); ++g)
          m += t->value_at(a, g) * t->value_at(b, g) * t->value_at(c, g).conjugate();
        m /= Rational(static_cast<long>(t->group().order()));
        ASSERT_TRUE(m.is_rational()) << name;
        Rational q = m.rational_value();
        ASSERT_EQ(q.get_den(), 1) << name;
        ASSERT_GE(q, 0) << name;
        total += q.get_num().get_si() * t->degree(c);
      }
      EXPECT_EQ(total, t->degree(a) * t->degree(b)) << name;
    }
  }
}
