// Exact irreducible character tables: computed with Dixon's modular method
// or ingested from text, and always validated against both orthogonality
// relations before use.

#ifndef SUPERCHAR_CHARACTER_TABLE_HPP_
#define SUPERCHAR_CHARACTER_TABLE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superchar/check_report.hpp"
#include "superchar/cyclotomic.hpp"
#include "superchar/group.hpp"

namespace superchar {

class CharacterTable {
 public:
  // Rows are put in canonical order (degree ascending, principal first,
  // then lexicographic on the value rows). Columns follow `classes`.
  // No validation happens here; see validate_table.
  CharacterTable(GroupPtr group, ElementPartition classes,
                 std::vector<std::vector<Cyclotomic>> values, unsigned exponent);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ElementPartition& classes() const { return classes_; }
  std::size_t size() const { return values_.size(); }  // number of irreducibles
  std::size_t num_classes() const { return classes_.size(); }
  unsigned exponent() const { return exponent_; }

  Element rep(std::size_t cls) const { return classes_.block(cls).front(); }
  std::size_t class_size(std::size_t cls) const { return classes_.block(cls).size(); }

  const std::vector<std::vector<Cyclotomic>>& values() const { return values_; }
  const Cyclotomic& value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }
  const Cyclotomic& value_at(std::size_t chi, Element g) const {
    return values_[chi][classes_.block_of(g)];
  }
  // chi(1); throws InternalError if not a positive integer.
  long degree(std::size_t chi) const;

  // {g : chi(g) = chi(1)}
  ElementSet kernel(std::size_t chi) const;

 private:
  GroupPtr group_;
  ElementPartition classes_;
  std::vector<std::vector<Cyclotomic>> values_;
  unsigned exponent_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// a[i][j][k] = #{(x, y) in K_i x K_j : xy = rep_k}
using ClassCoefficients = std::vector<std::vector<std::vector<long>>>;
ClassCoefficients class_mult_coefficients(const GroupTable& g, const ElementPartition& classes);

struct DixonOptions {
  std::size_t max_order = 64;
  unsigned long prime_bound = 1'000'000;
};

// Throws GuardError above max_order or when no prime p = 1 (mod e) with
// p > 2 sqrt|G| exists below prime_bound; InternalError if the result fails
// validation.
TablePtr dixon_character_table(const GroupPtr& g, const DixonOptions& opts = {});

// Text format:
//   chartab <label> classes=<k> exponent=<e>
//   class <i> size=<s> rep=<element>      (k lines)
//   <k comma-separated cyclotomic values>  (k lines, one per character)
// Throws InputError on format errors, class mismatches, or failed
// validation.
TablePtr ingest_table(std::string_view text, const GroupPtr& g);
std::string format_table(const CharacterTable& t);

// First and second orthogonality, sum of squared degrees, principal row,
// integrality. Exact.
CheckReport validate_table(const CharacterTable& t);

}  // namespace superchar

#endif  // SUPERCHAR_CHARACTER_TABLE_HPP_
