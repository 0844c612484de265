// Supercharacter theories: construction from either partition, exhaustive
// enumeration, orthogonality checks, restriction / deflation /
// subquotient, and the star and Delta product predicates.

#ifndef SUPERCHAR_SUPERTHEORY_HPP_
#define SUPERCHAR_SUPERTHEORY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "superchar/character_table.hpp"
#include "superchar/check_report.hpp"

namespace superchar {

class SuperCharacter;

struct EnumerateOptions {
  std::size_t max_irreducibles = 12;
  unsigned jobs = 1;
  // Skip partitions where the principal character shares a part.
  bool prune_principal = false;
};

// A validated pair (X, Y). X partitions the irreducible indices of the
// table; Y partitions the group elements. Part i of X owns row i of the
// sigma table and parts are ordered by their smallest irreducible index, so
// part 0 holds the principal character. Y follows ElementPartition order,
// so block 0 is {1}.
class SuperTheory {
 public:
  const CharacterTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  const GroupTable& group() const { return table_->group(); }
  const GroupPtr& group_ptr() const { return table_->group_ptr(); }

  std::size_t size() const { return xparts_.size(); }  // |X| = |Y|
  const std::vector<std::vector<std::size_t>>& xparts() const { return xparts_; }
  const ElementPartition& yparts() const { return yparts_; }

  std::size_t class_of(Element g) const { return yparts_.block_of(g); }
  const std::vector<Element>& s_class(Element g) const { return yparts_.block(class_of(g)); }
  ElementSet s_class_set(Element g) const { return yparts_.block_set(class_of(g)); }

  const Cyclotomic& sigma(std::size_t part, std::size_t block) const { return sigma_[part][block]; }
  const Cyclotomic& sigma_at(std::size_t part, Element g) const { return sigma_[part][class_of(g)]; }
  const std::vector<std::vector<Cyclotomic>>& sigma_table() const { return sigma_; }

  // sigma_X(1), which equals ||X||^2.
  const Rational& degree(std::size_t part) const { return degrees_[part]; }
  // sum over chi in X of chi(1)^2, computed from the character table.
  Rational norm_sq(std::size_t part) const;

  SuperCharacter supercharacter(std::size_t part) const;

  // {g : sigma_X(g) = sigma_X(1)}
  ElementSet kernel(std::size_t part) const;

  friend bool operator==(const SuperTheory& a, const SuperTheory& b) {
    return a.table_ == b.table_ && a.yparts_ == b.yparts_;
  }

 private:
  SuperTheory(TablePtr table, std::vector<std::vector<std::size_t>> xparts, ElementPartition yparts);
  friend std::optional<SuperTheory> assemble_theory(TablePtr, std::vector<std::vector<std::size_t>>,
                                                    ElementPartition);
  friend std::optional<SuperTheory> sct_from_character_partition(const TablePtr&,
                                                                 std::vector<std::vector<std::size_t>>);
  friend std::vector<SuperTheory> enumerate_scts(const TablePtr&, const EnumerateOptions&);

  TablePtr table_;
  std::vector<std::vector<std::size_t>> xparts_;
  ElementPartition yparts_;
  std::vector<std::vector<Cyclotomic>> sigma_;  // [part][block]
  std::vector<Rational> degrees_;
};

class SuperCharacter {
 public:
  SuperCharacter(const SuperTheory& theory, std::size_t part)
      : theory_(&theory), part_(part), values_(theory.sigma_table()[part]) {}

  const SuperTheory& theory() const { return *theory_; }
  std::size_t part() const { return part_; }
  const std::vector<Cyclotomic>& values() const { return values_; }  // per Y block
  const Cyclotomic& at(Element g) const { return values_[theory_->class_of(g)]; }
  const Rational& degree() const { return theory_->degree(part_); }

 private:
  const SuperTheory* theory_;
  std::size_t part_;
  std::vector<Cyclotomic> values_;
};

// Builds the theory when Def 2.1 holds for the given pair, else nullopt.
std::optional<SuperTheory> assemble_theory(TablePtr table, std::vector<std::vector<std::size_t>> xparts,
                                           ElementPartition yparts);

// Re-checks the three defining clauses from the character table:
// {1} is a block, |X| = |Y|, and each sigma_X is constant on each block.
CheckReport check_definition(const SuperTheory& s);

// Y is taken as the common level-set partition of the sigma_X; the result
// is a theory iff {1} is a level set and |X| equals the number of level
// sets.
std::optional<SuperTheory> sct_from_character_partition(const TablePtr& table,
                                                        std::vector<std::vector<std::size_t>> xparts);

// X is taken as the fibers of chi -> (sum_{g in K} chi(g)/chi(1))_K over
// the blocks K, then the pair is fully validated. Throws PreconditionError
// unless {1} is a block and every block is a union of conjugacy classes.
std::optional<SuperTheory> sct_from_class_partition(const TablePtr& table, const ElementPartition& y);

SuperTheory finest(const TablePtr& table);
// Throws PreconditionError on the trivial group.
SuperTheory coarsest(const TablePtr& table);

// Every supercharacter theory of the group, ordered by |X| descending and
// then lexicographically on X. Throws GuardError above max_irreducibles.
std::vector<SuperTheory> enumerate_scts(const TablePtr& table, const EnumerateOptions& opts = {});

// Number of irreducibles permitted by SUPERCHAR_MAX_BELL, or `fallback`.
std::size_t max_irreducibles_from_env(std::size_t fallback = 12);

CheckReport check_row_orthogonality(const SuperTheory& s);

struct ColumnOrthogonality {
  Cyclotomic sum;       // sum_sigma sigma(g) conj(sigma(h)) / sigma(1)
  Rational expected;    // |G| / |Cl_S(g)| when h in Cl_S(g), else 0
  bool passed = false;
};
ColumnOrthogonality check_column_orthogonality(const SuperTheory& s, Element g, Element h);

// Blocks-only test: is `h` a union of blocks of S?
bool is_union_of_classes(const SuperTheory& s, const ElementSet& h);

struct RestrictedTheory {
  EmbeddedGroup embedding;  // the subgroup as a group
  SuperTheory theory;
};
struct DeflatedTheory {
  Quotient quotient;
  SuperTheory theory;
};
struct SubquotientTheory {
  DeflatedTheory deflated;  // S^{G/H}
  RestrictedTheory theory;  // (S^{G/H})_{N/H}
};

// All three throw PreconditionError unless the subgroups are S-normal
// (and H <= N for the subquotient).
RestrictedTheory restriction(const SuperTheory& s, const Subgroup& n);
DeflatedTheory deflation(const SuperTheory& s, const Subgroup& n);
SubquotientTheory subquotient(const SuperTheory& s, const Subgroup& n, const Subgroup& h);

// Every S-class outside N is a union of N-cosets.
bool is_star_product(const SuperTheory& s, const Subgroup& n);
// Every S-class outside N is a union of M-cosets, M <= N.
bool is_delta_product(const SuperTheory& s, const Subgroup& m, const Subgroup& n);

// Classes: the S-classes inside N plus the preimages of the deflated
// classes outside N. Throws InternalError if this is not a theory.
SuperTheory star_construct(const SuperTheory& s, const Subgroup& n);
// Classes: the S-classes inside N plus the merged M-saturations of the
// S-classes outside N; nullopt when that is not a theory.
std::optional<SuperTheory> delta_coarsen(const SuperTheory& s, const Subgroup& m, const Subgroup& n);

// Every block of `coarse` is a union of blocks of `fine`.
bool is_coarsening(const ElementPartition& coarse, const ElementPartition& fine);

}  // namespace superchar

#endif  // SUPERCHAR_SUPERTHEORY_HPP_
