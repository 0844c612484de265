// Finite groups given by multiplication tables, with the primitives the
// rest of the library is built on: conjugacy classes, generated subgroups,
// quotients, products, and coset saturation.
//
// Elements are dense identifiers 0..order-1 and 0 is always the identity.

#ifndef SUPERCHAR_GROUP_HPP_
#define SUPERCHAR_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superchar/element_set.hpp"

namespace superchar {

// Tables up to this order are checked for associativity on every triple.
inline constexpr std::size_t kEagerAssociativityBound = 512;

class GroupTable {
 public:
  // `mul` is row-major, order*order entries. Throws InputError if the table
  // is not a Latin square with identity 0, or is not associative.
  GroupTable(std::string label, std::size_t order, std::vector<Element> mul);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }

  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  // h^-1 g h
  Element conj(Element g, Element h) const { return mul(mul(inv_[h], g), h); }
  Element power(Element g, long long k) const;

  std::size_t element_order(Element g) const { return element_order_[g]; }
  std::size_t exponent() const { return exponent_; }

  // False only for tables above kEagerAssociativityBound, which get a
  // sampled check instead.
  bool associativity_verified() const { return associativity_verified_; }

  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet identity_set() const { return ElementSet(order_, {0}); }

 private:
  std::string label_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::size_t> element_order_;
  std::size_t exponent_ = 1;
  bool associativity_verified_ = true;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// A subgroup of a GroupTable. Constructed only through validating factories,
// so `members()` is always closed under multiplication and inverses.
class Subgroup {
 public:
  Subgroup() = default;

  // Throws PreconditionError if `members` is not a subgroup.
  static Subgroup from_members(const GroupTable& g, ElementSet members);
  static Subgroup trivial(const GroupTable& g);
  static Subgroup whole(const GroupTable& g);

  const GroupTable& group() const { return *group_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element e) const { return members_.contains(e); }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return group_ && members_.size() == group_->order(); }
  bool contained_in(const Subgroup& other) const {
    return members_.is_subset_of(other.members_);
  }
  bool proper_in(const Subgroup& other) const {
    return contained_in(other) && order() < other.order();
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  Subgroup(const GroupTable* g, ElementSet m) : group_(g), members_(std::move(m)) {}
  friend Subgroup generated_subgroup(const GroupTable&, const ElementSet&);

  const GroupTable* group_ = nullptr;
  ElementSet members_;
};

bool is_subgroup(const GroupTable& g, const ElementSet& s);
bool is_normal(const GroupTable& g, const ElementSet& s);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

// A partition of the group's elements. Blocks are stored sorted, identity's
// block first, then by increasing minimal element.
class ElementPartition {
 public:
  ElementPartition() = default;
  // Throws InputError unless the blocks are nonempty, disjoint and cover
  // 0..universe-1.
  ElementPartition(std::size_t universe, std::vector<std::vector<Element>> blocks);

  std::size_t size() const { return blocks_.size(); }
  std::size_t universe() const { return block_of_.size(); }
  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
  const std::vector<Element>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(Element e) const { return block_of_[e]; }
  ElementSet block_set(std::size_t i) const {
    return ElementSet(universe(), std::span<const Element>(blocks_[i]));
  }

  friend bool operator==(const ElementPartition& a, const ElementPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<Element>> blocks_;
  std::vector<std::size_t> block_of_;
};

ElementPartition conjugacy_classes(const GroupTable& g);

// Smallest subgroup containing `seed`; the empty seed gives {1}.
Subgroup generated_subgroup(const GroupTable& g, const ElementSet& seed);

struct Quotient {
  GroupPtr group;
  // projection[g] is the coset of g; coset 0 contains the identity. Cosets
  // are numbered by increasing minimal element.
  std::vector<Element> projection;

  ElementSet image(const ElementSet& s) const;
  ElementSet preimage(const ElementSet& s) const;
};

// Throws PreconditionError if `n` is not a normal subgroup of `g`.
Quotient quotient_group(const GroupPtr& g, const ElementSet& n);

// {ab : a in A, b in B}. Throws PreconditionError if neither factor is
// normal or the product is not a subgroup.
Subgroup subgroup_product(const GroupTable& g, const Subgroup& a, const Subgroup& b);

// Union of the cosets xM for x in `block`.
ElementSet coset_saturation(const GroupTable& g, const Subgroup& m, const ElementSet& block);

// A subgroup as a group in its own right. Elements are renumbered in
// increasing id order, so the identity stays 0.
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<Element> embedding;  // local id -> id in the parent
  std::vector<Element> local;      // parent id -> local id, or npos

  static constexpr Element npos = static_cast<Element>(-1);
};
EmbeddedGroup subgroup_as_group(const GroupTable& g, const Subgroup& h, std::string label);

// --- construction -------------------------------------------------------

// Text format: a line `order n` followed by n rows of n identifiers.
GroupPtr parse_group_table(std::string_view text, std::string label);
std::string format_group_table(const GroupTable& g);

// Permutations as image vectors over points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

// Cycle notation, one generator per line: `(1 2 3)(4 5)`, points from 1.
std::vector<Permutation> parse_permutations(std::string_view text);

// Closure of the generators. Elements are numbered by the lexicographic
// order of their image tuples; the product ab applies a first, then b.
GroupPtr group_from_permutations(std::string label, const std::vector<Permutation>& gens);

// Catalog names: C<n>, D<n> (dihedral of order 2n), Q<n> (dicyclic of
// order n, n divisible by 4, n >= 8; Q8 is the quaternion group), S<n> and
// A<n> for n <= 4, direct products `AxB`, and powers `C2^3`.
GroupPtr catalog_group(std::string_view name);

// `name`, `file:path` (multiplication table) or `perm:path` (generators).
GroupPtr load_group(std::string_view spec);

}  // namespace superchar

#endif  // SUPERCHAR_GROUP_HPP_
