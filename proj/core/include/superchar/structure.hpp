// Structure of a supercharacter theory: S-normal subgroups, Z(S), [H,S],
// supercharacter kernels, Irr(S|N) and Irr(S/N), the central series and
// S-normal closures.

#ifndef SUPERCHAR_STRUCTURE_HPP_
#define SUPERCHAR_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superchar/supertheory.hpp"

namespace superchar {

bool is_s_normal(const SuperTheory& s, const ElementSet& h);
bool is_s_normal(const SuperTheory& s, const Subgroup& h);

// Ordered by order, then by member list. Throws GuardError for theories
// with more than 21 classes.
std::vector<Subgroup> s_normal_subgroups(const SuperTheory& s);

// Elements in singleton blocks. Throws InternalError if that set is not a
// subgroup.
Subgroup s_center(const SuperTheory& s);
bool is_s_abelian(const SuperTheory& s);

// <g^-1 k : g in H, k in Cl_S(g)>
Subgroup s_commutator(const SuperTheory& s, const Subgroup& h);
// [G,S] against the intersection of the kernels of Irr(S/[G,S]).
CheckReport commutator_kernel_check(const SuperTheory& s);

// {g : sigma(g) = sigma(1)}. Throws InternalError if it is not an S-normal
// subgroup.
Subgroup super_kernel(const SuperTheory& s, std::size_t part);
Subgroup super_kernel(const SuperCharacter& sigma);
// The same kernel as the intersection of ker(chi) over chi in the part.
ElementSet classical_kernel(const SuperTheory& s, std::size_t part);

// Parts whose kernel does not contain / contains N. Together they list
// every part once.
std::vector<std::size_t> irr_over(const SuperTheory& s, const Subgroup& n);
std::vector<std::size_t> irr_quotient(const SuperTheory& s, const Subgroup& n);

enum class SeriesKind { lower, upper, v_series, u_chain };
std::string to_string(SeriesKind kind);

struct SeriesResult {
  std::vector<Subgroup> terms;  // no repeats; the last term is the limit
  SeriesKind kind = SeriesKind::lower;
  bool stabilized = false;
  // Lower/upper series only: the class when the series reaches 1 / G.
  std::optional<std::size_t> class_index;
};

// gamma_1 = G, gamma_i = [gamma_{i-1}, S].
SeriesResult lower_series(const SuperTheory& s);
// zeta_0 = 1, zeta_i / zeta_{i-1} = Z(S^{G/zeta_{i-1}}), pulled back through
// each deflation.
SeriesResult upper_series(const SuperTheory& s);
// Least c >= 1 with zeta_c = G. Throws InternalError when the lower and
// upper series disagree.
std::optional<std::size_t> s_nilpotence_class(const SuperTheory& s);
Subgroup hypercenter(const SuperTheory& s);

// Smallest S-normal subgroup containing `seed`.
Subgroup s_normal_closure(const SuperTheory& s, const ElementSet& seed);

// gamma_i(S^{G/N}) = pi(gamma_i(S) N) for every i up to stabilization.
CheckReport deflated_gamma_check(const SuperTheory& s, const Subgroup& n);

// Image of `h` under a quotient map, as a subgroup of the quotient.
Subgroup project(const Quotient& q, const Subgroup& h);
// Preimage of a quotient subgroup in the parent group.
Subgroup lift(const GroupTable& parent, const Quotient& q, const Subgroup& h);

// Sorted by order, then member list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

}  // namespace superchar

#endif  // SUPERCHAR_STRUCTURE_HPP_
