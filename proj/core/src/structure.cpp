#include "superchar/structure.hpp"

#include <algorithm>

#include "superchar/error.hpp"

namespace superchar {

namespace {

constexpr std::size_t kMaxBlocksForSubsets = 20;

SeriesResult finish_series(std::vector<Subgroup> terms, SeriesKind kind) {
  SeriesResult r;
  r.kind = kind;
  r.stabilized = true;
  r.terms = std::move(terms);
  const auto& last = r.terms.back();
  bool reached = kind == SeriesKind::upper ? last.is_whole() : last.is_trivial();
  if (reached) r.class_index = std::max<std::size_t>(1, r.terms.size() - 1);
  return r;
}

}  // namespace

bool subgroup_less(const Subgroup& a, const Subgroup& b) { return canonical_less(a.members(), b.members()); }

bool is_s_normal(const SuperTheory& s, const ElementSet& h) {
  return h.universe() == s.group().order() && is_subgroup(s.group(), h) && is_union_of_classes(s, h);
}

bool is_s_normal(const SuperTheory& s, const Subgroup& h) {
  return &h.group() == &s.group() && is_union_of_classes(s, h.members());
}

std::vector<Subgroup> s_normal_subgroups(const SuperTheory& s) {
  const auto& g = s.group();
  const auto& y = s.yparts();
  std::size_t m = y.size() - 1;  // block 0 is {1}
  if (m > kMaxBlocksForSubsets)
    throw GuardError("too many classes to enumerate S-normal subgroups of " + g.label());
  std::vector<ElementSet> blocks;
  for (std::size_t b = 1; b < y.size(); ++b) blocks.push_back(y.block_set(b));
  std::vector<Subgroup> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ElementSet u = g.identity_set();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) u |= blocks[i];
    // Order must divide |G|; cheap filter before the closure test.
    if (g.order() % u.size() != 0) continue;
    if (is_subgroup(g, u)) out.push_back(Subgroup::from_members(g, std::move(u)));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

Subgroup s_center(const SuperTheory& s) {
  const auto& g = s.group();
  ElementSet z(g.order());
  for (const auto& blk : s.yparts().blocks())
    if (blk.size() == 1) z.insert(blk.front());
  if (!is_subgroup(g, z)) throw InternalError("Z(S) is not a subgroup: " + describe(z));
  return Subgroup::from_members(g, std::move(z));
}

bool is_s_abelian(const SuperTheory& s) { return s.yparts().size() == s.group().order(); }

Subgroup s_commutator(const SuperTheory& s, const Subgroup& h) {
  const auto& g = s.group();
  ElementSet gens(g.order());
  h.members().for_each([&](Element x) {
    for (Element k : s.s_class(x)) gens.insert(g.mul(g.inv(x), k));
  });
  return generated_subgroup(g, gens);
}

CheckReport commutator_kernel_check(const SuperTheory& s) {
  CheckReport report;
  auto& check = report.add("commutator-kernel");
  const auto& g = s.group();
  Subgroup gs = s_commutator(s, Subgroup::whole(g));
  ElementSet meet = g.all();
  for (std::size_t part : irr_quotient(s, gs)) meet &= s.kernel(part);
  if (!(meet == gs.members()))
    record_failure(check, "[G,S] = " + describe(gs.members()) + ", kernel intersection = " + describe(meet));
  return report;
}

Subgroup super_kernel(const SuperTheory& s, std::size_t part) {
  ElementSet k = s.kernel(part);
  if (!is_s_normal(s, k))
    throw InternalError("kernel of sigma_" + std::to_string(part) + " is not S-normal: " + describe(k));
  return Subgroup::from_members(s.group(), std::move(k));
}

Subgroup super_kernel(const SuperCharacter& sigma) { return super_kernel(sigma.theory(), sigma.part()); }

ElementSet classical_kernel(const SuperTheory& s, std::size_t part) {
  ElementSet k = s.group().all();
  for (std::size_t chi : s.xparts()[part]) k &= s.table().kernel(chi);
  return k;
}

std::vector<std::size_t> irr_over(const SuperTheory& s, const Subgroup& n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < s.size(); ++p)
    if (!n.members().is_subset_of(s.kernel(p))) out.push_back(p);
  return out;
}

std::vector<std::size_t> irr_quotient(const SuperTheory& s, const Subgroup& n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < s.size(); ++p)
    if (n.members().is_subset_of(s.kernel(p))) out.push_back(p);
  return out;
}

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::lower: return "lower";
    case SeriesKind::upper: return "upper";
    case SeriesKind::v_series: return "v-series";
    case SeriesKind::u_chain: return "u-chain";
  }
  return "unknown";
}

SeriesResult lower_series(const SuperTheory& s) {
  std::vector<Subgroup> terms{Subgroup::whole(s.group())};
  while (true) {
    Subgroup next = s_commutator(s, terms.back());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return finish_series(std::move(terms), SeriesKind::lower);
}

Subgroup project(const Quotient& q, const Subgroup& h) {
  return Subgroup::from_members(*q.group, q.image(h.members()));
}

Subgroup lift(const GroupTable& parent, const Quotient& q, const Subgroup& h) {
  return Subgroup::from_members(parent, q.preimage(h.members()));
}

SeriesResult upper_series(const SuperTheory& s) {
  const auto& g = s.group();
  std::vector<Subgroup> terms{Subgroup::trivial(g)};
  while (!terms.back().is_whole()) {
    auto d = deflation(s, terms.back());
    Subgroup next = lift(g, d.quotient, s_center(d.theory));
    if (next == terms.back()) break;
    if (!is_s_normal(s, next)) throw InternalError("upper central term is not S-normal");
    terms.push_back(std::move(next));
  }
  return finish_series(std::move(terms), SeriesKind::upper);
}

std::optional<std::size_t> s_nilpotence_class(const SuperTheory& s) {
  auto lower = lower_series(s);
  auto upper = upper_series(s);
  if (lower.class_index != upper.class_index)
    throw InternalError("lower and upper S-central series give different nilpotence classes");
  return upper.class_index;
}

Subgroup hypercenter(const SuperTheory& s) { return upper_series(s).terms.back(); }

Subgroup s_normal_closure(const SuperTheory& s, const ElementSet& seed) {
  const auto& g = s.group();
  ElementSet current = seed | g.identity_set();
  while (true) {
    Subgroup h = generated_subgroup(g, current);
    ElementSet saturated(g.order());
    h.members().for_each([&](Element e) {
      if (!saturated.contains(e)) saturated |= s.s_class_set(e);
    });
    if (saturated == h.members()) return h;
    current = std::move(saturated);
  }
}

CheckReport deflated_gamma_check(const SuperTheory& s, const Subgroup& n) {
  CheckReport report;
  auto& check = report.add("deflated-gamma");
  auto d = deflation(s, n);
  auto top = lower_series(s);
  auto bottom = lower_series(d.theory);
  std::size_t len = std::max(top.terms.size(), bottom.terms.size()) + 1;
  for (std::size_t i = 0; i < len; ++i) {
    const auto& a = top.terms[std::min(i, top.terms.size() - 1)];
    const auto& b = bottom.terms[std::min(i, bottom.terms.size() - 1)];
    ElementSet want = d.quotient.image(a.members());
    if (!(want == b.members()))
      record_failure(check, "gamma_" + std::to_string(i + 1) + ": " + describe(b.members()) + " vs " +
                                describe(want));
  }
  return report;
}

}  // namespace superchar
