#include "superchar/supertheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

#include "superchar/error.hpp"

namespace superchar {

namespace {

struct CycVecLess {
  bool operator()(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int c = compare(a[i], b[i]);
      if (c) return c < 0;
    }
    return a.size() < b.size();
  }
};

// chi(1) chi(c) for every irreducible and class.
std::vector<std::vector<Cyclotomic>> weighted_rows(const CharacterTable& t) {
  std::vector<std::vector<Cyclotomic>> rows(t.size());
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    Rational d = t.degree(chi);
    rows[chi].reserve(t.num_classes());
    for (std::size_t c = 0; c < t.num_classes(); ++c) rows[chi].push_back(t.value(chi, c) * d);
  }
  return rows;
}

void normalize_parts(std::vector<std::vector<std::size_t>>& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

void check_character_partition(std::vector<std::vector<std::size_t>>& parts, std::size_t k) {
  std::vector<char> seen(k, 0);
  for (const auto& p : parts) {
    if (p.empty()) throw PreconditionError("empty part in character partition");
    for (std::size_t chi : p) {
      if (chi >= k) throw PreconditionError("character index " + std::to_string(chi) + " out of range");
      if (seen[chi]++) throw PreconditionError("character " + std::to_string(chi) + " listed twice");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw PreconditionError("character partition does not cover Irr(G)");
  normalize_parts(parts);
}

// Level sets of the sigma columns, or nullopt when {1} is not a level set
// or the count disagrees with the number of parts.
std::optional<ElementPartition> level_sets(const CharacterTable& t,
                                           const std::vector<std::vector<Cyclotomic>>& rows,
                                           const std::vector<std::vector<std::size_t>>& parts) {
  std::size_t k = t.num_classes();
  std::vector<std::vector<Cyclotomic>> columns(k, std::vector<Cyclotomic>(parts.size()));
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t c = 0; c < k; ++c) {
      Cyclotomic s = rows[parts[x][0]][c];
      for (std::size_t i = 1; i < parts[x].size(); ++i) s += rows[parts[x][i]][c];
      columns[c][x] = std::move(s);
    }
  std::map<std::vector<Cyclotomic>, std::size_t, CycVecLess> index;
  std::vector<std::vector<Element>> blocks;
  for (std::size_t c = 0; c < k; ++c) {
    auto [it, fresh] = index.emplace(columns[c], blocks.size());
    if (fresh) blocks.emplace_back();
    else if (it->second == 0) return std::nullopt;  // identity class shares a level set
    const auto& members = t.classes().block(c);
    blocks[it->second].insert(blocks[it->second].end(), members.begin(), members.end());
  }
  if (blocks.size() != parts.size()) return std::nullopt;
  return ElementPartition(t.group().order(), std::move(blocks));
}

DixonOptions derived_options(const GroupTable& g) {
  DixonOptions opts;
  opts.max_order = std::max<std::size_t>(opts.max_order, g.order());
  return opts;
}

void require_s_normal(const SuperTheory& s, const Subgroup& n, const char* what) {
  if (&n.group() != &s.group()) throw PreconditionError(std::string(what) + " is not a subgroup of this group");
  if (!is_union_of_classes(s, n.members()))
    throw PreconditionError(std::string(what) + " is not S-normal");
}

// Keeps the blocks inside `n`; outside it, replaces each block by its
// M-saturation and merges overlapping saturations.
ElementPartition saturated_partition(const SuperTheory& s, const Subgroup& m, const Subgroup& n) {
  const auto& g = s.group();
  const auto& y = s.yparts();
  std::vector<std::vector<Element>> blocks;
  std::vector<ElementSet> outside;
  for (std::size_t b = 0; b < y.size(); ++b) {
    ElementSet k = y.block_set(b);
    if (k.is_subset_of(n.members()))
      blocks.push_back(y.block(b));
    else
      outside.push_back(coset_saturation(g, m, k));
  }
  std::vector<std::size_t> parent(outside.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i + 1; j < outside.size(); ++j)
      if (outside[i].intersects(outside[j])) parent[find(j)] = find(i);
  std::map<std::size_t, ElementSet> merged;
  for (std::size_t i = 0; i < outside.size(); ++i) {
    auto [it, fresh] = merged.emplace(find(i), outside[i]);
    if (!fresh) it->second |= outside[i];
  }
  for (auto& [root, set] : merged) blocks.push_back(set.to_vector());
  return ElementPartition(g.order(), std::move(blocks));
}

}  // namespace

SuperTheory::SuperTheory(TablePtr table, std::vector<std::vector<std::size_t>> xparts,
                         ElementPartition yparts)
    : table_(std::move(table)), xparts_(std::move(xparts)), yparts_(std::move(yparts)) {
  const auto& t = *table_;
  sigma_.resize(xparts_.size());
  degrees_.resize(xparts_.size());
  for (std::size_t x = 0; x < xparts_.size(); ++x) {
    for (std::size_t b = 0; b < yparts_.size(); ++b) {
      std::size_t c = t.classes().block_of(yparts_.block(b).front());
      Cyclotomic s = Cyclotomic::from_int(0, t.exponent());
      for (std::size_t chi : xparts_[x]) s += t.value(chi, c) * Rational(t.degree(chi));
      sigma_[x].push_back(std::move(s));
    }
    degrees_[x] = sigma_[x][0].rational_value();
  }
}

Rational SuperTheory::norm_sq(std::size_t part) const {
  Rational total = 0;
  for (std::size_t chi : xparts_[part]) {
    long d = table_->degree(chi);
    total += Rational(d * d);
  }
  return total;
}

SuperCharacter SuperTheory::supercharacter(std::size_t part) const { return SuperCharacter(*this, part); }

ElementSet SuperTheory::kernel(std::size_t part) const {
  ElementSet k(group().order());
  Cyclotomic top = Cyclotomic::from_rational(degrees_[part]);
  for (std::size_t b = 0; b < yparts_.size(); ++b)
    if (sigma_[part][b] == top)
      for (Element e : yparts_.block(b)) k.insert(e);
  return k;
}

std::optional<SuperTheory> assemble_theory(TablePtr table, std::vector<std::vector<std::size_t>> xparts,
                                           ElementPartition yparts) {
  const auto& t = *table;
  check_character_partition(xparts, t.size());
  if (yparts.universe() != t.group().order())
    throw PreconditionError("class partition has the wrong universe");
  if (yparts.block(0).size() != 1 || xparts.size() != yparts.size()) return std::nullopt;
  auto rows = weighted_rows(t);
  for (const auto& part : xparts)
    for (std::size_t b = 0; b < yparts.size(); ++b) {
      std::optional<Cyclotomic> first;
      for (Element e : yparts.block(b)) {
        std::size_t c = t.classes().block_of(e);
        Cyclotomic s = Cyclotomic::from_int(0, t.exponent());
        for (std::size_t chi : part) s += rows[chi][c];
        if (!first)
          first = std::move(s);
        else if (!(s == *first))
          return std::nullopt;
      }
    }
  return SuperTheory(std::move(table), std::move(xparts), std::move(yparts));
}

CheckReport check_definition(const SuperTheory& s) {
  CheckReport report;
  const auto& t = s.table();
  const auto& y = s.yparts();

  auto& one = report.add("identity-block");
  if (y.block(0).size() != 1 || y.block(0).front() != 0) record_failure(one, "{1} is not a block");

  auto& count = report.add("equal-cardinality");
  if (s.xparts().size() != y.size())
    record_failure(count, std::to_string(s.xparts().size()) + " parts vs " + std::to_string(y.size()) + " blocks");

  auto& cover = report.add("character-partition");
  std::vector<int> seen(t.size(), 0);
  for (const auto& p : s.xparts())
    for (std::size_t chi : p)
      if (chi < seen.size()) ++seen[chi];
  for (std::size_t chi = 0; chi < seen.size(); ++chi)
    if (seen[chi] != 1) record_failure(cover, "chi_" + std::to_string(chi) + " appears " + std::to_string(seen[chi]) + " times");

  auto& constant = report.add("sigma-constant-on-blocks");
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      std::optional<Cyclotomic> first;
      for (Element e : y.block(b)) {
        Cyclotomic v = Cyclotomic::from_int(0, t.exponent());
        for (std::size_t chi : s.xparts()[x]) v += t.value_at(chi, e) * Rational(t.degree(chi));
        if (!first) {
          first = v;
        } else if (!(v == *first)) {
          record_failure(constant, "sigma_" + std::to_string(x) + " on block " + std::to_string(b));
          break;
        }
      }
    }
  }
  return report;
}

std::optional<SuperTheory> sct_from_character_partition(const TablePtr& table,
                                                        std::vector<std::vector<std::size_t>> xparts) {
  check_character_partition(xparts, table->size());
  auto y = level_sets(*table, weighted_rows(*table), xparts);
  if (!y) return std::nullopt;
  return SuperTheory(table, std::move(xparts), std::move(*y));
}

std::optional<SuperTheory> sct_from_class_partition(const TablePtr& table, const ElementPartition& y) {
  const auto& t = *table;
  if (y.universe() != t.group().order()) throw PreconditionError("class partition has the wrong universe");
  if (y.block(0).size() != 1 || y.block(0).front() != 0) throw PreconditionError("{1} is not a block");
  const auto& cls = t.classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    std::size_t b = y.block_of(cls.block(c).front());
    for (Element e : cls.block(c))
      if (y.block_of(e) != b) throw PreconditionError("a block is not a union of conjugacy classes");
  }

  std::map<std::vector<Cyclotomic>, std::vector<std::size_t>, CycVecLess> fibers;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    Rational d = t.degree(chi);
    std::vector<Cyclotomic> key(y.size(), Cyclotomic::from_int(0, t.exponent()));
    for (std::size_t c = 0; c < cls.size(); ++c)
      key[y.block_of(t.rep(c))] += t.value(chi, c) * Rational(static_cast<long>(t.class_size(c)));
    for (auto& v : key) v /= d;
    fibers[key].push_back(chi);
  }
  std::vector<std::vector<std::size_t>> xparts;
  for (auto& [key, part] : fibers) xparts.push_back(std::move(part));
  return assemble_theory(table, std::move(xparts), y);
}

SuperTheory finest(const TablePtr& table) {
  std::vector<std::vector<std::size_t>> xparts(table->size());
  for (std::size_t i = 0; i < xparts.size(); ++i) xparts[i] = {i};
  auto s = assemble_theory(table, std::move(xparts), table->classes());
  if (!s) throw InternalError("the classical theory failed validation");
  return std::move(*s);
}

SuperTheory coarsest(const TablePtr& table) {
  const auto& g = table->group();
  if (g.order() == 1) throw PreconditionError("the trivial group has no two-part theory");
  std::vector<std::size_t> rest(table->size() - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Element> others(g.order() - 1);
  std::iota(others.begin(), others.end(), 1);
  auto s = assemble_theory(table, {{0}, rest}, ElementPartition(g.order(), {{0}, others}));
  if (!s) throw InternalError("the two-part theory failed validation");
  return std::move(*s);
}

std::size_t max_irreducibles_from_env(std::size_t fallback) {
  const char* v = std::getenv("SUPERCHAR_MAX_BELL");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long n = std::strtoul(v, &end, 10);
  if (*end != '\0') throw InputError(std::string("SUPERCHAR_MAX_BELL is not a number: ") + v);
  return n;
}

std::vector<SuperTheory> enumerate_scts(const TablePtr& table, const EnumerateOptions& opts) {
  std::size_t k = table->size();
  if (k > opts.max_irreducibles)
    throw GuardError(table->group().label() + " has " + std::to_string(k) +
                     " irreducible characters; enumeration is limited to " +
                     std::to_string(opts.max_irreducibles));
  auto rows = weighted_rows(*table);
  unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::vector<SuperTheory>> found(jobs);

  auto worker = [&](unsigned slot) {
    // Restricted growth strings a[0..k-1]: a[0] = 0, a[i] <= 1 + max(a[<i]).
    std::vector<std::size_t> a(k, 0), mx(k, 0);
    std::size_t counter = 0;
    while (true) {
      bool skip = opts.prune_principal && std::count(a.begin(), a.end(), 0) > 1;
      if (!skip && counter++ % jobs == slot) {
        std::size_t m = k ? mx[k - 1] + 1 : 0;
        std::vector<std::vector<std::size_t>> parts(m);
        for (std::size_t i = 0; i < k; ++i) parts[a[i]].push_back(i);
        if (auto y = level_sets(*table, rows, parts))
          found[slot].push_back(SuperTheory(table, std::move(parts), std::move(*y)));
      }
      std::size_t pos = k;
      for (std::size_t j = k; j-- > 1;)
        if (a[j] <= mx[j - 1]) { pos = j; break; }
      if (pos == k) break;
      ++a[pos];
      mx[pos] = std::max(mx[pos - 1], a[pos]);
      for (std::size_t j = pos + 1; j < k; ++j) {
        a[j] = 0;
        mx[j] = mx[j - 1];
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }

  std::vector<SuperTheory> out;
  for (auto& v : found)
    for (auto& s : v) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const SuperTheory& a, const SuperTheory& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.xparts() < b.xparts();
  });
  return out;
}

CheckReport check_row_orthogonality(const SuperTheory& s) {
  CheckReport report;
  auto& check = report.add("row-orthogonality");
  const auto& y = s.yparts();
  Rational order(static_cast<long>(s.group().order()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) {
      Cyclotomic sum;
      for (std::size_t b = 0; b < y.size(); ++b)
        sum += hermitian_term(s.sigma(i, b), s.sigma(j, b)) * Rational(static_cast<long>(y.block(b).size()));
      sum /= order;
      Rational want = i == j ? s.norm_sq(i) : Rational(0);
      if (!(sum == Cyclotomic::from_rational(want)))
        record_failure(check, "<sigma_" + std::to_string(i) + ", sigma_" + std::to_string(j) + "> = " +
                                  sum.to_string() + ", expected " + want.get_str());
    }
  return report;
}

ColumnOrthogonality check_column_orthogonality(const SuperTheory& s, Element g, Element h) {
  ColumnOrthogonality r;
  std::size_t bg = s.class_of(g), bh = s.class_of(h);
  for (std::size_t i = 0; i < s.size(); ++i)
    r.sum += hermitian_term(s.sigma(i, bg), s.sigma(i, bh)) / s.degree(i);
  r.expected = bg == bh ? Rational(static_cast<long>(s.group().order()),
                                   static_cast<long>(s.yparts().block(bg).size()))
                        : Rational(0);
  r.expected.canonicalize();
  r.passed = r.sum == Cyclotomic::from_rational(r.expected);
  return r;
}

bool is_union_of_classes(const SuperTheory& s, const ElementSet& h) {
  const auto& y = s.yparts();
  for (std::size_t b = 0; b < y.size(); ++b) {
    const auto& blk = y.block(b);
    bool in = h.contains(blk.front());
    for (Element e : blk)
      if (h.contains(e) != in) return false;
  }
  return true;
}

RestrictedTheory restriction(const SuperTheory& s, const Subgroup& n) {
  require_s_normal(s, n, "restriction subgroup");
  const auto& g = s.group();
  auto emb = subgroup_as_group(g, n, g.label() + "|N" + std::to_string(n.order()));
  auto table = dixon_character_table(emb.group, derived_options(g));
  std::vector<std::vector<Element>> blocks;
  const auto& y = s.yparts();
  for (std::size_t b = 0; b < y.size(); ++b) {
    if (!n.contains(y.block(b).front())) continue;
    std::vector<Element> local;
    for (Element e : y.block(b)) local.push_back(emb.local[e]);
    blocks.push_back(std::move(local));
  }
  auto theory = sct_from_class_partition(table, ElementPartition(n.order(), std::move(blocks)));
  if (!theory) throw InternalError("restriction to an S-normal subgroup is not a supercharacter theory");
  return RestrictedTheory{std::move(emb), std::move(*theory)};
}

DeflatedTheory deflation(const SuperTheory& s, const Subgroup& n) {
  require_s_normal(s, n, "deflation subgroup");
  const auto& g = s.group();
  auto q = quotient_group(s.group_ptr(), n.members());
  auto table = dixon_character_table(q.group, derived_options(g));
  std::vector<ElementSet> images;
  const auto& y = s.yparts();
  for (std::size_t b = 0; b < y.size(); ++b) {
    ElementSet img = q.image(y.block_set(b));
    if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(std::move(img));
  }
  std::vector<std::vector<Element>> blocks;
  for (const auto& img : images) blocks.push_back(img.to_vector());
  std::optional<ElementPartition> part;
  try {
    part.emplace(q.group->order(), std::move(blocks));
  } catch (const InputError& e) {
    throw InternalError(std::string("images of S-classes do not partition the quotient: ") + e.what());
  }
  auto theory = sct_from_class_partition(table, *part);
  if (!theory) throw InternalError("deflation by an S-normal subgroup is not a supercharacter theory");
  return DeflatedTheory{std::move(q), std::move(*theory)};
}

SubquotientTheory subquotient(const SuperTheory& s, const Subgroup& n, const Subgroup& h) {
  require_s_normal(s, n, "subquotient top");
  require_s_normal(s, h, "subquotient bottom");
  if (!h.contained_in(n)) throw PreconditionError("subquotient bottom is not contained in the top");
  auto d = deflation(s, h);
  Subgroup image = Subgroup::from_members(*d.quotient.group, d.quotient.image(n.members()));
  auto r = restriction(d.theory, image);
  return SubquotientTheory{std::move(d), std::move(r)};
}

bool is_star_product(const SuperTheory& s, const Subgroup& n) { return is_delta_product(s, n, n); }

bool is_delta_product(const SuperTheory& s, const Subgroup& m, const Subgroup& n) {
  if (&m.group() != &s.group() || &n.group() != &s.group()) return false;
  if (!m.contained_in(n) || !is_union_of_classes(s, m.members()) || !is_union_of_classes(s, n.members()))
    return false;
  const auto& y = s.yparts();
  for (std::size_t b = 0; b < y.size(); ++b) {
    ElementSet k = y.block_set(b);
    if (k.is_subset_of(n.members())) continue;
    if (!(coset_saturation(s.group(), m, k) == k)) return false;
  }
  return true;
}

SuperTheory star_construct(const SuperTheory& s, const Subgroup& n) {
  require_s_normal(s, n, "star subgroup");
  auto theory = sct_from_class_partition(s.table_ptr(), saturated_partition(s, n, n));
  if (!theory) throw InternalError("the star product over an S-normal subgroup is not a theory");
  return std::move(*theory);
}

std::optional<SuperTheory> delta_coarsen(const SuperTheory& s, const Subgroup& m, const Subgroup& n) {
  require_s_normal(s, m, "Delta bottom");
  require_s_normal(s, n, "Delta top");
  if (!m.contained_in(n)) throw PreconditionError("Delta bottom is not contained in the top");
  return sct_from_class_partition(s.table_ptr(), saturated_partition(s, m, n));
}

bool is_coarsening(const ElementPartition& coarse, const ElementPartition& fine) {
  if (coarse.universe() != fine.universe()) return false;
  for (const auto& blk : fine.blocks()) {
    std::size_t b = coarse.block_of(blk.front());
    for (Element e : blk)
      if (coarse.block_of(e) != b) return false;
  }
  return true;
}

}  // namespace superchar
