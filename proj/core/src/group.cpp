#include "superchar/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "superchar/error.hpp"

namespace superchar {

namespace {

[[noreturn]] void input_fail(const std::string& msg) { throw InputError(msg); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_fail("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace

// --- GroupTable ------------------------------------------------------------

GroupTable::GroupTable(std::string label, std::size_t order, std::vector<Element> mul)
    : label_(std::move(label)), order_(order), mul_(std::move(mul)) {
  if (order_ == 0) input_fail("group order must be positive");
  if (mul_.size() != order_ * order_) input_fail("multiplication table has wrong size");
  for (Element e : mul_)
    if (e >= order_) input_fail("table entry " + std::to_string(e) + " out of range");

  for (Element g = 0; g < order_; ++g)
    if (this->mul(0, g) != g || this->mul(g, 0) != g)
      input_fail("element 0 is not the identity (row/column " + std::to_string(g) + ")");

  std::vector<char> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order_; ++c) {
      Element e = mul_[r * order_ + c];
      if (seen[e]) input_fail("table is not a Latin square (row " + std::to_string(r) + ")");
      seen[e] = 1;
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order_; ++r) {
      Element e = mul_[r * order_ + c];
      if (seen[e]) input_fail("table is not a Latin square (column " + std::to_string(c) + ")");
      seen[e] = 1;
    }
  }

  auto check_triple = [&](Element a, Element b, Element c) {
    if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
      input_fail("table is not associative at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (order_ <= kEagerAssociativityBound) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(order_);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    for (int i = 0; i < 200000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
    associativity_verified_ = false;
  }

  inv_.assign(order_, 0);
  for (Element g = 0; g < order_; ++g)
    for (Element h = 0; h < order_; ++h)
      if (this->mul(g, h) == 0) {
        inv_[g] = h;
        break;
      }

  element_order_.assign(order_, 1);
  for (Element g = 0; g < order_; ++g) {
    std::size_t k = 1;
    for (Element x = g; x != 0; x = this->mul(x, g)) ++k;
    element_order_[g] = k;
    exponent_ = std::lcm(exponent_, element_order_[g]);
  }
}

Element GroupTable::power(Element g, long long k) const {
  auto n = static_cast<long long>(element_order_[g]);
  k %= n;
  if (k < 0) k += n;
  Element x = 0;
  for (long long i = 0; i < k; ++i) x = mul(x, g);
  return x;
}

// --- subgroups -------------------------------------------------------------

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Element a) {
    if (!ok) return;
    if (!s.contains(g.inv(a))) ok = false;
    s.for_each([&](Element b) {
      if (ok && !s.contains(g.mul(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  bool ok = true;
  s.for_each([&](Element n) {
    for (Element x = 0; ok && x < g.order(); ++x)
      if (!s.contains(g.conj(n, x))) ok = false;
  });
  return ok;
}

Subgroup Subgroup::from_members(const GroupTable& g, ElementSet members) {
  if (members.universe() != g.order() || !is_subgroup(g, members))
    throw PreconditionError("element set is not a subgroup of " + g.label());
  return Subgroup(&g, std::move(members));
}

Subgroup Subgroup::trivial(const GroupTable& g) { return Subgroup(&g, g.identity_set()); }
Subgroup Subgroup::whole(const GroupTable& g) { return Subgroup(&g, g.all()); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  return Subgroup::from_members(a.group(), a.members() & b.members());
}

Subgroup generated_subgroup(const GroupTable& g, const ElementSet& seed) {
  std::vector<Element> gens = seed.to_vector();
  ElementSet members = g.identity_set();
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!members.contains(y)) {
        members.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup(&g, std::move(members));
}

// --- partitions ------------------------------------------------------------

ElementPartition::ElementPartition(std::size_t universe,
                                   std::vector<std::vector<Element>> blocks)
    : blocks_(std::move(blocks)), block_of_(universe, static_cast<std::size_t>(-1)) {
  for (auto& b : blocks_) {
    if (b.empty()) input_fail("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (Element e : blocks_[i]) {
      if (e >= universe) input_fail("partition element out of range");
      if (block_of_[e] != static_cast<std::size_t>(-1)) input_fail("partition blocks overlap");
      block_of_[e] = i;
    }
  for (auto b : block_of_)
    if (b == static_cast<std::size_t>(-1)) input_fail("partition does not cover the group");
}

ElementPartition conjugacy_classes(const GroupTable& g) {
  std::vector<std::vector<Element>> blocks;
  std::vector<char> done(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ElementSet cls(g.order());
    for (Element h = 0; h < g.order(); ++h) cls.insert(g.conj(x, h));
    auto v = cls.to_vector();
    for (Element e : v) done[e] = 1;
    blocks.push_back(std::move(v));
  }
  return ElementPartition(g.order(), std::move(blocks));
}

// --- quotients, products, cosets -------------------------------------------

ElementSet Quotient::image(const ElementSet& s) const {
  ElementSet out(group->order());
  s.for_each([&](Element e) { out.insert(projection[e]); });
  return out;
}

ElementSet Quotient::preimage(const ElementSet& s) const {
  ElementSet out(projection.size());
  for (Element e = 0; e < projection.size(); ++e)
    if (s.contains(projection[e])) out.insert(e);
  return out;
}

Quotient quotient_group(const GroupPtr& g, const ElementSet& n) {
  if (n.universe() != g->order() || !is_subgroup(*g, n))
    throw PreconditionError("quotient by a non-subgroup of " + g->label());
  if (!is_normal(*g, n))
    throw PreconditionError("quotient by a non-normal subgroup of " + g->label());

  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> proj(g->order(), unset);
  std::vector<Element> reps;
  auto members = n.to_vector();
  for (Element x = 0; x < g->order(); ++x) {
    if (proj[x] != unset) continue;
    auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) proj[g->mul(x, m)] = idx;
  }
  std::size_t q = reps.size();
  std::vector<Element> mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) mul[a * q + b] = proj[g->mul(reps[a], reps[b])];
  auto label = g->label() + "/N" + std::to_string(n.size());
  return Quotient{std::make_shared<GroupTable>(std::move(label), q, std::move(mul)),
                  std::move(proj)};
}

Subgroup subgroup_product(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  if (!is_normal(g, a.members()) && !is_normal(g, b.members()))
    throw PreconditionError("subgroup product needs a normal factor");
  ElementSet prod(g.order());
  a.members().for_each([&](Element x) {
    b.members().for_each([&](Element y) { prod.insert(g.mul(x, y)); });
  });
  return Subgroup::from_members(g, std::move(prod));
}

ElementSet coset_saturation(const GroupTable& g, const Subgroup& m, const ElementSet& block) {
  ElementSet out(g.order());
  auto ms = m.members().to_vector();
  block.for_each([&](Element x) {
    for (Element y : ms) out.insert(g.mul(x, y));
  });
  return out;
}

EmbeddedGroup subgroup_as_group(const GroupTable& g, const Subgroup& h, std::string label) {
  EmbeddedGroup out;
  out.embedding = h.members().to_vector();
  out.local.assign(g.order(), EmbeddedGroup::npos);
  for (Element i = 0; i < out.embedding.size(); ++i) out.local[out.embedding[i]] = i;
  std::size_t k = out.embedding.size();
  std::vector<Element> mul(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      mul[a * k + b] = out.local[g.mul(out.embedding[a], out.embedding[b])];
  out.group = std::make_shared<GroupTable>(std::move(label), k, std::move(mul));
  return out;
}

// --- text formats ----------------------------------------------------------

GroupPtr parse_group_table(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::size_t n = 0;
  if (!(in >> word) || word != "order" || !(in >> n) || n == 0)
    input_fail("group table must start with 'order <n>'");
  std::vector<Element> mul;
  mul.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v;
    if (!(in >> v)) input_fail("group table has fewer than n*n entries");
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      input_fail("table entry " + std::to_string(v) + " out of range");
    mul.push_back(static_cast<Element>(v));
  }
  if (in >> word) input_fail("trailing data after group table");
  return std::make_shared<GroupTable>(std::move(label), n, std::move(mul));
}

std::string format_group_table(const GroupTable& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

std::vector<Permutation> parse_permutations(std::string_view text) {
  std::vector<std::vector<std::vector<std::size_t>>> gens;  // cycles per line
  std::size_t degree = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      if (s[i] != '(') input_fail("expected '(' in permutation '" + std::string(s) + "'");
      auto close = s.find(')', i);
      if (close == std::string_view::npos) input_fail("unterminated cycle in '" + std::string(s) + "'");
      std::vector<std::size_t> cyc;
      std::istringstream cs{std::string(s.substr(i + 1, close - i - 1))};
      std::string tok;
      while (cs >> tok) {
        std::size_t p;
        if (!parse_uint(tok, p) || p == 0) input_fail("bad point '" + tok + "' (points start at 1)");
        cyc.push_back(p - 1);
        degree = std::max(degree, p);
      }
      cycles.push_back(std::move(cyc));
      i = close + 1;
    }
    gens.push_back(std::move(cycles));
  }
  if (gens.empty()) input_fail("no permutation generators given");

  std::vector<Permutation> out;
  for (const auto& cycles : gens) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<char> moved(degree);
    for (const auto& cyc : cycles)
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        if (moved[cyc[j]]) input_fail("point repeated within a generator");
        moved[cyc[j]] = 1;
        p[cyc[j]] = static_cast<std::uint32_t>(cyc[(j + 1) % cyc.size()]);
      }
    out.push_back(std::move(p));
  }
  return out;
}

GroupPtr group_from_permutations(std::string label, const std::vector<Permutation>& gens) {
  std::size_t degree = 0;
  for (const auto& p : gens) degree = std::max(degree, p.size());
  auto pad = [&](Permutation p) {
    for (auto i = static_cast<std::uint32_t>(p.size()); i < degree; ++i) p.push_back(i);
    return p;
  };
  auto compose = [](const Permutation& a, const Permutation& b) {  // a then b
    Permutation c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
    return c;
  };
  std::vector<Permutation> gs;
  for (const auto& p : gens) gs.push_back(pad(p));

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Permutation, Element> index{{id, 0}};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (const auto& s : gs) {
      auto y = compose(x, s);
      if (index.emplace(y, 0).second) {
        queue.push_back(std::move(y));
        if (index.size() > 100000) throw GuardError("permutation group too large");
      }
    }
  }
  std::vector<Permutation> elems;
  Element next = 0;
  for (auto& [perm, idx] : index) {  // std::map iterates lexicographically
    idx = next++;
    elems.push_back(perm);
  }
  std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  return std::make_shared<GroupTable>(std::move(label), n, std::move(mul));
}

// --- catalog ---------------------------------------------------------------

namespace {

GroupPtr from_rule(std::string label, std::size_t n, auto rule) {
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>(rule(a, b));
  return std::make_shared<GroupTable>(std::move(label), n, std::move(mul));
}

GroupPtr cyclic(std::size_t n) {
  return from_rule("C" + std::to_string(n), n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

// r^k s^f  ->  k + n f
GroupPtr dihedral(std::size_t n) {
  return from_rule("D" + std::to_string(n), 2 * n, [n](std::size_t a, std::size_t b) {
    std::size_t k = a % n, f = a / n, l = b % n, g = b / n;
    std::size_t r = f ? (k + n - l) % n : (k + l) % n;
    return r + n * ((f + g) % 2);
  });
}

// a^k x^f -> k + 2m f, with a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1
GroupPtr dicyclic(std::size_t order) {
  std::size_t m = order / 4, n = 2 * m;
  return from_rule("Q" + std::to_string(order), order, [m, n](std::size_t a, std::size_t b) {
    std::size_t k = a % n, f = a / n, l = b % n, g = b / n;
    if (!f) return (k + l) % n + n * g;
    std::size_t r = (k + n - l) % n;
    if (g) return (r + m) % n;
    return r + n;
  });
}

GroupPtr symmetric_like(std::size_t n, bool even_only, std::string label) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> gens;
  if (n >= 2) {
    if (even_only) {
      for (std::size_t i = 2; i < n; ++i) {  // 3-cycles (0 1 i)
        Permutation c = p;
        c[0] = 1;
        c[1] = static_cast<std::uint32_t>(i);
        c[i] = 0;
        gens.push_back(c);
      }
    } else {
      Permutation t = p;
      std::swap(t[0], t[1]);
      Permutation c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
      gens = {t, c};
    }
  }
  if (gens.empty()) gens.push_back(p);
  return group_from_permutations(std::move(label), gens);
}

// Mixed-radix numbering: the last factor varies fastest.
GroupPtr direct_product(std::string label, const std::vector<GroupPtr>& factors) {
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    if (n > 4096) throw GuardError("catalog group too large");
  }
  return from_rule(std::move(label), n, [&](std::size_t x, std::size_t y) {
    std::size_t result = 0, scale = 1;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      std::size_t k = (*it)->order();
      auto a = static_cast<Element>(x % k), b = static_cast<Element>(y % k);
      result += (*it)->mul(a, b) * scale;
      scale *= k;
      x /= k;
      y /= k;
    }
    return result;
  });
}

GroupPtr catalog_atom(std::string_view name) {
  auto bad = [&]() -> GroupPtr { input_fail("unknown catalog group '" + std::string(name) + "'"); };
  if (name.size() < 2) return bad();
  std::size_t n;
  if (!parse_uint(name.substr(1), n) || n == 0) return bad();
  switch (name[0]) {
    case 'C':
      return cyclic(n);
    case 'D':
      return dihedral(n);
    case 'Q':
      if (n < 8 || n % 4) return bad();
      return dicyclic(n);
    case 'S':
      if (n > 4) return bad();
      return symmetric_like(n, false, "S" + std::to_string(n));
    case 'A':
      if (n > 4) return bad();
      return symmetric_like(n, true, "A" + std::to_string(n));
    default:
      return bad();
  }
}

}  // namespace

GroupPtr catalog_group(std::string_view name) {
  name = trim(name);
  if (name.empty()) input_fail("empty catalog name");
  std::vector<GroupPtr> factors;
  std::size_t start = 0;
  while (true) {
    auto end = name.find('x', start);
    auto factor = name.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      if (!parse_uint(factor.substr(caret + 1), power) || power == 0 || power > 12)
        input_fail("bad power in catalog name '" + std::string(name) + "'");
      factor = factor.substr(0, caret);
    }
    auto atom = catalog_atom(factor);
    factors.insert(factors.end(), power, atom);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (factors.size() == 1) return factors.front();
  return direct_product(std::string(name), factors);
}

GroupPtr load_group(std::string_view spec) {
  if (spec.starts_with("file:")) {
    std::string path(spec.substr(5));
    return parse_group_table(read_file(path), file_stem(path));
  }
  if (spec.starts_with("perm:")) {
    std::string path(spec.substr(5));
    return group_from_permutations(file_stem(path), parse_permutations(read_file(path)));
  }
  return catalog_group(spec);
}

}  // namespace superchar
