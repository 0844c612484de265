#include "superchar/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "superchar/error.hpp"

namespace superchar {

// --- CharacterTable --------------------------------------------------------

namespace {

bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c) return c < 0;
  }
  return false;
}

bool is_principal_row(const std::vector<Cyclotomic>& row) {
  for (const auto& v : row)
    if (!(v.is_rational() && v.rational_value() == 1)) return false;
  return true;
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, ElementPartition classes,
                               std::vector<std::vector<Cyclotomic>> values, unsigned exponent)
    : group_(std::move(group)),
      classes_(std::move(classes)),
      values_(std::move(values)),
      exponent_(exponent) {
  std::stable_sort(values_.begin(), values_.end(), [](const auto& a, const auto& b) {
    int c = compare(a[0], b[0]);
    if (c) return c < 0;
    bool pa = is_principal_row(a), pb = is_principal_row(b);
    if (pa != pb) return pa;
    return row_less(a, b);
  });
}

long CharacterTable::degree(std::size_t chi) const {
  const auto& d = values_[chi][0];
  if (!d.is_rational()) throw InternalError("character degree is not rational");
  Rational q = d.rational_value();
  if (q.get_den() != 1 || sgn(q) <= 0) throw InternalError("character degree is not a positive integer");
  return q.get_num().get_si();
}

ElementSet CharacterTable::kernel(std::size_t chi) const {
  ElementSet k(group_->order());
  for (std::size_t c = 0; c < num_classes(); ++c)
    if (values_[chi][c] == values_[chi][0])
      for (Element e : classes_.block(c)) k.insert(e);
  return k;
}

// --- class multiplication coefficients -------------------------------------

ClassCoefficients class_mult_coefficients(const GroupTable& g, const ElementPartition& classes) {
  std::size_t k = classes.size();
  ClassCoefficients a(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      Element z = classes.block(l).front();
      for (Element x : classes.block(i)) {
        Element y = g.mul(g.inv(x), z);  // xy = z
        ++a[i][classes.block_of(y)][l];
      }
    }
  return a;
}

// --- Dixon -----------------------------------------------------------------

namespace {

using u64 = unsigned long long;

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

using Matrix = std::vector<std::vector<u64>>;

// Basis of the null space of `a` (rows x cols) over F_p.
std::vector<std::vector<u64>> null_space(Matrix a, std::size_t cols, u64 p) {
  std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 inv = mod_inv(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits span(basis) into eigenspaces of m. Each basis vector is a column
// vector of length k stored as a row.
std::vector<std::vector<std::vector<u64>>> split_space(const Matrix& m,
                                                       const std::vector<std::vector<u64>>& basis,
                                                       u64 p) {
  std::size_t k = m.size(), d = basis.size();
  // mb[r] = m * basis[r]
  std::vector<std::vector<u64>> mb(d, std::vector<u64>(k, 0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < k; ++i) {
      u64 s = 0;
      for (std::size_t j = 0; j < k; ++j) s = (s + m[i][j] * basis[r][j]) % p;
      mb[r][i] = s;
    }
  std::vector<std::vector<std::vector<u64>>> parts;
  std::size_t found = 0;
  for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
    // (m - lambda) B x = 0, a k x d system
    Matrix a(k, std::vector<u64>(d, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < d; ++r)
        a[i][r] = (mb[r][i] + p - lambda * basis[r][i] % p) % p;
    auto ns = null_space(std::move(a), d, p);
    if (ns.empty()) continue;
    std::vector<std::vector<u64>> space;
    for (const auto& x : ns) {
      std::vector<u64> v(k, 0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < k; ++i) v[i] = (v[i] + x[r] * basis[r][i]) % p;
      space.push_back(std::move(v));
    }
    found += space.size();
    parts.push_back(std::move(space));
  }
  if (found != d) throw InternalError("class matrix does not split over F_p");
  return parts;
}

}  // namespace

TablePtr dixon_character_table(const GroupPtr& gp, const DixonOptions& opts) {
  const GroupTable& g = *gp;
  if (g.order() > opts.max_order)
    throw GuardError("group order " + std::to_string(g.order()) + " exceeds the bound " +
                     std::to_string(opts.max_order));
  auto classes = conjugacy_classes(g);
  std::size_t k = classes.size();
  u64 order = g.order();
  u64 e = g.exponent();

  u64 p = 0;
  for (u64 cand = e + 1; cand < opts.prime_bound; cand += e)
    if (cand * cand > 4 * order && is_prime(cand)) {
      p = cand;
      break;
    }
  if (!p)
    throw GuardError("no prime p = 1 mod " + std::to_string(e) + " below " +
                     std::to_string(opts.prime_bound));

  auto coeffs = class_mult_coefficients(g, classes);
  std::vector<Matrix> mats(k, Matrix(k, std::vector<u64>(k)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) mats[j][i][l] = static_cast<u64>(coeffs[i][j][l]) % p;

  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> id(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t j = 1; j < k; ++j) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_split) break;
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& part : split_space(mats[j], s, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalError("class matrices failed to separate characters");

  std::vector<std::size_t> inv_class(k), sizes(k);
  for (std::size_t i = 0; i < k; ++i) {
    inv_class[i] = classes.block_of(g.inv(classes.block(i).front()));
    sizes[i] = classes.block(i).size();
  }
  // power_class[i][t] = class of rep_i^t
  std::vector<std::vector<std::size_t>> power_class(k, std::vector<std::size_t>(e));
  for (std::size_t i = 0; i < k; ++i) {
    Element r = classes.block(i).front(), x = 0;
    for (u64 t = 0; t < e; ++t) {
      power_class[i][t] = classes.block_of(x);
      x = g.mul(x, r);
    }
  }

  u64 z = mod_pow(primitive_root(p), (p - 1) / e, p);
  u64 z_inv = mod_inv(z, p);
  u64 e_inv = mod_inv(e % p, p);
  auto root_bound = static_cast<u64>(std::sqrt(static_cast<double>(order))) + 1;

  std::vector<std::vector<Cyclotomic>> values;
  for (const auto& space : spaces) {
    std::vector<u64> w = space.front();
    if (w[0] == 0) throw InternalError("central character with zero identity component");
    u64 s0 = mod_inv(w[0], p);
    for (auto& v : w) v = v * s0 % p;

    // |G| / chi(1)^2 = sum_i w_i w_{i*} / |K_i|
    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i)
      sum = (sum + w[i] * w[inv_class[i]] % p * mod_inv(sizes[i] % p, p)) % p;
    if (sum == 0) throw InternalError("degree recovery failed");
    u64 d2 = order % p * mod_inv(sum, p) % p;
    u64 degree = 0;
    for (u64 d = 1; d <= root_bound; ++d)
      if (d * d % p == d2 && d * d <= order) {
        degree = d;
        break;
      }
    if (!degree) throw InternalError("degree recovery failed");

    std::vector<u64> chi(k);
    for (std::size_t i = 0; i < k; ++i)
      chi[i] = w[i] * (degree % p) % p * mod_inv(sizes[i] % p, p) % p;

    std::vector<Cyclotomic> row;
    row.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      // multiplicity of zeta^s as an eigenvalue of the representation at rep_i
      std::vector<Rational> mult(e);
      u64 total = 0;
      for (u64 s = 0; s < e; ++s) {
        u64 acc = 0;
        u64 step = mod_pow(z_inv, s, p), zt = 1;
        for (u64 t = 0; t < e; ++t) {
          acc = (acc + chi[power_class[i][t]] * zt) % p;
          zt = zt * step % p;
        }
        u64 m = acc * e_inv % p;
        if (m > degree) throw InternalError("eigenvalue multiplicity out of range");
        total += m;
        mult[s] = static_cast<unsigned long>(m);
      }
      if (total != degree) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      row.push_back(Cyclotomic::from_powers(static_cast<unsigned>(e), std::move(mult)));
    }
    values.push_back(std::move(row));
  }

  auto table = std::make_shared<CharacterTable>(gp, std::move(classes), std::move(values),
                                                static_cast<unsigned>(e));
  auto report = validate_table(*table);
  if (!report.ok()) throw InternalError("Dixon output failed validation: " + report.first_failure());
  return table;
}

// --- validation ------------------------------------------------------------

CheckReport validate_table(const CharacterTable& t) {
  CheckReport report;
  const auto& g = t.group();
  std::size_t k = t.num_classes();
  Rational order(static_cast<unsigned long>(g.order()));

  auto& shape = report.add("row-count");
  if (t.size() != k) {
    record_failure(shape, std::to_string(t.size()) + " rows for " + std::to_string(k) + " classes");
    return report;
  }
  for (const auto& row : t.values())
    if (row.size() != k) {
      record_failure(shape, "row with " + std::to_string(row.size()) + " entries");
      return report;
    }

  auto& principal = report.add("principal-row");
  if (k == 0 || !is_principal_row(t.values()[0])) record_failure(principal, "row 0 is not all ones");

  auto& integral = report.add("integral-values");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c)
      if (!t.value(i, c).has_integral_coeffs())
        record_failure(integral, "chi_" + std::to_string(i) + " at class " + std::to_string(c));

  auto& degrees = report.add("degree-sum");
  Rational sum = 0;
  bool degrees_ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& d = t.value(i, 0);
    if (!d.is_rational() || d.rational_value().get_den() != 1 || sgn(d.rational_value()) <= 0) {
      record_failure(degrees, "chi_" + std::to_string(i) + "(1) = " + d.to_string());
      degrees_ok = false;
      continue;
    }
    sum += d.rational_value() * d.rational_value();
  }
  if (degrees_ok && sum != order)
    record_failure(degrees, "sum of squared degrees is " + sum.get_str() + ", |G| = " + order.get_str());

  auto& first = report.add("first-orthogonality");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic acc = Cyclotomic::from_int(0, t.exponent());
      for (std::size_t c = 0; c < k; ++c)
        acc += hermitian_term(t.value(i, c), t.value(j, c)) *
               Rational(static_cast<unsigned long>(t.class_size(c)));
      acc /= order;
      if (acc != Cyclotomic::from_int(i == j ? 1 : 0))
        record_failure(first, "<chi_" + std::to_string(i) + ", chi_" + std::to_string(j) +
                                  "> = " + acc.to_string());
    }

  auto& second = report.add("second-orthogonality");
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic acc = Cyclotomic::from_int(0, t.exponent());
      for (std::size_t i = 0; i < k; ++i) acc += hermitian_term(t.value(i, a), t.value(i, b));
      Rational expect = a == b ? order / Rational(static_cast<unsigned long>(t.class_size(a))) : Rational(0);
      if (acc != Cyclotomic::from_rational(expect))
        record_failure(second, "classes (" + std::to_string(a) + ", " + std::to_string(b) +
                                   ") sum to " + acc.to_string());
    }
  return report;
}

// --- text format -----------------------------------------------------------

std::string format_table(const CharacterTable& t) {
  std::ostringstream out;
  out << "chartab " << t.group().label() << " classes=" << t.num_classes()
      << " exponent=" << t.exponent() << "\n";
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    out << "class " << c << " size=" << t.class_size(c) << " rep=" << t.rep(c) << "\n";
  for (const auto& row : t.values()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? ", " : "") << row[c].to_string();
    out << "\n";
  }
  return out.str();
}

namespace {

bool read_key(const std::string& tok, const std::string& key, std::size_t& out) {
  if (tok.rfind(key + "=", 0) != 0) return false;
  try {
    std::size_t used = 0;
    out = std::stoul(tok.substr(key.size() + 1), &used);
    return used == tok.size() - key.size() - 1;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

TablePtr ingest_table(std::string_view text, const GroupPtr& gp) {
  const GroupTable& g = *gp;
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line.substr(first));
    }
  }
  auto fail = [](const std::string& msg) -> TablePtr { throw InputError("character table: " + msg); };
  if (lines.empty()) return fail("empty input");

  std::size_t k = 0, e = 0;
  {
    std::istringstream hdr(lines[0]);
    std::string word, label, kt, et;
    if (!(hdr >> word >> label >> kt >> et) || word != "chartab" || !read_key(kt, "classes", k) ||
        !read_key(et, "exponent", e) || k == 0 || e == 0)
      return fail("header must be 'chartab <label> classes=<k> exponent=<e>'");
  }
  if (lines.size() != 1 + 2 * k) return fail("expected " + std::to_string(2 * k) + " lines after the header");

  auto classes = conjugacy_classes(g);
  if (k != classes.size())
    return fail("class mismatch: table has " + std::to_string(k) + " classes, group has " +
                std::to_string(classes.size()));
  if (e != g.exponent())
    return fail("exponent " + std::to_string(e) + " differs from the group exponent " +
                std::to_string(g.exponent()));

  // column c of the file -> canonical class index
  std::vector<std::size_t> column_class(k);
  std::vector<char> used(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::istringstream ln(lines[1 + c]);
    std::string word, idx, st, rt;
    std::size_t index = 0, size = 0, rep = 0;
    if (!(ln >> word >> idx >> st >> rt) || word != "class" || !read_key(st, "size", size) ||
        !read_key(rt, "rep", rep))
      return fail("bad class line '" + lines[1 + c] + "'");
    try {
      index = std::stoul(idx);
    } catch (const std::exception&) {
      return fail("bad class index in '" + lines[1 + c] + "'");
    }
    if (index != c) return fail("class lines must be numbered 0..k-1 in order");
    if (rep >= g.order()) return fail("class mismatch: representative " + std::to_string(rep) + " out of range");
    std::size_t cls = classes.block_of(static_cast<Element>(rep));
    if (used[cls]) return fail("class mismatch: two columns name the same conjugacy class");
    if (classes.block(cls).size() != size)
      return fail("class mismatch: class " + std::to_string(c) + " has size " + std::to_string(size) +
                  " but its representative's class has size " + std::to_string(classes.block(cls).size()));
    used[cls] = 1;
    column_class[c] = cls;
  }

  std::vector<std::vector<Cyclotomic>> values;
  for (std::size_t r = 0; r < k; ++r) {
    const auto& line = lines[1 + k + r];
    std::vector<Cyclotomic> row(k);
    std::size_t start = 0, col = 0;
    while (true) {
      auto comma = line.find(',', start);
      auto field = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (col >= k) return fail("row " + std::to_string(r) + " has too many values");
      row[column_class[col++]] = Cyclotomic::parse(field, static_cast<unsigned>(e));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (col != k) return fail("row " + std::to_string(r) + " has " + std::to_string(col) + " values");
    values.push_back(std::move(row));
  }

  auto table = std::make_shared<CharacterTable>(gp, std::move(classes), std::move(values),
                                                static_cast<unsigned>(e));
  auto report = validate_table(*table);
  if (!report.ok()) return fail("orthogonality failure: " + report.first_failure());
  return table;
}

}  // namespace superchar
