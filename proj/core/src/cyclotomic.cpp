#include "superchar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "superchar/error.hpp"

namespace superchar {

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division of a by a monic b.
std::vector<long long> poly_div(std::vector<long long> a, const std::vector<long long>& b) {
  std::size_t db = b.size() - 1;
  std::vector<long long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long long c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Reduce modulo Phi_order in place and truncate to phi(order) coefficients.
void reduce(std::vector<Rational>& p, unsigned order) {
  const auto& phi_poly = cyclotomic_polynomial(order);
  std::size_t d = phi_poly.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < d; ++j)
      if (phi_poly[j]) p[i - d + j] -= c * static_cast<long>(phi_poly[j]);
    p[i] = 0;
  }
  p.resize(d);
}

// x^n - 1 = prod_{d | n} Phi_d. Map nodes are stable, so references into
// the cache stay valid.
const std::vector<long long>& cyclotomic_locked(unsigned n,
                                                std::map<unsigned, std::vector<long long>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  std::vector<long long> den{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_locked(d, cache));
  return cache.emplace(n, poly_div(num, den)).first->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  if (n == 0) throw InternalError("cyclotomic polynomial of order 0");
  std::lock_guard lock(mu);
  return cyclotomic_locked(n, cache);
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, unsigned order) {
  std::vector<Rational> c(euler_phi(order));
  c[0] = q;
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_root(unsigned order, long long k) {
  auto e = static_cast<long long>(order);
  k %= e;
  if (k < 0) k += e;
  std::vector<Rational> p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = 1;
  reduce(p, order);
  return Cyclotomic(order, std::move(p));
}

Cyclotomic Cyclotomic::from_powers(unsigned order, std::vector<Rational> coeffs) {
  std::vector<Rational> p(order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p[k % order] += coeffs[k];
  reduce(p, order);
  return Cyclotomic(order, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InternalError("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

bool Cyclotomic::has_integral_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> p(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[(order_ - k) % order_] += coeffs_[k];
  reduce(p, order_);
  return Cyclotomic(order_, std::move(p));
}

Cyclotomic Cyclotomic::lifted(unsigned order) const {
  if (order == order_) return *this;
  if (order % order_) throw InternalError("lift to a non-multiple order");
  unsigned step = order / order_;
  std::vector<Rational> p(order);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  reduce(p, order);
  return Cyclotomic(order, std::move(p));
}

std::complex<double> Cyclotomic::approx_complex() const {
  std::complex<double> z{0, 0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / order_;
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (order_ == other.order_) return;
  unsigned l = std::lcm(order_, other.order_);
  *this = lifted(l);
  other = other.lifted(l);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    Cyclotomic b = o;
    align_with(b);
    return *this += b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    Cyclotomic b = o;
    align_with(b);
    return *this -= b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    Cyclotomic b = o;
    align_with(b);
    return *this *= b;
  }
  std::size_t n = coeffs_.size();
  std::vector<Rational> p(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(o.coeffs_[j]) != 0) p[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(p, order_);
  coeffs_ = std::move(p);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& q) {
  if (sgn(q) == 0) throw InternalError("cyclotomic division by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  Cyclotomic x = a, y = b;
  x.align_with(y);
  return x.coeffs_ == y.coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    Cyclotomic x = a, y = b;
    x.align_with(y);
    return compare(x, y);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view text, unsigned order) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> Cyclotomic {
    throw InputError("malformed cyclotomic value '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  std::vector<Rational> p(order);
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail();
    }
    first = false;

    Rational coeff = 1;
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    bool has_coeff = j > i;
    if (has_coeff) {
      std::string tok = s.substr(i, j - i);
      if (tok.front() == '/' || tok.back() == '/' || std::count(tok.begin(), tok.end(), '/') > 1)
        return fail();
      try {
        coeff = Rational(tok);
      } catch (const std::invalid_argument&) {
        return fail();
      }
      if (coeff.get_den() == 0) return fail();
      coeff.canonicalize();
      i = j;
    }

    unsigned long power = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
      if (s[i] == '*') {
        if (!has_coeff) return fail();
        ++i;
      }
      if (i >= s.size() || s[i] != 'z') return fail();
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) return fail();
        power = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coeff) {
      return fail();
    }
    p[power % order] += sign * coeff;
  }
  reduce(p, order);
  return Cyclotomic(order, std::move(p));
}

Cyclotomic hermitian_term(const Cyclotomic& a, const Cyclotomic& b) { return a * b.conjugate(); }

}  // namespace superchar
