// Exact arithmetic in cyclotomic fields Q(zeta_e).
//
// A value of order e is stored in the power basis 1, z, ..., z^(phi(e)-1)
// with z = exp(2 pi i / e), reduced modulo the e-th cyclotomic polynomial.
// The reduced coefficient vector is unique, so equality and zero tests are
// exact. Values of different orders are lifted to the lcm before combining.

#ifndef SUPERCHAR_CYCLOTOMIC_HPP_
#define SUPERCHAR_CYCLOTOMIC_HPP_

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace superchar {

using Rational = mpq_class;

// Coefficients of Phi_n, lowest degree first. Cached; thread-safe.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}

  static Cyclotomic from_rational(const Rational& q, unsigned order = 1);
  static Cyclotomic from_int(long long v, unsigned order = 1) {
    return from_rational(Rational(static_cast<long>(v)), order);
  }
  // zeta_order^k; k is reduced mod order.
  static Cyclotomic from_root(unsigned order, long long k);
  // Sum of c_k zeta_order^k over an arbitrary-length coefficient list.
  static Cyclotomic from_powers(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws InternalError if the value is not rational.
  Rational rational_value() const;
  // True when every coordinate is an integer.
  bool has_integral_coeffs() const;

  // zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;
  // Same value expressed at a multiple of the current order.
  Cyclotomic lifted(unsigned order) const;

  // Floating approximation for display and sanity checks only.
  std::complex<double> approx_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);
  Cyclotomic& operator/=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Lexicographic order on coefficient vectors (after lifting to a common
  // order). Used only to make outputs deterministic.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

  // `a0 + a1*z + a2*z^2 ...` with z = zeta_order; "0" for zero.
  std::string to_string() const;
  // Inverse of to_string for a known order. Accepts any exponent and
  // repeated terms. Throws InputError on malformed text.
  static Cyclotomic parse(std::string_view text, unsigned order);

 private:
  Cyclotomic(unsigned order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}
  void align_with(Cyclotomic& other);

  unsigned order_;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

// a * conjugate(b)
Cyclotomic hermitian_term(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace superchar

#endif  // SUPERCHAR_CYCLOTOMIC_HPP_
