#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n).
//
// Elements are stored in the power basis 1, z, ..., z^{phi(n)-1} reduced
// modulo the n-th cyclotomic polynomial, so equal values have equal
// coefficient vectors.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace glim {

using Rational = mpq_class;
using Integer = mpz_class;

class CyclotomicField {
 public:
  /// Shared, immutable field instance for conductor n (cached).
  static std::shared_ptr<const CyclotomicField> get(int n);

  int conductor() const { return n_; }
  int degree() const { return phi_; }
  /// Coefficients of Phi_n, lowest degree first (monic, length phi+1).
  const std::vector<Integer>& cyclotomic_polynomial() const { return poly_; }
  /// Power-basis vector of zeta^k, k taken mod n.
  const std::vector<Rational>& zeta_power(long k) const;
  /// Units k in [1, n) with gcd(k, n) = 1.
  const std::vector<int>& galois_units() const { return units_; }

  explicit CyclotomicField(int n);

 private:
  int n_;
  int phi_;
  std::vector<Integer> poly_;
  std::vector<std::vector<Rational>> powers_;
  std::vector<int> units_;
};

class CycNum {
 public:
  /// Zero of Q(zeta_n).
  explicit CycNum(int n);
  CycNum(int n, const Rational& q);
  CycNum(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> coeffs);

  static CycNum zeta(int n, long k);

  int conductor() const { return field_->conductor(); }
  const CyclotomicField& field() const { return *field_; }
  const std::shared_ptr<const CyclotomicField>& field_ptr() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; throws unless is_rational().
  Rational to_rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator*(const Rational& q) const;
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws on zero.
  CycNum inverse() const;
  /// Multiply by zeta^k (cheap).
  CycNum times_zeta(long k) const;
  /// Galois conjugate zeta -> zeta^k, gcd(k, n) = 1.
  CycNum galois(int k) const;
  /// Field norm down to Q.
  Rational norm() const;
  /// Same value viewed in Q(zeta_m), n | m.
  CycNum lift(int m) const;
  /// k with this == zeta^k, if this is an n-th root of unity.
  std::optional<int> root_of_unity_exponent() const;
  /// Common denominator of the power-basis coefficients.
  Integer denominator() const;

  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;
};

CycNum root_of_unity(int n, long k);
/// Field norm to Q; multiplicative.
Rational norm_to_Q(const CycNum& x);

/// Brings two values to a common conductor (lcm).
std::pair<CycNum, CycNum> common_field(const CycNum& a, const CycNum& b);

/// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& q, unsigned long p);
/// Prime factors of |z| (z != 0).
std::vector<unsigned long> prime_factors(Integer z);

}  // namespace glim
