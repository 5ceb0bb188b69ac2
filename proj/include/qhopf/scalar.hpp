#pragma once

// Exact scalars: rationals, the cyclotomic field Q(w_m) = Q[x]/Phi_m, and
// polynomials over it in one formal parameter (beta).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qhopf {

using Rational = mpq_class;

/// Phi_m as integer coefficients, lowest degree first. Memoized; thread safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// deg Phi_m = phi(m).
int cyclotomic_degree(int m);

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Element of Q(w_m) in canonical reduced form: a polynomial in w of degree
/// below phi(m).
class Cyc {
 public:
  Cyc();
  Cyc(int conductor, const Rational& value);

  static Cyc zero(int conductor) { return Cyc(conductor, Rational(0)); }
  static Cyc one(int conductor) { return Cyc(conductor, Rational(1)); }
  /// w^k, k taken mod m (negative k allowed).
  static Cyc omega_power(int conductor, std::int64_t k);
  /// Reduces an arbitrary-length coefficient list modulo Phi_m.
  static Cyc from_coeffs(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);

  /// Multiplicative inverse via extended gcd with Phi_m. Throws SingularError on 0.
  Cyc inverse() const;

  /// Re-expresses a conductor-1 value over the given conductor.
  Cyc promoted(int conductor) const;

  std::string to_string() const;

 private:
  int m_;
  std::vector<Rational> c_;
};

/// Polynomial in the formal parameter beta with coefficients in Q(w_m).
/// Identities verified over this ring hold for every value of beta.
class Scalar {
 public:
  Scalar() : m_(1) {}
  Scalar(int conductor, const Rational& value);
  explicit Scalar(const Cyc& c);
  Scalar(int conductor, std::vector<Cyc> coeffs);

  static Scalar zero(int conductor) { return Scalar(conductor, Rational(0)); }
  static Scalar one(int conductor) { return Scalar(conductor, Rational(1)); }
  static Scalar integer(int conductor, long v) { return Scalar(conductor, Rational(v)); }
  static Scalar beta(int conductor);
  static Scalar omega_power(int conductor, std::int64_t k) {
    return Scalar(Cyc::omega_power(conductor, k));
  }

  int conductor() const { return m_; }
  /// Degree in beta; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Cyc>& coeffs() const { return c_; }
  Cyc coeff(int k) const;

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  Cyc constant() const { return coeff(0); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Inverse of a nonzero constant. Throws SingularError for zero or
  /// beta-dependent input.
  Scalar inverse() const;

  /// Replaces beta by a value (itself a scalar, possibly containing beta).
  Scalar substitute(const Scalar& value) const;

  std::string to_string() const;

 private:
  void trim();
  void align(const Scalar& o);

  int m_;
  std::vector<Cyc> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qhopf
