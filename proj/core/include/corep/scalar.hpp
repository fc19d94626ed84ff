#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "corep/error.hpp"

namespace corep {

using Rat = mpq_class;

// Dense rational polynomials, low degree first, no trailing zeros.
namespace qpoly {
using Poly = std::vector<Rat>;

void trim(Poly& p);
int deg(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// Euclidean division by a nonzero divisor; returns quotient, stores remainder.
Poly divmod(const Poly& a, const Poly& b, Poly& rem);
Poly gcd(Poly a, Poly b);  // monic
Poly derivative(const Poly& a);
Rat eval(const Poly& a, const Rat& x);

// n-th cyclotomic polynomial (integer coefficients).
const Poly& cyclotomic(int n);
int cyclotomic_degree(int n);  // Euler phi(n)
}  // namespace qpoly

// Element of the cyclotomic field Q(zeta_n), stored as a rational-coefficient
// polynomial in zeta reduced modulo the n-th cyclotomic polynomial. The
// reduced vector is canonical: equality is coefficient-wise equality.
class Cyc {
public:
  Cyc() : order_(1) {}
  explicit Cyc(const Rat& r, int order = 1);
  Cyc(long v, int order) : Cyc(Rat(v), order) {}

  static Cyc zero(int order) { return Cyc(Rat(0), order); }
  static Cyc one(int order) { return Cyc(Rat(1), order); }
  static Cyc zeta(int order, long power = 1);

  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.size() <= 1; }
  Rat rational() const;  // throws unless is_rational()

  Cyc promoted(int new_order) const;  // requires order() | new_order

  Cyc operator-() const;
  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);
  Cyc inverse() const;
  Cyc pow(long e) const;
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  bool is_root_of_unity() const;

  const std::vector<Rat>& coeffs() const { return c_; }
  std::string str() const;  // "p(z)/q" with integer p, positive q

private:
  int order_;
  std::vector<Rat> c_;  // deg < phi(order), trimmed

  void reduce_(std::vector<Rat> raw);
  static int lcm_order_(int a, int b);
  friend class Scalar;
};

// Ground scalar: rational function in one indeterminate T over Q(zeta_n).
// Constants (the overwhelmingly common case) have num degree <= 0 and den 1.
// The indeterminate provides the transcendental-marker mode used when a
// parameter must be provably not a root of unity. Canonical form: denominator
// monic, numerator and denominator coprime; equality is structural.
class Scalar {
public:
  Scalar() : order_(1), den_{Cyc::one(1)} {}
  Scalar(const Rat& r, int order = 1);
  Scalar(long v, int order = 1) : Scalar(Rat(v), order) {}
  explicit Scalar(const Cyc& c);

  static Scalar zero(int order = 1) { return Scalar(Rat(0), order); }
  static Scalar one(int order = 1) { return Scalar(Rat(1), order); }
  static Scalar zeta(int order, long power = 1) { return Scalar(Cyc::zeta(order, power)); }
  static Scalar marker(int order = 1);  // the indeterminate T

  int order() const { return order_; }
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_constant() const;  // no T involved
  bool is_rational() const;
  const Cyc& constant() const;  // throws unless is_constant()
  Rat rational() const;

  Scalar promoted(int new_order) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inverse() const;
  Scalar pow(long e) const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  bool is_root_of_unity() const;

  std::string str() const;
  // Accepts the "p(z)/q" schema strings plus plain rationals and the marker T.
  static Scalar parse(const std::string& text, int order);

private:
  int order_;
  std::vector<Cyc> num_, den_;  // polynomials in T over Q(zeta_order)

  Scalar(int order, std::vector<Cyc> num, std::vector<Cyc> den);
  void normalize_();
};

}  // namespace corep
