#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace pyrito {

using Rational = mpq_class;

// An exact element a + b*sqrt(2) + c*sqrt(5) + d*sqrt(10) of the real field
// Q(sqrt2, sqrt5). Coefficients are kept canonical (lowest terms, positive
// denominator) so equality is coefficient equality.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(const Rational& r) : a_(r) { a_.canonicalize(); }  // NOLINT
  FieldScalar(Rational a, Rational b, Rational c, Rational d);

  static FieldScalar sqrt2() { return {0, 1, 0, 0}; }
  static FieldScalar sqrt5() { return {0, 0, 1, 0}; }
  static FieldScalar sqrt10() { return {0, 0, 0, 1}; }
  // Golden ratio (1+sqrt5)/2 and its conjugate (1-sqrt5)/2.
  static FieldScalar tau();
  static FieldScalar sigma();
  static FieldScalar rational(long num, long den) { return Rational(num, den); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
  friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
  friend FieldScalar operator*(FieldScalar x, const FieldScalar& y) { return x *= y; }
  friend FieldScalar operator/(FieldScalar x, const FieldScalar& y) { return x /= y; }
  FieldScalar operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  // Multiplicative inverse. Throws DomainError for zero.
  FieldScalar inverse() const;

  // Sign of the real number this element denotes: -1, 0 or +1.
  int sign() const;

  // Nearest double (correctly rounded through a high-precision evaluation).
  double to_double() const;
  // Decimal rendering with `digits` significant digits.
  std::string to_decimal(int digits) const;

  // `a/b + c/d*r2 + e/f*r5 + g/h*r10` with zero terms omitted; "0" for zero.
  std::string to_string() const;
  // Accepts to_string() output plus the symbols `tau` and `sigma`,
  // e.g. "1/2 + 1/2*r5", "-3*tau", "2 - r2". Throws ParseError.
  static FieldScalar parse(std::string_view text);

 private:
  Rational a_, b_, c_, d_;
};

// The free-function spelling of the field operations.
enum class FieldOp { add, sub, mul, neg, inv };
FieldScalar field_arith(FieldOp op, const FieldScalar& x, const FieldScalar& y = FieldScalar());
int field_sign(const FieldScalar& x);

// Real-value comparisons, decided exactly by the sign of the difference.
inline bool real_less(const FieldScalar& x, const FieldScalar& y) { return (y - x).sign() > 0; }
inline FieldScalar abs(const FieldScalar& x) { return x.sign() < 0 ? -x : x; }

// Lexicographic order on the coefficient tuple (a, b, c, d). This is a
// canonical order for deterministic output, not the order of the reals.
int lex_compare(const FieldScalar& x, const FieldScalar& y);

std::size_t hash_value(const FieldScalar& x);

// Decimal rendering of x * sqrt(radicand), for presentation values that leave
// the field (e.g. sqrt6 in the orthonormal A2 frame).
std::string decimal_times_sqrt(const FieldScalar& x, unsigned radicand, int digits);

}  // namespace pyrito
