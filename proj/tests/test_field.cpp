#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>

#include "pyrito/error.hpp"
#include "pyrito/field.hpp"
#include "support.hpp"

using namespace pyrito;
using pyrito::test::random_scalar;

namespace {

// Independent sign oracle: evaluate at 4096 bits with MPFR.
int mpfr_sign(const FieldScalar& x) {
  mpfr_t acc, term, root;
  mpfr_inits2(4096, acc, term, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(acc, x.a().get_mpq_t(), MPFR_RNDN);
  const std::pair<const Rational*, unsigned> parts[] = {{&x.b(), 2}, {&x.c(), 5}, {&x.d(), 10}};
  for (const auto& [coef, radicand] : parts) {
    mpfr_sqrt_ui(root, radicand, MPFR_RNDN);
    mpfr_mul_q(term, root, coef->get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  const int s = mpfr_sgn(acc);
  mpfr_clears(acc, term, root, static_cast<mpfr_ptr>(nullptr));
  return s > 0 ? 1 : s < 0 ? -1 : 0;
}

double naive(const FieldScalar& x) {
  return x.a().get_d() + x.b().get_d() * std::sqrt(2.0) + x.c().get_d() * std::sqrt(5.0) +
         x.d().get_d() * std::sqrt(10.0);
}

}  // namespace

TEST(Field, GoldenRatioIdentities) {
  const FieldScalar t = FieldScalar::tau(), s = FieldScalar::sigma();
  EXPECT_EQ(t * t, t + 1);
  EXPECT_EQ(t + s, FieldScalar(1));
  EXPECT_EQ(t * s, FieldScalar(-1));
  EXPECT_EQ(t.inverse(), t - 1);
  EXPECT_EQ(t.inverse(), -s);
  EXPECT_EQ((t * t).to_string(), "3/2 + 1/2*r5");
}

TEST(Field, SquareRootProducts) {
  EXPECT_EQ(FieldScalar::sqrt2() * FieldScalar::sqrt2(), FieldScalar(2));
  EXPECT_EQ(FieldScalar::sqrt2() * FieldScalar::sqrt5(), FieldScalar::sqrt10());
  EXPECT_EQ(FieldScalar::sqrt10() * FieldScalar::sqrt5(), FieldScalar(5) * FieldScalar::sqrt2());
  EXPECT_EQ(FieldScalar::sqrt10() * FieldScalar::sqrt10(), FieldScalar(10));
}

TEST(Field, InverseOfZeroThrows) {
  EXPECT_THROW(FieldScalar(0).inverse(), DomainError);
  EXPECT_THROW(field_arith(FieldOp::inv, FieldScalar()), DomainError);
}

TEST(Field, FreeFunctionOps) {
  const FieldScalar x = FieldScalar::parse("1/2 + r5"), y = FieldScalar::parse("-3 + 2*r10");
  EXPECT_EQ(field_arith(FieldOp::add, x, y), x + y);
  EXPECT_EQ(field_arith(FieldOp::sub, x, y), x - y);
  EXPECT_EQ(field_arith(FieldOp::mul, x, y), x * y);
  EXPECT_EQ(field_arith(FieldOp::neg, x), -x);
  EXPECT_EQ(field_arith(FieldOp::inv, x) * x, FieldScalar(1));
}

TEST(Field, ParseAndPrint) {
  EXPECT_EQ(FieldScalar::parse("tau"), FieldScalar::tau());
  EXPECT_EQ(FieldScalar::parse("sigma"), FieldScalar::sigma());
  EXPECT_EQ(FieldScalar::parse("-3*tau"), FieldScalar(-3) * FieldScalar::tau());
  EXPECT_EQ(FieldScalar::parse("2 - r2"), FieldScalar(2) - FieldScalar::sqrt2());
  EXPECT_EQ(FieldScalar(0).to_string(), "0");
  EXPECT_EQ(FieldScalar::parse("-1/2*r10").to_string(), "-1/2*r10");
  for (const char* bad : {"", "foo", "1/0", "1 +", "r3", "2**r5", "1/2/3"}) {
    EXPECT_THROW(FieldScalar::parse(bad), ParseError) << bad;
  }
}

TEST(Field, SignAgreesWithMpfrOnNearCancellations) {
  // Convergents p/q of sqrt2 and tau make p - q*sqrt2 and F(n+1) - F(n)*tau
  // tiny but nonzero.
  Rational p = 1, q = 1;
  for (int i = 0; i < 40; ++i) {
    const FieldScalar x = FieldScalar(p) - FieldScalar(q) * FieldScalar::sqrt2();
    EXPECT_EQ(x.sign(), mpfr_sign(x)) << x.to_string();
    const Rational np = p + 2 * q, nq = p + q;
    p = np;
    q = nq;
  }
  Rational f0 = 1, f1 = 1;
  for (int i = 0; i < 60; ++i) {
    const FieldScalar x = FieldScalar(f1) - FieldScalar(f0) * FieldScalar::tau();
    EXPECT_EQ(x.sign(), mpfr_sign(x));
    const Rational f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  // (sqrt2 + sqrt5 - sqrt10) and friends mix all three radicals.
  const FieldScalar mixed = FieldScalar::sqrt2() + FieldScalar::sqrt5() - FieldScalar::sqrt10() + Rational(1, 7);
  EXPECT_EQ(mixed.sign(), mpfr_sign(mixed));
}

TEST(FieldProperty, SignMatchesMpfr) {
  for (int i = 0; i < 2000; ++i) {
    const FieldScalar x = random_scalar();
    ASSERT_EQ(x.sign(), mpfr_sign(x)) << x.to_string();
  }
}

TEST(FieldProperty, RingAxiomsAndInverse) {
  for (int i = 0; i < 300; ++i) {
    const FieldScalar x = random_scalar(), y = random_scalar(), z = random_scalar();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x - x, FieldScalar(0));
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), FieldScalar(1));
      EXPECT_EQ((y / x) * x, y);
    }
  }
}

TEST(FieldProperty, OrderIsCompatible) {
  for (int i = 0; i < 500; ++i) {
    const FieldScalar x = random_scalar(), y = random_scalar();
    EXPECT_EQ((x * x).sign() >= 0, true);
    EXPECT_EQ(real_less(x, y), naive(y) - naive(x) > 0) << x.to_string() << " vs " << y.to_string();
    EXPECT_EQ(abs(x * y), abs(x) * abs(y));
  }
}

TEST(FieldProperty, TextRoundTripAndDecimals) {
  for (int i = 0; i < 300; ++i) {
    const FieldScalar x = random_scalar();
    EXPECT_EQ(FieldScalar::parse(x.to_string()), x);
    EXPECT_NEAR(x.to_double(), naive(x), 1e-12 * (1 + std::fabs(naive(x))));
    EXPECT_NEAR(std::stod(x.to_decimal(30)), naive(x), 1e-12 * (1 + std::fabs(naive(x))));
  }
}

TEST(FieldProperty, HashAndLexOrderAgreeWithEquality) {
  for (int i = 0; i < 200; ++i) {
    const FieldScalar x = random_scalar();
    const FieldScalar y = FieldScalar::parse(x.to_string());
    EXPECT_EQ(hash_value(x), hash_value(y));
    EXPECT_EQ(lex_compare(x, y), 0);
    const FieldScalar z = x + Rational(1, 3);
    EXPECT_NE(lex_compare(x, z), 0);
    EXPECT_EQ(lex_compare(x, z), -lex_compare(z, x));
  }
}

TEST(Field, DecimalTimesSqrt) {
  EXPECT_EQ(decimal_times_sqrt(1, 6, 10), "2.449489743");
  EXPECT_EQ(std::stod(decimal_times_sqrt(FieldScalar(Rational(1, 2)), 4, 5)), 1.0);
  EXPECT_EQ(FieldScalar::tau().to_decimal(20), "1.6180339887498948482");
}
