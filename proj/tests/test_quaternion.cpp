#include <gtest/gtest.h>

#include "pyrito/quaternion.hpp"
#include "pyrito/transform.hpp"
#include "pyrito/error.hpp"
#include "support.hpp"

using namespace pyrito;
using pyrito::test::random_quaternion;
using pyrito::test::random_vector;

TEST(Quaternion, HamiltonTable) {
  const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
  EXPECT_EQ(e1 * e1, Quaternion(-1));
  EXPECT_EQ(e2 * e2, Quaternion(-1));
  EXPECT_EQ(e3 * e3, Quaternion(-1));
  EXPECT_EQ(e1 * e2, e3);
  EXPECT_EQ(e2 * e3, e1);
  EXPECT_EQ(e3 * e1, e2);
  EXPECT_EQ(e2 * e1, -e3);
  EXPECT_EQ(e1 * e2 * e3, Quaternion(-1));
}

TEST(Quaternion, ScalarProductAndCross) {
  const Quaternion u = Quaternion::vec(1, 2, 3), v = Quaternion::vec(-2, 0, 5);
  EXPECT_EQ(scalar_product(u, v), FieldScalar(13));
  EXPECT_EQ(cross(u, v), Quaternion::vec(10, -11, 4));
  EXPECT_EQ(quat_mul(u, v), Quaternion(-13, 10, -11, 4));
  EXPECT_EQ(quat_norm(u), FieldScalar(14));
  EXPECT_EQ(quat_conj(u), -u);
}

TEST(Quaternion, CanonicalSets) {
  const std::vector<Quaternion> a = {Quaternion::e2(), Quaternion::e1(), Quaternion::e2()};
  const auto c = canonical_set(a);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_LT(lex_compare(c[0], c[1]), 0);
  EXPECT_TRUE(same_set(a, {Quaternion::e1(), Quaternion::e2()}));
  EXPECT_FALSE(same_set(a, {Quaternion::e1()}));
}

TEST(QuaternionProperty, AlgebraLaws) {
  for (int i = 0; i < 200; ++i) {
    const Quaternion p = random_quaternion(), q = random_quaternion(), r = random_quaternion();
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ((p * q).norm(), p.norm() * q.norm());
    EXPECT_EQ((p * q).conj(), q.conj() * p.conj());
    EXPECT_EQ(p * p.conj(), Quaternion(p.norm()));
    EXPECT_EQ(scalar_product(p, q), ((p.conj() * q + q.conj() * p) * FieldScalar(Rational(1, 2))).scalar());
  }
}

TEST(QuaternionProperty, CrossProduct) {
  for (int i = 0; i < 200; ++i) {
    const Quaternion u = random_vector(), v = random_vector();
    const Quaternion w = cross(u, v);
    EXPECT_TRUE(scalar_product(w, u).is_zero());
    EXPECT_TRUE(scalar_product(w, v).is_zero());
    EXPECT_EQ(cross(v, u), -w);
    EXPECT_EQ(u * v, Quaternion(-scalar_product(u, v)) + w);
  }
}

namespace {

// Unit quaternions with field coordinates: (a + b i + c j + d k)/n with an
// integer 4-square decomposition of n^2, plus the golden ones.
std::vector<Quaternion> unit_pool() {
  std::vector<Quaternion> out;
  const FieldScalar h = Rational(1, 2), t = FieldScalar::tau() * h, s = FieldScalar::sigma() * h;
  out.push_back(Quaternion(h, h, h, h));
  out.push_back(Quaternion(h, -h, h, -h));
  out.push_back(Quaternion(0, h, t, s));
  out.push_back(Quaternion(t, -s, 0, h));
  out.push_back(Quaternion(Rational(1, 3), Rational(2, 3), Rational(2, 3), 0));
  out.push_back(Quaternion(Rational(2, 7), Rational(3, 7), Rational(6, 7), 0));
  out.push_back(Quaternion(FieldScalar::sqrt2() * h, FieldScalar::sqrt2() * h, 0, 0));
  out.push_back(Quaternion(0, 0, Rational(3, 5), Rational(-4, 5)));
  return out;
}

}  // namespace

TEST(Transform, RejectsNonUnit) {
  EXPECT_THROW(OrthoElement(Quaternion(2), Quaternion(1)), DomainError);
  EXPECT_NO_THROW(OrthoElement(Quaternion(-1), Quaternion(1)));
}

TEST(Transform, SignConventionMakesEqualityExact) {
  const Quaternion p = unit_pool()[2], q = unit_pool()[3];
  EXPECT_EQ(OrthoElement(p, q), OrthoElement(-p, -q));
  EXPECT_EQ(OrthoElement(p, q, true), OrthoElement(-p, -q, true));
  EXPECT_NE(OrthoElement(p, q), OrthoElement(p, -q));
}

TEST(Transform, StarInverseSwapsFactors) {
  const Quaternion p = unit_pool()[0], q = unit_pool()[4];
  const OrthoElement g(p, q, true);
  EXPECT_EQ(inverse(g), OrthoElement(q, p, true));
  EXPECT_EQ(compose(g, inverse(g)), OrthoElement::identity());
}

TEST(Transform, ReflectionFromRoot) {
  const Quaternion a = Quaternion::vec(1, -1, 0);
  const OrthoElement r = reflection_from_root(a);
  EXPECT_EQ(r.apply(a), -a);
  EXPECT_EQ(r.apply(Quaternion::vec(1, 1, 0)), Quaternion::vec(1, 1, 0));
  EXPECT_EQ(r.apply(Quaternion::e3()), Quaternion::e3());
  EXPECT_EQ(element_order(r), 2);
  EXPECT_THROW(reflection_from_root(Quaternion::vec(1, 1, 1)), DomainError);
}

TEST(Transform, ClassifyRotations) {
  const Quaternion h(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
  const auto c = classify3(OrthoElement(h, h.conj()));
  EXPECT_EQ(c.kind, Rotation3Kind::rotation);
  ASSERT_TRUE(c.axis.has_value());
  EXPECT_EQ(c.cos_angle, FieldScalar(Rational(-1, 2)));
  EXPECT_EQ(classify3(OrthoElement::central_inversion()).kind, Rotation3Kind::rotary_inversion);
  EXPECT_FALSE(classify3(OrthoElement::identity()).axis.has_value());
  EXPECT_THROW(classify3(OrthoElement(h, h)), DomainError);
}

TEST(TransformProperty, ComposeMatchesApply) {
  const auto pool = unit_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::bernoulli_distribution coin(0.5);
  auto random_element = [&] {
    return OrthoElement(pool[pick(test::rng())], coin(test::rng()) ? pool[pick(test::rng())] : -pool[pick(test::rng())],
                        coin(test::rng()));
  };
  for (int i = 0; i < 300; ++i) {
    const OrthoElement g = random_element(), h = random_element();
    const Quaternion t = random_quaternion();
    EXPECT_EQ(compose(g, h).apply(t), g.apply(h.apply(t)));
    EXPECT_EQ(apply(inverse(g), g.apply(t)), t);
    EXPECT_EQ(g.apply(t).norm(), t.norm());
    EXPECT_EQ(power(g, 3), compose(g, compose(g, g)));
  }
}

TEST(TransformProperty, RestrictionAgreesOnVectors) {
  const auto pool = unit_pool();
  for (const auto& p : pool) {
    const OrthoElement g(p, p.conj(), true);
    EXPECT_TRUE(g.preserves_3d());
    for (int i = 0; i < 20; ++i) {
      const Quaternion v = random_vector();
      EXPECT_EQ(g.restricted_to_3d().apply(v), g.apply(v));
      EXPECT_TRUE(g.apply(v).is_pure());
    }
  }
}
