#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pyrito/field.hpp"

namespace pyrito {

// q0 + q1 e1 + q2 e2 + q3 e3 over Q(sqrt2, sqrt5). Pure quaternions (q0 = 0)
// stand for vectors of 3D space.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(FieldScalar q0, FieldScalar q1, FieldScalar q2, FieldScalar q3)
      : c_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}
  // Scalar quaternion.
  Quaternion(const FieldScalar& s) : c_{s, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Quaternion(long s) : c_{FieldScalar(s), 0, 0, 0} {}   // NOLINT(google-explicit-constructor)

  static Quaternion vec(FieldScalar x, FieldScalar y, FieldScalar z) {
    return {0, std::move(x), std::move(y), std::move(z)};
  }
  static Quaternion e1() { return {0, 1, 0, 0}; }
  static Quaternion e2() { return {0, 0, 1, 0}; }
  static Quaternion e3() { return {0, 0, 0, 1}; }

  const FieldScalar& operator[](std::size_t i) const { return c_[i]; }
  FieldScalar& operator[](std::size_t i) { return c_[i]; }
  const FieldScalar& scalar() const { return c_[0]; }
  // The vector part q1 e1 + q2 e2 + q3 e3.
  Quaternion vector_part() const { return {0, c_[1], c_[2], c_[3]}; }

  bool is_pure() const { return c_[0].is_zero(); }
  bool is_zero() const;

  Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  // q0^2 + q1^2 + q2^2 + q3^2 (the squared length).
  FieldScalar norm() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const FieldScalar& s);

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(Quaternion x, const FieldScalar& s) { return x *= s; }
  friend Quaternion operator*(const FieldScalar& s, Quaternion x) { return x *= s; }
  // Hamilton product, e_i e_j = -delta_ij + eps_ijk e_k.
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.c_ == y.c_; }

  // "(q0, q1, q2, q3)" in FieldScalar text encoding.
  std::string to_string() const;

 private:
  std::array<FieldScalar, 4> c_;
};

Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
inline Quaternion quat_conj(const Quaternion& q) { return q.conj(); }
inline FieldScalar quat_norm(const Quaternion& q) { return q.norm(); }
// (p, q) = (p̄q + q̄p)/2, the euclidean inner product on R^4.
FieldScalar scalar_product(const Quaternion& p, const Quaternion& q);
// Vector part of the product of two pure quaternions.
Quaternion cross(const Quaternion& u, const Quaternion& v);

// Lexicographic on (q0, q1, q2, q3) with the FieldScalar coefficient order.
int lex_compare(const Quaternion& x, const Quaternion& y);

struct CanonicalLess {
  bool operator()(const FieldScalar& x, const FieldScalar& y) const { return lex_compare(x, y) < 0; }
  bool operator()(const Quaternion& x, const Quaternion& y) const { return lex_compare(x, y) < 0; }
};

// Sorts and removes duplicates under exact equality.
std::vector<Quaternion> canonical_set(std::vector<Quaternion> points);
// Equality of two point sets (order and multiplicity ignored).
bool same_set(std::vector<Quaternion> a, std::vector<Quaternion> b);
std::vector<Quaternion> scaled(const std::vector<Quaternion>& points, const FieldScalar& s);

}  // namespace pyrito
