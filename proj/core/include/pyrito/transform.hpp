#pragma once

#include <optional>
#include <string>

#include "pyrito/quaternion.hpp"

namespace pyrito {

// An element of O(4) written as a pair of unit quaternions:
//   [p, q]  : t -> p t q
//   [p, q]* : t -> p t̄ q
// [p, q] and [-p, -q] act identically; the constructor fixes the sign so that
// the first nonzero component of p is lexicographically positive, which makes
// representation equality coincide with equality of the maps.
class OrthoElement {
 public:
  // Throws DomainError unless norm(p) = norm(q) = 1.
  OrthoElement(Quaternion p, Quaternion q, bool star = false);

  static OrthoElement identity() { return {1, 1}; }
  // [1, -1]: t -> -t.
  static OrthoElement central_inversion() { return {1, -1}; }

  const Quaternion& p() const { return p_; }
  const Quaternion& q() const { return q_; }
  bool star() const { return star_; }

  Quaternion apply(const Quaternion& t) const;

  // The non-star element with the same action on pure quaternions:
  // p t̄ q = -p t q when t is pure.
  OrthoElement restricted_to_3d() const;

  // Maps pure quaternions to pure quaternions (q = ±p̄ after restriction).
  bool preserves_3d() const;

  friend bool operator==(const OrthoElement& x, const OrthoElement& y) {
    return x.star_ == y.star_ && x.p_ == y.p_ && x.q_ == y.q_;
  }

  std::string to_string() const;

 private:
  Quaternion p_, q_;
  bool star_ = false;
};

Quaternion apply(const OrthoElement& g, const Quaternion& t);
// apply(compose(g, h), t) == apply(g, apply(h, t)).
OrthoElement compose(const OrthoElement& g, const OrthoElement& h);
// [p, q]^-1 = [p̄, q̄];  ([p, q]*)^-1 = [q, p]*.
OrthoElement inverse(const OrthoElement& g);
// g^n for n >= 0.
OrthoElement power(const OrthoElement& g, int n);
// Smallest n >= 1 with g^n = identity. Throws DomainError above `cap`.
int element_order(const OrthoElement& g, int cap = 1000);

// Reflection in the plane orthogonal to the pure quaternion `root`:
// r(t) = -(α̂) t̄ (α̂) with α̂ = root/|root|, stored in the 3D form [α̂, α̂].
// Requires norm(root) in {1, 2} so that |root| lies in the field.
OrthoElement reflection_from_root(const Quaternion& root);

int lex_compare(const OrthoElement& x, const OrthoElement& y);

struct ElementLess {
  bool operator()(const OrthoElement& x, const OrthoElement& y) const {
    return lex_compare(x, y) < 0;
  }
};

enum class Rotation3Kind { rotation, rotary_inversion };

struct Rotation3Class {
  Rotation3Kind kind;
  // Vec(p); absent for the identity and the central inversion.
  std::optional<Quaternion> axis;
  // cos of the rotation angle about `axis` (of the rotational factor for a
  // rotary inversion): 2 p0^2 - 1.
  FieldScalar cos_angle;
};

// [p, p̄] is a rotation about Vec(p); [p, -p̄] a rotary inversion.
// Throws DomainError when g does not preserve pure quaternions.
Rotation3Class classify3(const OrthoElement& g);

}  // namespace pyrito
