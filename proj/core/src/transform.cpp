#include "pyrito/transform.hpp"

#include "pyrito/error.hpp"

namespace pyrito {

namespace {

// Lexicographic sign of the first nonzero component.
int leading_sign(const Quaternion& x) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (int s = lex_compare(x[i], FieldScalar())) return s;
  }
  return 0;
}

}  // namespace

OrthoElement::OrthoElement(Quaternion p, Quaternion q, bool star)
    : p_(std::move(p)), q_(std::move(q)), star_(star) {
  if (p_.norm() != FieldScalar(1) || q_.norm() != FieldScalar(1)) {
    throw DomainError("OrthoElement needs unit quaternions, got " + p_.to_string() + ", " +
                      q_.to_string());
  }
  if (leading_sign(p_) < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

Quaternion OrthoElement::apply(const Quaternion& t) const {
  return star_ ? p_ * t.conj() * q_ : p_ * t * q_;
}

OrthoElement OrthoElement::restricted_to_3d() const {
  if (!star_) return *this;
  return {p_, -q_};
}

bool OrthoElement::preserves_3d() const {
  const OrthoElement r = restricted_to_3d();
  const Quaternion pb = r.p_.conj();
  return r.q_ == pb || r.q_ == -pb;
}

std::string OrthoElement::to_string() const {
  return "[" + p_.to_string() + ", " + q_.to_string() + "]" + (star_ ? "*" : "");
}

Quaternion apply(const OrthoElement& g, const Quaternion& t) { return g.apply(t); }

// With g = [P, Q](*) and h = [p, q](*):
//   plain o plain : t -> P p t q Q            = [Pp, qQ]
//   plain o star  : t -> P p t̄ q Q            = [Pp, qQ]*
//   star  o plain : t -> P conj(p t q) Q       = [P q̄, p̄ Q]*
//   star  o star  : t -> P conj(p t̄ q) Q       = [P q̄, p̄ Q]
OrthoElement compose(const OrthoElement& g, const OrthoElement& h) {
  if (!g.star()) return {g.p() * h.p(), h.q() * g.q(), h.star()};
  return {g.p() * h.q().conj(), h.p().conj() * g.q(), !h.star()};
}

OrthoElement inverse(const OrthoElement& g) {
  if (!g.star()) return {g.p().conj(), g.q().conj()};
  // s = p t̄ q  =>  t = conj(p̄ s q̄) = q s̄ p.
  return {g.q(), g.p(), true};
}

OrthoElement power(const OrthoElement& g, int n) {
  OrthoElement out = OrthoElement::identity();
  for (int i = 0; i < n; ++i) out = compose(out, g);
  return out;
}

int element_order(const OrthoElement& g, int cap) {
  OrthoElement x = g;
  for (int n = 1; n <= cap; ++n) {
    if (x == OrthoElement::identity()) return n;
    x = compose(x, g);
  }
  throw DomainError("element order exceeds cap");
}

OrthoElement reflection_from_root(const Quaternion& root) {
  if (root.is_zero()) throw DomainError("reflection root must be nonzero");
  if (!root.is_pure()) throw DomainError("reflection root must be a pure quaternion");
  const FieldScalar n = root.norm();
  Quaternion unit;
  if (n == FieldScalar(1)) {
    unit = root;
  } else if (n == FieldScalar(2)) {
    unit = root * FieldScalar(Rational(1, 2)) * FieldScalar::sqrt2();
  } else {
    throw DomainError("reflection root must have norm 1 or 2, got " + n.to_string());
  }
  // [α̂, -α̂]* restricted to pure quaternions is [α̂, α̂].
  return OrthoElement(unit, -unit, true).restricted_to_3d();
}

int lex_compare(const OrthoElement& x, const OrthoElement& y) {
  if (int r = lex_compare(x.p(), y.p())) return r;
  if (int r = lex_compare(x.q(), y.q())) return r;
  if (x.star() != y.star()) return x.star() ? 1 : -1;
  return 0;
}

Rotation3Class classify3(const OrthoElement& g) {
  if (!g.preserves_3d()) throw DomainError("element does not preserve 3D space: " + g.to_string());
  const OrthoElement r = g.restricted_to_3d();
  const Quaternion& p = r.p();
  const bool rotation = r.q() == p.conj();
  Rotation3Class out{rotation ? Rotation3Kind::rotation : Rotation3Kind::rotary_inversion,
                     std::nullopt, p[0] * p[0] * FieldScalar(2) - FieldScalar(1)};
  const Quaternion axis = p.vector_part();
  if (!axis.is_zero()) out.axis = axis;
  return out;
}

}  // namespace pyrito
