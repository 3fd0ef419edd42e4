#include "pyrito/quaternion.hpp"

#include <algorithm>

namespace pyrito {

bool Quaternion::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

FieldScalar Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator*=(const FieldScalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  const auto& [p0, p1, p2, p3] = p.c_;
  const auto& [q0, q1, q2, q3] = q.c_;
  return {p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
          p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
          p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
          p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0};
}

std::string Quaternion::to_string() const {
  return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ", " +
         c_[3].to_string() + ")";
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

FieldScalar scalar_product(const Quaternion& p, const Quaternion& q) {
  return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

Quaternion cross(const Quaternion& u, const Quaternion& v) {
  return Quaternion::vec(u[2] * v[3] - u[3] * v[2], u[3] * v[1] - u[1] * v[3],
                         u[1] * v[2] - u[2] * v[1]);
}

int lex_compare(const Quaternion& x, const Quaternion& y) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (int r = lex_compare(x[i], y[i])) return r;
  }
  return 0;
}

std::vector<Quaternion> canonical_set(std::vector<Quaternion> points) {
  std::sort(points.begin(), points.end(), CanonicalLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool same_set(std::vector<Quaternion> a, std::vector<Quaternion> b) {
  return canonical_set(std::move(a)) == canonical_set(std::move(b));
}

std::vector<Quaternion> scaled(const std::vector<Quaternion>& points, const FieldScalar& s) {
  std::vector<Quaternion> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p * s);
  return out;
}

}  // namespace pyrito
