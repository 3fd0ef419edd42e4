#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pyrito/field.hpp"
#include "pyrito/quaternion.hpp"

namespace pyrito::test {

// Fixed seeds keep the property tests reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240517);
  return gen;
}

inline Rational random_rational(long max_num = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  Rational r(num(rng()), den(rng()));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(long max_num = 9, long max_den = 7) {
  Rational r;
  do r = random_rational(max_num, max_den);
  while (sgn(r) == 0);
  return r;
}

inline FieldScalar random_scalar() {
  return {random_rational(), random_rational(), random_rational(), random_rational()};
}

inline Quaternion random_quaternion() {
  return {random_scalar(), random_scalar(), random_scalar(), random_scalar()};
}

inline Quaternion random_vector() { return Quaternion::vec(random_scalar(), random_scalar(), random_scalar()); }

// "1/2,-1,tau" -> pure quaternion.
inline Quaternion vec(const std::string& text) {
  std::vector<FieldScalar> c;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) c.push_back(FieldScalar::parse(part));
  return Quaternion::vec(c.at(0), c.at(1), c.at(2));
}

// Points separated by ';', e.g. "1,0,0; -1,0,0".
inline std::vector<Quaternion> points(const std::string& text) {
  std::vector<Quaternion> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) out.push_back(vec(part));
  return canonical_set(std::move(out));
}

// All sign changes of (a, b, c), deduplicated.
inline std::vector<Quaternion> signs(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c) {
  std::vector<Quaternion> out;
  for (int k = 0; k < 8; ++k) {
    out.push_back(Quaternion::vec(k & 1 ? -a : a, k & 2 ? -b : b, k & 4 ? -c : c));
  }
  return canonical_set(std::move(out));
}

// Sign changes of (a, b, c) and its two cyclic shifts.
inline std::vector<Quaternion> cyclic_signs(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c) {
  std::vector<Quaternion> out;
  for (const auto& p : {signs(a, b, c), signs(c, a, b), signs(b, c, a)}) out.insert(out.end(), p.begin(), p.end());
  return canonical_set(std::move(out));
}

// Sign changes of every permutation of (a, b, c).
inline std::vector<Quaternion> all_perm_signs(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c) {
  std::vector<Quaternion> out = cyclic_signs(a, b, c), odd = cyclic_signs(b, a, c);
  out.insert(out.end(), odd.begin(), odd.end());
  return canonical_set(std::move(out));
}

inline std::vector<Quaternion> set_union(std::vector<Quaternion> a, const std::vector<Quaternion>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return canonical_set(std::move(a));
}

inline std::vector<Quaternion> times(const FieldScalar& s, const std::vector<Quaternion>& pts) {
  return canonical_set(scaled(pts, s));
}

}  // namespace pyrito::test
