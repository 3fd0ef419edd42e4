#include "pyrito/polyhedra.hpp"

#include <set>
#include <utility>

#include "pyrito/coxeter.hpp"
#include "pyrito/error.hpp"
#include "pyrito/qgroups.hpp"

namespace pyrito {

namespace {

std::vector<Quaternion> cyclic_signed(const FieldScalar& x, const FieldScalar& y,
                                      const FieldScalar& z) {
  std::vector<Quaternion> out;
  for (int s = 0; s < 8; ++s) {
    const FieldScalar a = s & 1 ? -x : x, b = s & 2 ? -y : y, c = s & 4 ? -z : z;
    out.push_back(Quaternion::vec(a, b, c));
    out.push_back(Quaternion::vec(c, a, b));
    out.push_back(Quaternion::vec(b, c, a));
  }
  return canonical_set(std::move(out));
}

void require_positive(const FieldScalar& a1) {
  if (a1.sign() <= 0) throw DomainError("a1 must be positive");
}

void flag(Polyhedron& poly, std::string note) {
  poly.degenerate = true;
  if (!poly.note.empty()) poly.note += "; ";
  poly.note += std::move(note);
}

}  // namespace

std::optional<FieldScalar> PseudoParams::h() const {
  if ((x + FieldScalar(1)).is_zero()) return std::nullopt;
  return h_from_x(x);
}

FieldScalar h_from_x(const FieldScalar& x) {
  const FieldScalar den = x + FieldScalar(1);
  if (den.is_zero()) throw DomainError("h = x/(x+1) is undefined at x = -1");
  return x / den;
}

FieldScalar x_from_h(const FieldScalar& h) {
  const FieldScalar den = FieldScalar(1) - h;
  if (den.is_zero()) throw DomainError("x = h/(1-h) is undefined at h = 1");
  return h / den;
}

std::vector<Quaternion> pseudoicosahedron_vertices(const FieldScalar& x, const FieldScalar& a1) {
  require_positive(a1);
  return cyclic_signed(a1 * (FieldScalar(1) + x), a1 * x, 0);
}

Polyhedron pseudoicosahedron(const FieldScalar& x, const FieldScalar& a1) {
  Polyhedron poly = hull_faces(pseudoicosahedron_vertices(x, a1));
  if (x.is_zero()) flag(poly, "x = 0: the twelve vertices collapse to an octahedron");
  if ((x + FieldScalar(1)).is_zero()) flag(poly, "x = -1: the twelve vertices collapse to six points");
  if ((x * FieldScalar(2) + FieldScalar(1)).is_zero()) {
    flag(poly, "x = -1/2 is excluded: the vertices form a cuboctahedron");
  }
  return poly;
}

Polyhedron mirror(const Polyhedron& poly) {
  const OrthoElement r1 = reflection_from_root(Quaternion::e1() - Quaternion::e2());
  std::vector<Quaternion> image;
  image.reserve(poly.vertices.size());
  for (const auto& v : poly.vertices) image.push_back(r1.apply(v));
  Polyhedron out = hull_faces(std::move(image));
  out.degenerate = poly.degenerate;
  out.note = poly.note;
  return out;
}

EdgeProfile edge_length_profile(const FieldScalar& x, const FieldScalar& a1) {
  require_positive(a1);
  const FieldScalar a2 = a1 * a1;
  EdgeProfile out{a2 * (FieldScalar(1) + x + x * x), a2 * FieldScalar(2) * x * x, false};
  out.equal = out.equilateral_edge2 == out.isosceles_base2;
  return out;
}

std::vector<Quaternion> pyritohedron_vertices(const FieldScalar& h, const FieldScalar& a1) {
  require_positive(a1);
  if ((h + FieldScalar(1)).is_zero()) throw DomainError("the pyritohedron is undefined at h = -1");
  const FieldScalar s = a1 * FieldScalar(Rational(1, 2));
  std::vector<Quaternion> pts = cyclic_signed(s * (FieldScalar(1) - h * h), s * (FieldScalar(1) + h), 0);
  for (const auto& c : cyclic_signed(s, s, s)) pts.push_back(c);
  return canonical_set(std::move(pts));
}

Polyhedron pyritohedron(const FieldScalar& h, const FieldScalar& a1) {
  Polyhedron poly = hull_faces(pyritohedron_vertices(h, a1));
  if ((h - FieldScalar(1)).is_zero()) {
    flag(poly, "h = 1: the vertices form a rhombic dodecahedron");
  } else if (poly.num_vertices() != 20) {
    flag(poly, "only " + std::to_string(poly.num_vertices()) + " of the 20 points are hull vertices");
  }
  return poly;
}

PyritohedronNormals pyritohedron_normals(const FieldScalar& x) {
  const FieldScalar one(1);
  const FieldScalar x1 = one + x;
  if (x1.is_zero()) throw DomainError("pyritohedron normals are undefined at x = -1");
  const CoxeterDiagram& d3 = cached_diagram(DiagramName::D3);
  const Quaternion& w2 = d3.weights[1];
  const Quaternion& w3 = d3.weights[2];
  const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();

  PyritohedronNormals out;
  out.b1 = e1 + e2 * x1;
  out.b4 = e1 * x1 + e3;
  out.b5 = e1 * x1 - e3;
  out.d = e1 * x1 + e2 * x;
  out.rho = (one + x * FieldScalar(2)) / (FieldScalar(2) * x1 * x1);
  out.residue = scalar_product(out.b1 * out.rho - w2, out.d);
  for (const Quaternion& p : {out.b1 * out.rho, out.b4 * out.rho, out.b5 * out.rho, w3}) {
    out.coplanarity.push_back(scalar_product(p - w2, out.d));
  }
  std::vector<Quaternion> orbit;
  for (const auto& g : cached_point_group(GroupName::pyritohedral).elements) orbit.push_back(g.apply(out.b1));
  out.orbit = canonical_set(std::move(orbit));
  return out;
}

std::vector<Quaternion> pseudoicosidodecahedron_vertices(const FieldScalar& x, const FieldScalar& a1) {
  require_positive(a1);
  const FieldScalar one(1);
  std::vector<Quaternion> pts = cyclic_signed(a1 * x, a1 * (one + x), a1 * (one + x * FieldScalar(2)));
  const FieldScalar r = a1 * FieldScalar(2) * (one + x);
  for (const auto& p : cyclic_signed(r, 0, 0)) pts.push_back(p);
  return canonical_set(std::move(pts));
}

Polyhedron pseudoicosidodecahedron(const FieldScalar& x, const FieldScalar& a1) {
  Polyhedron poly = hull_faces(pseudoicosidodecahedron_vertices(x, a1));
  if (x.is_zero() || (x + FieldScalar(1)).is_zero()) {
    flag(poly, "x = " + x.to_string() + " degenerates the parent pseudoicosahedron");
  } else if (poly.num_vertices() != 30) {
    flag(poly, "only " + std::to_string(poly.num_vertices()) + " of the 30 points are hull vertices");
  }
  return poly;
}

std::vector<Quaternion> edge_midpoints(const Polyhedron& poly) {
  std::vector<Quaternion> out;
  const FieldScalar half = Rational(1, 2);
  for (const auto& [a, b] : edges(poly)) out.push_back((poly.vertices[a] + poly.vertices[b]) * half);
  return canonical_set(std::move(out));
}

Rational fibonacci(int n) {
  if (n < 0) throw DomainError("fibonacci index must be nonnegative");
  mpz_class a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return Rational(a);
}

std::vector<FibonacciMember> fibonacci_family(int n_max, A1Policy policy) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::vector<FibonacciMember> out;
  for (int n = 1; n <= n_max; ++n) {
    Rational x = fibonacci(n + 1) / fibonacci(n);
    x.canonicalize();
    const Rational a1 = policy == A1Policy::clear_denominators ? fibonacci(n) : Rational(1);
    out.push_back({n, x, a1, pseudoicosahedron(FieldScalar(x), FieldScalar(a1))});
  }
  return out;
}

OrthoElement chirality_witness() {
  const FieldScalar r = FieldScalar(0, Rational(1, 2), 0, 0);
  return {(Quaternion(1) + Quaternion::e1()) * r, (Quaternion(1) - Quaternion::e1()) * r};
}

}  // namespace pyrito
