#pragma once

#include <optional>
#include <vector>

#include "pyrito/polyhedron.hpp"
#include "pyrito/quaternion.hpp"
#include "pyrito/transform.hpp"

namespace pyrito {

// λ = a1((1+x)e1 + x e2); h = x/(x+1) is undefined at x = -1.
struct PseudoParams {
  FieldScalar x;
  FieldScalar a1 = 1;

  std::optional<FieldScalar> h() const;
};

FieldScalar h_from_x(const FieldScalar& x);
FieldScalar x_from_h(const FieldScalar& h);

// a1{±(1+x)e1 ± x e2, ±(1+x)e2 ± x e3, ±(1+x)e3 ± x e1}, deduplicated.
std::vector<Quaternion> pseudoicosahedron_vertices(const FieldScalar& x, const FieldScalar& a1 = 1);
// Hull of the vertex set above. The result is flagged degenerate at x = 0 and
// x = -1 (six points) and at x = -1/2, where the set is a cuboctahedron.
// Throws DomainError unless a1 > 0.
Polyhedron pseudoicosahedron(const FieldScalar& x, const FieldScalar& a1 = 1);

// The reflection r1 : e1 <-> e2 applied to every vertex.
Polyhedron mirror(const Polyhedron& poly);

struct EdgeProfile {
  FieldScalar equilateral_edge2;  // a1^2 (1 + x + x^2)
  FieldScalar isosceles_base2;    // 2 a1^2 x^2
  bool equal;                     // only when x^2 - x - 1 = 0
};
// In the normalization above both values are half of the euclidean squared
// distances between the corresponding vertices.
EdgeProfile edge_length_profile(const FieldScalar& x, const FieldScalar& a1 = 1);

// (a1/2)[{±(1-h^2)e1 ± (1+h)e2, cyclic} ∪ (±e1 ± e2 ± e3)]. h = 1 gives the
// 14-vertex rhombic dodecahedron, flagged degenerate. Throws at h = -1.
std::vector<Quaternion> pyritohedron_vertices(const FieldScalar& h, const FieldScalar& a1 = 1);
Polyhedron pyritohedron(const FieldScalar& h, const FieldScalar& a1 = 1);

struct PyritohedronNormals {
  Quaternion b1, b4, b5;  // normals of three isosceles faces
  Quaternion d;           // normal of the pentagon through ρb1, ρb4, ρb5, ω2, ω3
  FieldScalar rho;        // (1+2x) / (2(1+x)^2)
  FieldScalar residue;    // ((ρb1 - ω2), d)
  // (p - ω2, d) for p in {ρb1, ρb4, ρb5, ω3}.
  std::vector<FieldScalar> coplanarity;
  // T_h orbit of b1, all twelve isosceles face normals.
  std::vector<Quaternion> orbit;
};
PyritohedronNormals pyritohedron_normals(const FieldScalar& x);

// a1{±x e1 ± (1+x)e2 ± (1+2x)e3, cyclic} ∪ 2a1(1+x){±e1, ±e2, ±e3}: the edge
// midpoints of pseudoicosahedron(x, 2 a1).
std::vector<Quaternion> pseudoicosidodecahedron_vertices(const FieldScalar& x,
                                                         const FieldScalar& a1 = 1);
Polyhedron pseudoicosidodecahedron(const FieldScalar& x, const FieldScalar& a1 = 1);

// Deduplicated midpoints of the hull edges.
std::vector<Quaternion> edge_midpoints(const Polyhedron& poly);

enum class A1Policy { clear_denominators, unit };

struct FibonacciMember {
  int n;
  Rational x;  // F(n+1) / F(n)
  Rational a1;
  Polyhedron poly;
};

// F(1) = F(2) = 1.
Rational fibonacci(int n);
// Members n = 1..n_max. Under clear_denominators a1 = F(n), so the vertices
// are the integer points (±F(n+2), ±F(n+1), 0) cyclic.
std::vector<FibonacciMember> fibonacci_family(int n_max, A1Policy policy = A1Policy::clear_denominators);

// [(1+e1)/√2, (1-e1)/√2], the rotation taking the x = τ icosahedron onto its
// mirror image.
OrthoElement chirality_witness();

}  // namespace pyrito
