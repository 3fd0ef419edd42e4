#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pyrito/quaternion.hpp"

namespace pyrito {

// Supporting plane (normal, v) = offset with the normal pointing outward.
struct FacePlane {
  Quaternion normal;
  FieldScalar offset;
};

struct Polyhedron {
  std::vector<Quaternion> vertices;             // canonical order
  std::vector<std::vector<std::size_t>> faces;  // counterclockwise seen from outside
  std::vector<FacePlane> planes;                // index-aligned with faces
  bool degenerate = false;
  std::string note;  // why `degenerate` is set

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_faces() const { return faces.size(); }
  std::size_t num_edges() const;
  bool has_faces() const { return !faces.empty(); }
};

// Convex hull of exact points with coplanar facets merged into maximal
// polygons. Points that are not hull vertices are dropped. Throws DomainError
// when fewer than 4 affinely independent points are given.
Polyhedron hull_faces(std::vector<Quaternion> points);

// Unordered vertex index pairs, i < j, in canonical order.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polyhedron& poly);
// Squared edge lengths, deduplicated, in canonical order.
std::vector<FieldScalar> edge_lengths_squared(const Polyhedron& poly);
// Number of faces by gonality.
std::map<std::size_t, std::size_t> face_census(const Polyhedron& poly);

struct TriangleCensus {
  std::size_t equilateral = 0;
  std::size_t isosceles = 0;
  std::size_t scalene = 0;
};
TriangleCensus triangle_census(const Polyhedron& poly);

FieldScalar squared_distance(const Quaternion& a, const Quaternion& b);

// One vertex n/c per face plane (n, v) = c. Throws DomainError unless the
// origin is strictly inside (every offset positive).
Polyhedron polar_dual(const Polyhedron& poly);

// Exact structural checks: face vertices on their plane, every vertex on the
// inner side of every plane, and Euler V - E + F = 2.
bool faces_consistent(const Polyhedron& poly);

enum class SolidName {
  tetrahedron,
  octahedron,
  cube,
  cuboctahedron,
  rhombic_dodecahedron,
  truncated_octahedron,
  icosahedron,
  dodecahedron,
  icosidodecahedron,
  pseudoicosahedron,
  pyritohedron,
  pseudoicosidodecahedron,
  unknown,
};

std::string solid_label(SolidName name);
// Recognizes the named solids from the face census, exact congruence to a
// template under signed coordinate permutations and positive scale, and the
// orbit structure under T_h for the pseudo families.
SolidName classify(const Polyhedron& poly);

// The single s with a = s * b as point sets, if there is one.
std::optional<FieldScalar> uniform_ratio(const std::vector<Quaternion>& a,
                                         const std::vector<Quaternion>& b);

// Some positive s and signed permutation g with points = s * g(templ).
bool congruent_up_to_scale(const std::vector<Quaternion>& points,
                           const std::vector<Quaternion>& templ);

}  // namespace pyrito
