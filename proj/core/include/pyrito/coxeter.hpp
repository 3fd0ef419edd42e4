#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pyrito/qgroups.hpp"
#include "pyrito/quaternion.hpp"
#include "pyrito/transform.hpp"

namespace pyrito {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Coordinates with respect to the simple roots of a diagram.
using RootCoords = std::vector<FieldScalar>;

enum class DiagramName { A2, B2, D3, B3 };

DiagramName parse_diagram_name(std::string_view name);
std::string diagram_label(DiagramName name);

// Rank-3 diagrams carry quaternionic simple roots:
//   D3: α1 = e1-e2, α2 = e2-e3, α3 = e2+e3
//   B3: α1 = e1-e2, α2 = e2-e3, α3 = e3
// Rank-2 diagrams are abstract: A2 with roots of norm 2 at 120°, B2 with
// α1 = l1-l2, α2 = l2 in an orthonormal frame (l1, l2).
struct CoxeterDiagram {
  DiagramName name;
  int rank = 0;
  std::vector<Quaternion> simple_roots;  // empty for rank 2
  Matrix<Rational> gram;                 // (αi, αj)
  Matrix<long> cartan;                   // 2(αi, αj)/(αj, αj)
  Matrix<Rational> cartan_inv;
  Matrix<Rational> metric;               // (C^-1)_ij (αj, αj)/2 = (ωi, ωj)
  Matrix<Rational> weight_coords;        // ωi in the root basis: rows of C^-1
  std::vector<Quaternion> weights;       // rank 3 only
  std::size_t group_order = 0;
};

CoxeterDiagram diagram(DiagramName name);
const CoxeterDiagram& cached_diagram(DiagramName name);

// Rank 3 only: reflection_from_root(α_i) as an O(3) element. 1-based index.
OrthoElement simple_reflection(const CoxeterDiagram& d, int i);
// Integer matrix of r_i on root coordinates: row k holds r_i(α_k), so a
// vector with root coordinates c maps to c * M. 1-based index.
Matrix<long> simple_reflection_matrix(const CoxeterDiagram& d, int i);

// r_i λ = λ - 2(λ, α_i)/(α_i, α_i) α_i.
Quaternion reflect(const CoxeterDiagram& d, int i, const Quaternion& lambda);
RootCoords reflect(const CoxeterDiagram& d, int i, const RootCoords& lambda);

// Σ a_i ω_i as a pure quaternion (rank 3) or in root coordinates (any rank).
Quaternion weight_point(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords);
RootCoords weight_root_coords(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords);

// Inner product of two root-coordinate vectors through the Gram matrix.
FieldScalar root_inner(const CoxeterDiagram& d, const RootCoords& x, const RootCoords& y);

// All elements of W(d) for a rank-3 diagram.
std::vector<OrthoElement> coxeter_group(const CoxeterDiagram& d);
// W(d) as root-coordinate matrices; with_diagram_symmetry adds α1 <-> α2
// (meaningful for A2, giving D6 of order 12).
std::vector<Matrix<long>> plane_group(const CoxeterDiagram& d, bool with_diagram_symmetry = false);

struct Orbit {
  DiagramName diagram;
  std::vector<FieldScalar> coords;
  FieldScalar scale;
  std::vector<Quaternion> points;  // canonical order
};

struct PlaneOrbit {
  DiagramName diagram;
  std::vector<FieldScalar> coords;
  FieldScalar scale;
  std::vector<RootCoords> points;  // root coordinates, canonical order
};

// scale * {g λ : g in W(d)} with λ = Σ a_i ω_i, for rank-3 diagrams. When
// `group` is given its elements are used instead of W(d).
Orbit orbit(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords,
            const FieldScalar& scale = 1, const PointGroup* group = nullptr);
PlaneOrbit plane_orbit(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords,
                       const FieldScalar& scale = 1);

// Number of elements of W(d) fixing λ (rank 3).
std::size_t stabilizer_order(const CoxeterDiagram& d, const Quaternion& lambda);

// Orbit of the simple roots under W(d).
std::vector<Quaternion> root_system(const CoxeterDiagram& d);
std::vector<RootCoords> plane_root_system(const CoxeterDiagram& d);
// Σ α_i for D3 (= e1+e2); the highest root e1+e2 for B3 as well.
Quaternion highest_root(const CoxeterDiagram& d);

// r_{α,k}(λ) = λ - 2((λ, α) - k)/(α, α) α: reflection in (λ, α) = k.
Quaternion affine_reflect(const Quaternion& alpha, long k, const Quaternion& lambda);

// A2 root coordinates in the orthonormal frame x̂1 = (α1+α2)/√2,
// x̂2 = (α1-α2)/√6. x lies in the field; y = y_over_sqrt6 * √6 does not.
struct A2Embedding {
  FieldScalar x;
  FieldScalar y_over_sqrt6;
  std::string x_decimal;
  std::string y_decimal;
};
A2Embedding orthonormal_embed_A2(const RootCoords& v, int digits = 50);

// B2 root coordinates to the orthonormal frame (l1, l2).
std::array<FieldScalar, 2> b2_frame_coords(const RootCoords& v);

Matrix<Rational> invert(const Matrix<Rational>& m);
int lex_compare(const RootCoords& x, const RootCoords& y);

}  // namespace pyrito
