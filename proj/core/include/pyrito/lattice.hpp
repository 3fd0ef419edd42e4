#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pyrito/coxeter.hpp"
#include "pyrito/polyhedron.hpp"

namespace pyrito {

enum class LatticeKind { fcc, bcc, sc, hex_A2, square_B2 };

// fcc | bcc | sc | hexA2 | squareB2
LatticeKind parse_lattice_kind(std::string_view name);
std::string lattice_label(LatticeKind kind);
int lattice_rank(LatticeKind kind);

// bcc points are either all integers or all half integers (half_integer), or
// the same lattice doubled: all even or all odd integers (doubled).
enum class BccConvention { half_integer, doubled };

// Native coordinates of a lattice point: (e1, e2, e3) for the cubic kinds,
// root coordinates (α1, α2) for hex_A2, the orthonormal frame (l1, l2) for
// square_B2.
using LatticePoint = std::vector<Rational>;

struct LatticeSpec {
  LatticeKind kind;
  BccConvention convention = BccConvention::half_integer;
  Matrix<Rational> gram;            // inner product in native coordinates
  std::vector<LatticePoint> basis;  // generating vectors
};

LatticeSpec lattice_spec(LatticeKind kind, BccConvention convention = BccConvention::half_integer);

Rational lattice_inner(const LatticeSpec& spec, const LatticePoint& x, const LatticePoint& y);
Rational lattice_norm2(const LatticeSpec& spec, const LatticePoint& x);

// Quaternion <-> native coordinates for the cubic kinds. Throws DomainError
// when q is not pure or has irrational components.
LatticePoint to_lattice_point(const Quaternion& q);
Quaternion to_quaternion(const LatticePoint& p);

bool member(LatticeKind kind, const LatticePoint& p,
            BccConvention convention = BccConvention::half_integer);
bool member(LatticeKind kind, const Quaternion& q,
            BccConvention convention = BccConvention::half_integer);

// Every lattice point with squared norm exactly `norm2`, canonically ordered.
std::vector<LatticePoint> shell(LatticeKind kind, const Rational& norm2,
                                BccConvention convention = BccConvention::half_integer);

std::vector<LatticePoint> lattice_basis(LatticeKind kind,
                                        BccConvention convention = BccConvention::half_integer);

struct WignerSeitzCell {
  LatticeKind kind;
  std::vector<LatticePoint> vertices;  // canonical order
  Polyhedron polyhedron;               // cubic kinds only
  std::vector<LatticePoint> polygon;   // rank-2 kinds: counterclockwise
};

// fcc: (100) ∪ (010) ∪ (001) of D3, the rhombic dodecahedron. bcc: (111)/4 of
// D3, the truncated octahedron. sc: (001) of B3, the cube. hex_A2:
// (10) ∪ (01) of A2. square_B2: (01) of B2.
WignerSeitzCell wigner_seitz(LatticeKind kind, BccConvention convention = BccConvention::half_integer);

// 0, e_i, e_i + e_j, e1 + e2 + e3.
std::vector<Quaternion> primitive_cell_sc();
// Feet of the sc Voronoi planes: the B3 orbits of ω1/2, ω2/2 and ω3; each
// plane is (x, m) = (m, m).
std::vector<Quaternion> sc_voronoi_planes();

struct VoronoiReport {
  bool ok = false;
  std::size_t neighbours = 0;  // nonzero lattice points as near as the origin
  std::string detail;
};
// Brute force over a coordinate box: no lattice point is nearer to v than the
// origin, and at least `rank` nonzero lattice points are exactly as near.
VoronoiReport voronoi_vertex_check(LatticeKind kind, const LatticePoint& v,
                                   BccConvention convention = BccConvention::half_integer);

int lex_compare(const LatticePoint& x, const LatticePoint& y);
std::string to_string(const LatticePoint& p);

}  // namespace pyrito
