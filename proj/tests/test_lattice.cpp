#include <gtest/gtest.h>

#include "pyrito/error.hpp"
#include "pyrito/lattice.hpp"
#include "pyrito/qgroups.hpp"
#include "support.hpp"

using namespace pyrito;

namespace {

using Vec3 = std::array<Rational, 3>;

// Lattice points generated from a hard-coded basis, independent of the
// library's membership predicates.
std::vector<Vec3> span_points(const std::array<Vec3, 3>& basis, int range) {
  std::vector<Vec3> out;
  for (int a = -range; a <= range; ++a) {
    for (int b = -range; b <= range; ++b) {
      for (int c = -range; c <= range; ++c) {
        Vec3 p;
        for (std::size_t j = 0; j < 3; ++j) {
          p[j] = a * basis[0][j] + b * basis[1][j] + c * basis[2][j];
          p[j].canonicalize();
        }
        out.push_back(p);
      }
    }
  }
  return out;
}

Rational dist2(const Vec3& a, const Vec3& b) {
  Rational s = 0;
  for (std::size_t j = 0; j < 3; ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return s;
}

std::array<Vec3, 3> basis_of(LatticeKind kind) {
  const Rational h(1, 2);
  switch (kind) {
    case LatticeKind::fcc: return {{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    case LatticeKind::bcc: return {{{h, h, h}, {h, -h, -h}, {-h, h, -h}}};
    default: return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  }
}

// A point of the Voronoi cell boundary is as far from 0 as from at least
// three other lattice points and nearer to no lattice point than to 0.
void expect_voronoi_vertex(LatticeKind kind, const LatticePoint& v) {
  const Vec3 x = {v[0], v[1], v[2]};
  const Vec3 origin = {0, 0, 0};
  const Rational r = dist2(x, origin);
  int ties = 0;
  for (const auto& p : span_points(basis_of(kind), 4)) {
    if (p == origin) continue;
    const Rational d = dist2(x, p);
    ASSERT_GE(d, r) << lattice_label(kind) << " " << to_string(v);
    if (d == r) ++ties;
  }
  EXPECT_GE(ties, 3) << lattice_label(kind) << " " << to_string(v);
}

}  // namespace

TEST(Lattice, KindsAndLabels) {
  EXPECT_EQ(parse_lattice_kind("hexA2"), LatticeKind::hex_A2);
  EXPECT_EQ(parse_lattice_kind("squareB2"), LatticeKind::square_B2);
  EXPECT_THROW(parse_lattice_kind("hcp"), DomainError);
  EXPECT_EQ(lattice_rank(LatticeKind::fcc), 3);
  EXPECT_EQ(lattice_rank(LatticeKind::hex_A2), 2);
}

TEST(Lattice, Membership) {
  const Rational h(1, 2);
  EXPECT_TRUE(member(LatticeKind::fcc, LatticePoint{1, 1, 0}));
  EXPECT_FALSE(member(LatticeKind::fcc, LatticePoint{1, 0, 0}));
  EXPECT_TRUE(member(LatticeKind::bcc, LatticePoint{h, h, -h}));
  EXPECT_TRUE(member(LatticeKind::bcc, LatticePoint{1, 0, 0}));
  EXPECT_FALSE(member(LatticeKind::bcc, LatticePoint{h, h, 0}));
  EXPECT_TRUE(member(LatticeKind::bcc, LatticePoint{1, 1, -1}, BccConvention::doubled));
  EXPECT_TRUE(member(LatticeKind::bcc, LatticePoint{2, 0, 0}, BccConvention::doubled));
  EXPECT_FALSE(member(LatticeKind::bcc, LatticePoint{1, 0, 0}, BccConvention::doubled));
  EXPECT_TRUE(member(LatticeKind::sc, LatticePoint{3, -2, 7}));
  EXPECT_FALSE(member(LatticeKind::sc, LatticePoint{h, 0, 0}));
  EXPECT_TRUE(member(LatticeKind::hex_A2, LatticePoint{2, -1}));
  EXPECT_FALSE(member(LatticeKind::square_B2, LatticePoint{h, h}));
  EXPECT_TRUE(member(LatticeKind::fcc, Quaternion::vec(0, 1, -1)));
}

TEST(Lattice, ShellCounts) {
  EXPECT_EQ(shell(LatticeKind::fcc, 2).size(), 12u);
  EXPECT_EQ(shell(LatticeKind::fcc, 4).size(), 6u);
  EXPECT_EQ(shell(LatticeKind::fcc, 6).size(), 24u);
  EXPECT_EQ(shell(LatticeKind::bcc, Rational(3, 4)).size(), 8u);
  EXPECT_EQ(shell(LatticeKind::bcc, 1).size(), 6u);
  EXPECT_EQ(shell(LatticeKind::bcc, 3, BccConvention::doubled).size(), 8u);
  EXPECT_EQ(shell(LatticeKind::sc, 1).size(), 6u);
  EXPECT_EQ(shell(LatticeKind::sc, 3).size(), 8u);
  EXPECT_EQ(shell(LatticeKind::hex_A2, 2).size(), 6u);
  EXPECT_EQ(shell(LatticeKind::hex_A2, 6).size(), 6u);
  EXPECT_EQ(shell(LatticeKind::square_B2, 1).size(), 4u);
  EXPECT_EQ(shell(LatticeKind::square_B2, 2).size(), 4u);
  EXPECT_TRUE(shell(LatticeKind::sc, 7).empty());
}

TEST(Lattice, ShellMatchesSpanEnumeration) {
  for (LatticeKind kind : {LatticeKind::fcc, LatticeKind::bcc, LatticeKind::sc}) {
    for (const Rational& n2 : {Rational(3, 4), Rational(2), Rational(3), Rational(11, 4), Rational(5)}) {
      std::vector<LatticePoint> want;
      for (const auto& p : span_points(basis_of(kind), 6)) {
        if (dist2(p, {0, 0, 0}) == n2) want.push_back({p[0], p[1], p[2]});
      }
      std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return lex_compare(a, b) < 0; });
      want.erase(std::unique(want.begin(), want.end()), want.end());
      EXPECT_EQ(shell(kind, n2), want) << lattice_label(kind) << " " << n2.get_str();
    }
  }
}

TEST(Lattice, BccIsReciprocalOfFcc) {
  // A point is in bcc iff its products with the fcc basis are integers.
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      for (int c = -4; c <= 4; ++c) {
        LatticePoint p = {Rational(a, 2), Rational(b, 2), Rational(c, 2)};
        for (auto& x : p) x.canonicalize();
        bool integral = true;
        for (const auto& f : basis_of(LatticeKind::fcc)) {
          Rational s = p[0] * f[0] + p[1] * f[1] + p[2] * f[2];
          s.canonicalize();
          integral = integral && s.get_den() == 1;
        }
        EXPECT_EQ(member(LatticeKind::bcc, p), integral) << to_string(p);
      }
    }
  }
}

TEST(Lattice, SpecAndNorms) {
  const auto spec = lattice_spec(LatticeKind::hex_A2);
  EXPECT_EQ(lattice_norm2(spec, {1, 0}), Rational(2));
  EXPECT_EQ(lattice_inner(spec, {1, 0}, {0, 1}), Rational(-1));
  EXPECT_EQ(lattice_norm2(lattice_spec(LatticeKind::sc), {1, 2, 2}), Rational(9));
  EXPECT_EQ(to_lattice_point(Quaternion::vec(1, Rational(1, 2), 0)), (LatticePoint{1, Rational(1, 2), 0}));
  EXPECT_THROW(to_lattice_point(Quaternion::vec(FieldScalar::tau(), 0, 0)), DomainError);
  EXPECT_EQ(lattice_basis(LatticeKind::bcc, BccConvention::doubled).size(), 3u);
}

TEST(Lattice, WignerSeitzCellsAgainstTestOracle) {
  for (LatticeKind kind : {LatticeKind::fcc, LatticeKind::bcc, LatticeKind::sc}) {
    const auto cell = wigner_seitz(kind);
    for (const auto& v : cell.vertices) expect_voronoi_vertex(kind, v);
    EXPECT_TRUE(faces_consistent(cell.polyhedron));
  }
  EXPECT_EQ(wigner_seitz(LatticeKind::fcc).vertices.size(), 14u);
  EXPECT_EQ(wigner_seitz(LatticeKind::bcc).vertices.size(), 24u);
  EXPECT_EQ(wigner_seitz(LatticeKind::sc).vertices.size(), 8u);
  EXPECT_EQ(classify(wigner_seitz(LatticeKind::sc).polyhedron), SolidName::cube);
}

TEST(Lattice, WignerSeitzFaceCounts) {
  // Faces correspond to the nearest (and for fcc, next) lattice neighbours.
  EXPECT_EQ(face_census(wigner_seitz(LatticeKind::fcc).polyhedron), (std::map<std::size_t, std::size_t>{{4, 12}}));
  EXPECT_EQ(face_census(wigner_seitz(LatticeKind::bcc).polyhedron),
            (std::map<std::size_t, std::size_t>{{4, 6}, {6, 8}}));
}

TEST(Lattice, CellsAreOhInvariant) {
  const auto& oh = cached_point_group(GroupName::octahedral);
  for (LatticeKind kind : {LatticeKind::fcc, LatticeKind::bcc, LatticeKind::sc}) {
    std::vector<Quaternion> verts;
    for (const auto& v : wigner_seitz(kind).vertices) verts.push_back(to_quaternion(v));
    verts = canonical_set(verts);
    for (const auto& g : oh.elements) {
      std::vector<Quaternion> img;
      for (const auto& v : verts) img.push_back(g.apply(v));
      EXPECT_EQ(canonical_set(img), verts) << lattice_label(kind);
    }
  }
}

TEST(Lattice, RankTwoCells) {
  const auto hex = wigner_seitz(LatticeKind::hex_A2);
  EXPECT_EQ(hex.polygon.size(), 6u);
  const auto sq = wigner_seitz(LatticeKind::square_B2);
  EXPECT_EQ(sq.polygon.size(), 4u);
  for (const auto& v : sq.polygon) {
    EXPECT_EQ(abs(FieldScalar(v[0])), FieldScalar(Rational(1, 2)));
    EXPECT_EQ(abs(FieldScalar(v[1])), FieldScalar(Rational(1, 2)));
  }
  for (LatticeKind kind : {LatticeKind::hex_A2, LatticeKind::square_B2}) {
    for (const auto& v : wigner_seitz(kind).vertices) EXPECT_TRUE(voronoi_vertex_check(kind, v).ok);
  }
}

TEST(Lattice, DoubledBccCellIsTwiceTheHalfIntegerCell) {
  const auto half = wigner_seitz(LatticeKind::bcc).vertices;
  const auto dbl = wigner_seitz(LatticeKind::bcc, BccConvention::doubled).vertices;
  ASSERT_EQ(half.size(), dbl.size());
  std::vector<Quaternion> a, b;
  for (const auto& v : half) a.push_back(to_quaternion(v) * FieldScalar(2));
  for (const auto& v : dbl) b.push_back(to_quaternion(v));
  EXPECT_TRUE(same_set(a, b));
}

TEST(Lattice, VoronoiRejectsNonVertices) {
  EXPECT_FALSE(voronoi_vertex_check(LatticeKind::sc, {1, 0, 0}).ok);
  EXPECT_FALSE(voronoi_vertex_check(LatticeKind::sc, {Rational(1, 4), 0, 0}).ok);
}

TEST(Lattice, ScPrimitiveCellAndPlanes) {
  EXPECT_EQ(primitive_cell_sc().size(), 8u);
  const auto feet = sc_voronoi_planes();
  EXPECT_EQ(feet.size(), 6u + 12u + 8u);
  // Every sc cell vertex lies on the near side of every plane (x, m) = (m, m).
  for (const auto& v : wigner_seitz(LatticeKind::sc).vertices) {
    const Quaternion x = to_quaternion(v);
    for (const auto& m : feet) EXPECT_LE(field_sign(scalar_product(x, m) - m.norm()), 0);
  }
}
