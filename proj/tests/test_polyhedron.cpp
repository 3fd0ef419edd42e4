#include <gtest/gtest.h>

#include <set>

#include "pyrito/error.hpp"
#include "pyrito/polyhedra.hpp"
#include "pyrito/polyhedron.hpp"
#include "support.hpp"

using namespace pyrito;
using namespace pyrito::test;

namespace {

FieldScalar triple(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
  return scalar_product(a, cross(b, c));
}

// Brute-force facet oracle: a plane through three points is a facet plane
// when every point lies weakly on one side. Planes are normalized so the
// first nonzero normal coordinate is +1 or -1 with offset sign fixed.
using PlaneKey = std::array<std::string, 4>;

std::set<PlaneKey> oracle_planes(const std::vector<Quaternion>& pts) {
  std::set<PlaneKey> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Quaternion nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (nrm.is_zero()) continue;
        FieldScalar off = scalar_product(nrm, pts[i]);
        int above = 0, below = 0;
        for (const auto& p : pts) {
          const int s = field_sign(scalar_product(nrm, p) - off);
          above += s > 0;
          below += s < 0;
        }
        if (above && below) continue;
        if (above) {
          nrm = -nrm;
          off = -off;
        }
        // Outward normal now; scale so the offset is 1 (origin is interior).
        const FieldScalar inv = off.inverse();
        const Quaternion u = nrm * inv;
        out.insert({u[1].to_string(), u[2].to_string(), u[3].to_string(), "1"});
      }
    }
  }
  return out;
}

std::set<PlaneKey> hull_planes(const Polyhedron& p) {
  std::set<PlaneKey> out;
  for (const auto& pl : p.planes) {
    const Quaternion u = pl.normal * pl.offset.inverse();
    out.insert({u[1].to_string(), u[2].to_string(), u[3].to_string(), "1"});
  }
  return out;
}

void expect_hull_matches_oracle(const Polyhedron& p, const std::string& what) {
  EXPECT_EQ(hull_planes(p), oracle_planes(p.vertices)) << what;
  EXPECT_TRUE(faces_consistent(p)) << what;
  // Each face is counterclockwise from outside: consecutive triples turn
  // positively about the outward normal.
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& face = p.faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Quaternion& a = p.vertices[face[i]];
      const Quaternion& b = p.vertices[face[(i + 1) % face.size()]];
      const Quaternion& c = p.vertices[face[(i + 2) % face.size()]];
      EXPECT_GT(field_sign(scalar_product(cross(b - a, c - b), p.planes[f].normal)), 0) << what;
    }
    // Fan volume from the origin is positive.
    FieldScalar vol;
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      vol += triple(p.vertices[face[0]], p.vertices[face[i]], p.vertices[face[i + 1]]);
    }
    EXPECT_GT(field_sign(vol), 0) << what;
  }
}

}  // namespace

TEST(Hull, CubeAndOctahedron) {
  const auto cube = hull_faces(signs(1, 1, 1));
  EXPECT_EQ(cube.num_faces(), 6u);
  EXPECT_EQ(cube.num_edges(), 12u);
  EXPECT_EQ(face_census(cube), (std::map<std::size_t, std::size_t>{{4, 6}}));
  EXPECT_EQ(classify(cube), SolidName::cube);
  expect_hull_matches_oracle(cube, "cube");
  const auto oct = hull_faces(points("1,0,0;-1,0,0;0,1,0;0,-1,0;0,0,1;0,0,-1"));
  EXPECT_EQ(oct.num_faces(), 8u);
  EXPECT_EQ(classify(oct), SolidName::octahedron);
  expect_hull_matches_oracle(oct, "octahedron");
}

TEST(Hull, DropsInteriorAndEdgePoints) {
  auto pts = signs(1, 1, 1);
  pts.push_back(Quaternion::vec(0, 0, 0));
  pts.push_back(Quaternion::vec(1, 1, 0));  // on an edge
  pts.push_back(Quaternion::vec(1, 0, 0));  // face centre
  const auto cube = hull_faces(pts);
  EXPECT_EQ(cube.vertices, signs(1, 1, 1));
}

TEST(Hull, RejectsDegenerateInput) {
  EXPECT_THROW(hull_faces(points("1,0,0;0,1,0;0,0,1")), DomainError);
  EXPECT_THROW(hull_faces(points("1,0,0;0,1,0;-1,0,0;0,-1,0;1,1,0")), DomainError);
}

TEST(Hull, MatchesBruteForceOracle) {
  expect_hull_matches_oracle(pseudoicosahedron(1), "x=1");
  expect_hull_matches_oracle(pseudoicosahedron(FieldScalar::tau()), "x=tau");
  expect_hull_matches_oracle(pseudoicosahedron(Rational(2, 7)), "x=2/7");
  expect_hull_matches_oracle(pyritohedron(Rational(1, 2)), "h=1/2");
  expect_hull_matches_oracle(pyritohedron(FieldScalar::tau() - 1), "h=1/tau");
  expect_hull_matches_oracle(hull_faces(all_perm_signs(2, 1, 0)), "truncated octahedron");
  expect_hull_matches_oracle(pseudoicosidodecahedron(Rational(3, 2)), "icosido 3/2");
}

TEST(HullProperty, RandomPointClouds) {
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Quaternion> pts;
    // Always include an octahedron around the origin so it is interior.
    for (const auto& p : points("1,0,0;-1,0,0;0,1,0;0,-1,0;0,0,1;0,0,-1")) pts.push_back(p);
    for (int i = 0; i < 14; ++i) {
      pts.push_back(Quaternion::vec(coord(rng()), coord(rng()), coord(rng())));
    }
    const auto hull = hull_faces(pts);
    expect_hull_matches_oracle(hull, "random cloud " + std::to_string(trial));
    // Every input point is inside or on the hull.
    for (const auto& p : pts) {
      for (const auto& pl : hull.planes) EXPECT_LE(field_sign(scalar_product(pl.normal, p) - pl.offset), 0);
    }
  }
}

TEST(HullProperty, Deterministic) {
  auto pts = cyclic_signs(2, 1, 0);
  const auto a = hull_faces(pts);
  std::shuffle(pts.begin(), pts.end(), rng());
  const auto b = hull_faces(pts);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.faces, b.faces);
}

TEST(Polyhedron, EdgesAndLengths) {
  const auto cube = hull_faces(signs(1, 1, 1));
  EXPECT_EQ(edges(cube).size(), 12u);
  EXPECT_EQ(edge_lengths_squared(cube), std::vector<FieldScalar>{4});
  EXPECT_EQ(squared_distance(Quaternion::vec(1, 2, 3), Quaternion::vec(0, 0, 0)), FieldScalar(14));
  const auto tc = triangle_census(pseudoicosahedron(1));
  EXPECT_EQ(tc.equilateral, 8u);
  EXPECT_EQ(tc.isosceles, 12u);
  EXPECT_EQ(tc.scalene, 0u);
}

TEST(Polyhedron, PolarDualPairs) {
  const auto cube = hull_faces(signs(1, 1, 1));
  EXPECT_EQ(classify(polar_dual(cube)), SolidName::octahedron);
  EXPECT_EQ(classify(polar_dual(hull_faces(cyclic_signs(1, 1, 0)))), SolidName::rhombic_dodecahedron);
  const auto off_centre = hull_faces(points("2,0,0;3,0,0;2,1,0;2,0,1"));
  EXPECT_THROW(polar_dual(off_centre), DomainError);
}

TEST(Polyhedron, ClassifyTemplates) {
  EXPECT_EQ(classify(hull_faces(cyclic_signs(1, 1, 0))), SolidName::cuboctahedron);
  EXPECT_EQ(classify(hull_faces(all_perm_signs(2, 1, 0))), SolidName::truncated_octahedron);
  EXPECT_EQ(classify(hull_faces(points("1,1,1;1,-1,-1;-1,1,-1;-1,-1,1"))), SolidName::tetrahedron);
  // A stretched cube is not a cube.
  EXPECT_EQ(classify(hull_faces(signs(1, 1, 2))), SolidName::unknown);
  // Congruence ignores orientation and scale but not shape.
  const FieldScalar t = FieldScalar::tau();
  EXPECT_EQ(classify(hull_faces(times(7, cyclic_signs(1, t, 0)))), SolidName::icosahedron);
  EXPECT_EQ(classify(hull_faces(cyclic_signs(3, 1, 0))), SolidName::pseudoicosahedron);
  EXPECT_EQ(solid_label(SolidName::rhombic_dodecahedron), "rhombic dodecahedron");
}

TEST(Polyhedron, UniformRatio) {
  const auto a = cyclic_signs(2, 1, 0);
  EXPECT_EQ(uniform_ratio(times(Rational(3, 5), a), a), FieldScalar(Rational(3, 5)));
  EXPECT_FALSE(uniform_ratio(cyclic_signs(3, 1, 0), a).has_value());
  EXPECT_TRUE(congruent_up_to_scale(cyclic_signs(1, 2, 0), a));
  EXPECT_FALSE(congruent_up_to_scale(cyclic_signs(1, 3, 0), a));
}
