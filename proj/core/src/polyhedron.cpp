#include "pyrito/polyhedron.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

#include "pyrito/error.hpp"
#include "pyrito/qgroups.hpp"

namespace pyrito {

namespace {

int orient(const Quaternion& normal, const Quaternion& p, const Quaternion& base) {
  return scalar_product(normal, p - base).sign();
}

Quaternion plane_normal(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
  return cross(b - a, c - a);
}

// Orders the coplanar points `idx` counterclockwise about `normal` and drops
// points that are not corners of their convex hull (monotone chain).
std::vector<std::size_t> planar_hull(const std::vector<Quaternion>& pts,
                                     std::vector<std::size_t> idx, const Quaternion& normal) {
  const Quaternion u = pts[idx[1]] - pts[idx[0]];
  const Quaternion w = cross(normal, u);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const FieldScalar di = scalar_product(pts[i], u), dj = scalar_product(pts[j], u);
    const int s = (dj - di).sign();
    if (s != 0) return s > 0;
    return real_less(scalar_product(pts[i], w), scalar_product(pts[j], w));
  });
  auto left = [&](std::size_t o, std::size_t a, std::size_t b) {
    return scalar_product(cross(pts[a] - pts[o], pts[b] - pts[o]), normal).sign() > 0;
  };
  std::vector<std::size_t> chain(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && !left(chain[k - 2], chain[k - 1], idx[i])) --k;
    chain[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !left(chain[k - 2], chain[k - 1], idx[i])) --k;
    chain[k++] = idx[i];
  }
  chain.resize(k - 1);
  return chain;
}

// Starts the cycle at its smallest index so output does not depend on the
// order faces were discovered in.
void rotate_to_min(std::vector<std::size_t>& cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

std::vector<std::array<int, 3>> permutations3() {
  return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

Quaternion signed_permute(const Quaternion& v, const std::array<int, 3>& perm, int signs) {
  Quaternion out;
  for (int i = 0; i < 3; ++i) {
    FieldScalar c = v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] + 1)];
    out[static_cast<std::size_t>(i + 1)] = (signs >> i) & 1 ? -c : c;
  }
  return out;
}

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

std::vector<Quaternion> all_signed_perms(const FieldScalar& x, const FieldScalar& y,
                                         const FieldScalar& z) {
  std::vector<Quaternion> out;
  const Quaternion v = Quaternion::vec(x, y, z);
  for (const auto& p : permutations3()) {
    for (int s = 0; s < 8; ++s) out.push_back(signed_permute(v, p, s));
  }
  return canonical_set(std::move(out));
}

std::vector<Quaternion> join(std::vector<Quaternion> a, const std::vector<Quaternion>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return canonical_set(std::move(a));
}

std::vector<std::size_t> th_orbit_sizes(const std::vector<Quaternion>& pts) {
  const auto& th = cached_point_group(GroupName::pyritohedral);
  std::set<Quaternion, CanonicalLess> remaining(pts.begin(), pts.end());
  std::vector<std::size_t> sizes;
  while (!remaining.empty()) {
    const Quaternion seed = *remaining.begin();
    std::set<Quaternion, CanonicalLess> orbit;
    for (const auto& g : th.elements) orbit.insert(g.apply(seed));
    for (const auto& p : orbit) {
      if (remaining.erase(p) == 0) return {};  // not invariant
    }
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool all_edges_equal(const Polyhedron& poly) { return edge_lengths_squared(poly).size() == 1; }

}  // namespace

std::size_t Polyhedron::num_edges() const {
  std::size_t total = 0;
  for (const auto& f : faces) total += f.size();
  return total / 2;
}

Polyhedron hull_faces(std::vector<Quaternion> points) {
  const std::vector<Quaternion> pts = canonical_set(std::move(points));
  const std::size_t n = pts.size();
  for (const auto& p : pts) {
    if (!p.is_pure()) throw DomainError("hull points must be pure quaternions");
  }

  // Affinely independent seed and an interior reference point.
  std::array<std::size_t, 4> seed{0, 0, 0, 0};
  bool found = false;
  for (std::size_t j = 1; j < n && !found; ++j) {
    for (std::size_t k = j + 1; k < n && !found; ++k) {
      const Quaternion nrm = plane_normal(pts[0], pts[j], pts[k]);
      if (nrm.is_zero()) continue;
      for (std::size_t l = k + 1; l < n; ++l) {
        if (orient(nrm, pts[l], pts[0]) != 0) {
          seed = {0, j, k, l};
          found = true;
          break;
        }
      }
    }
  }
  if (!found) throw DomainError("hull needs at least 4 affinely independent points");
  Quaternion inner;
  for (std::size_t s : seed) inner += pts[s];
  inner *= FieldScalar(Rational(1, 4));

  // Outward normal of the plane through a, b, c (nonzero by assumption).
  auto outward = [&](std::size_t a, std::size_t b, std::size_t c) {
    Quaternion nrm = plane_normal(pts[a], pts[b], pts[c]);
    if (orient(nrm, inner, pts[a]) > 0) nrm = -nrm;
    return nrm;
  };
  auto supporting = [&](const Quaternion& nrm, std::size_t base) {
    for (std::size_t p = 0; p < n; ++p) {
      if (orient(nrm, pts[p], pts[base]) > 0) return false;
    }
    return true;
  };

  Quaternion first_normal;
  std::size_t first_base = 0;
  found = false;
  for (std::size_t i = 0; i < n && !found; ++i) {
    for (std::size_t j = i + 1; j < n && !found; ++j) {
      for (std::size_t k = j + 1; k < n && !found; ++k) {
        if (plane_normal(pts[i], pts[j], pts[k]).is_zero()) continue;
        Quaternion nrm = outward(i, j, k);
        if (supporting(nrm, i)) {
          first_normal = nrm;
          first_base = i;
          found = true;
        }
      }
    }
  }

  struct RawFace {
    std::vector<std::size_t> cycle;
    Quaternion normal;
  };
  std::vector<RawFace> raw;
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::pair<Quaternion, std::size_t>> pending{{first_normal, first_base}};
  std::set<std::pair<std::size_t, std::size_t>> wrapped;
  while (!pending.empty()) {
    auto [nrm, base] = pending.front();
    pending.pop_front();
    std::vector<std::size_t> on;
    for (std::size_t p = 0; p < n; ++p) {
      if (orient(nrm, pts[p], pts[base]) == 0) on.push_back(p);
    }
    std::vector<std::size_t> key = on;
    if (!seen.insert(key).second) continue;
    std::vector<std::size_t> cycle = planar_hull(pts, on, nrm);
    for (std::size_t e = 0; e < cycle.size(); ++e) {
      const std::size_t u = cycle[e], v = cycle[(e + 1) % cycle.size()];
      if (!wrapped.insert({u, v}).second) continue;
      // Neighbouring face across (u, v) contains the reversed edge (v, u).
      std::size_t w = n;
      for (std::size_t p = 0; p < n; ++p) {
        if (!plane_normal(pts[v], pts[u], pts[p]).is_zero()) {
          w = p;
          break;
        }
      }
      for (std::size_t p = 0; p < n; ++p) {
        if (orient(plane_normal(pts[v], pts[u], pts[w]), pts[p], pts[v]) > 0) w = p;
      }
      pending.emplace_back(plane_normal(pts[v], pts[u], pts[w]), v);
    }
    raw.push_back({std::move(cycle), nrm});
  }

  // Keep hull vertices only and reindex.
  std::vector<char> used(n, 0);
  for (const auto& f : raw) {
    for (std::size_t i : f.cycle) used[i] = 1;
  }
  std::vector<std::size_t> remap(n, n);
  Polyhedron poly;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) {
      remap[i] = poly.vertices.size();
      poly.vertices.push_back(pts[i]);
    }
  }
  std::vector<std::pair<std::vector<std::size_t>, FacePlane>> faces;
  for (auto& f : raw) {
    for (auto& i : f.cycle) i = remap[i];
    rotate_to_min(f.cycle);
    const FieldScalar offset = scalar_product(f.normal, poly.vertices[f.cycle[0]]);
    faces.push_back({std::move(f.cycle), {f.normal, offset}});
  }
  std::sort(faces.begin(), faces.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [cycle, plane] : faces) {
    poly.faces.push_back(std::move(cycle));
    poly.planes.push_back(std::move(plane));
  }
  return poly;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polyhedron& poly) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& f : poly.faces) {
    for (std::size_t e = 0; e < f.size(); ++e) {
      const std::size_t a = f[e], b = f[(e + 1) % f.size()];
      out.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<FieldScalar> edge_lengths_squared(const Polyhedron& poly) {
  std::set<FieldScalar, CanonicalLess> out;
  for (const auto& [a, b] : edges(poly)) out.insert(squared_distance(poly.vertices[a], poly.vertices[b]));
  return {out.begin(), out.end()};
}

std::map<std::size_t, std::size_t> face_census(const Polyhedron& poly) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& f : poly.faces) ++out[f.size()];
  return out;
}

TriangleCensus triangle_census(const Polyhedron& poly) {
  TriangleCensus out;
  for (const auto& f : poly.faces) {
    if (f.size() != 3) continue;
    const FieldScalar a = squared_distance(poly.vertices[f[0]], poly.vertices[f[1]]);
    const FieldScalar b = squared_distance(poly.vertices[f[1]], poly.vertices[f[2]]);
    const FieldScalar c = squared_distance(poly.vertices[f[2]], poly.vertices[f[0]]);
    const int equal_pairs = (a == b) + (b == c) + (c == a);
    if (equal_pairs == 3) {
      ++out.equilateral;
    } else if (equal_pairs == 1) {
      ++out.isosceles;
    } else {
      ++out.scalene;
    }
  }
  return out;
}

FieldScalar squared_distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

Polyhedron polar_dual(const Polyhedron& poly) {
  if (!poly.has_faces()) throw DomainError("polar dual needs face planes; run the hull step first");
  std::vector<Quaternion> dual;
  for (const auto& plane : poly.planes) {
    if (plane.offset.sign() <= 0) throw DomainError("polar dual needs the origin strictly inside");
    dual.push_back(plane.normal * plane.offset.inverse());
  }
  return hull_faces(std::move(dual));
}

bool faces_consistent(const Polyhedron& poly) {
  if (poly.faces.size() != poly.planes.size()) return false;
  for (std::size_t f = 0; f < poly.faces.size(); ++f) {
    const FacePlane& plane = poly.planes[f];
    for (std::size_t i : poly.faces[f]) {
      if (!(scalar_product(plane.normal, poly.vertices[i]) == plane.offset)) return false;
    }
    for (const auto& v : poly.vertices) {
      if (real_less(plane.offset, scalar_product(plane.normal, v))) return false;
    }
  }
  const long euler = static_cast<long>(poly.num_vertices()) - static_cast<long>(poly.num_edges()) +
                     static_cast<long>(poly.num_faces());
  return euler == 2;
}

std::string solid_label(SolidName name) {
  switch (name) {
    case SolidName::tetrahedron: return "tetrahedron";
    case SolidName::octahedron: return "octahedron";
    case SolidName::cube: return "cube";
    case SolidName::cuboctahedron: return "cuboctahedron";
    case SolidName::rhombic_dodecahedron: return "rhombic dodecahedron";
    case SolidName::truncated_octahedron: return "truncated octahedron";
    case SolidName::icosahedron: return "icosahedron";
    case SolidName::dodecahedron: return "dodecahedron";
    case SolidName::icosidodecahedron: return "icosidodecahedron";
    case SolidName::pseudoicosahedron: return "pseudoicosahedron";
    case SolidName::pyritohedron: return "pyritohedron";
    case SolidName::pseudoicosidodecahedron: return "pseudoicosidodecahedron";
    case SolidName::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<FieldScalar> uniform_ratio(const std::vector<Quaternion>& a,
                                         const std::vector<Quaternion>& b) {
  const std::vector<Quaternion> target = canonical_set(a);
  const std::vector<Quaternion> source = canonical_set(b);
  if (target.size() != source.size() || target.empty()) return std::nullopt;
  const Quaternion& a0 = target.front();
  std::size_t k = 0;
  while (k < 4 && a0[k].is_zero()) ++k;
  if (k == 4) return target == source ? std::optional<FieldScalar>(FieldScalar(1)) : std::nullopt;
  for (const auto& q : source) {
    if (q[k].is_zero()) continue;
    const FieldScalar s = a0[k] / q[k];
    if (q * s == a0 && canonical_set(scaled(source, s)) == target) {
      // Centrally symmetric sets match under both signs; report the positive one.
      if (field_sign(s) < 0 && canonical_set(scaled(source, -s)) == target) return -s;
      return s;
    }
  }
  return std::nullopt;
}

bool congruent_up_to_scale(const std::vector<Quaternion>& points,
                           const std::vector<Quaternion>& templ) {
  if (points.size() != templ.size() || points.empty()) return false;
  const std::vector<Quaternion> target = canonical_set(points);
  const Quaternion& p0 = target.front();
  std::size_t k = 1;
  while (k < 4 && p0[k].is_zero()) ++k;
  if (k == 4) return false;
  for (const auto& perm : permutations3()) {
    for (int signs = 0; signs < 8; ++signs) {
      std::vector<Quaternion> image;
      image.reserve(templ.size());
      for (const auto& t : templ) image.push_back(signed_permute(t, perm, signs));
      for (const auto& t : image) {
        if (t[k].is_zero()) continue;
        const FieldScalar s = p0[k] / t[k];
        if (s.sign() <= 0 || !(t * s == p0)) continue;
        if (canonical_set(scaled(image, s)) == target) return true;
      }
    }
  }
  return false;
}

SolidName classify(const Polyhedron& poly) {
  if (!poly.has_faces()) return SolidName::unknown;
  const auto census = face_census(poly);
  const std::size_t v = poly.num_vertices();
  auto has = [&](std::map<std::size_t, std::size_t> want) { return census == want; };
  const bool regular_edges = all_edges_equal(poly);
  const FieldScalar tau = FieldScalar::tau();
  const FieldScalar inv_tau = tau - FieldScalar(1);
  const auto& pts = poly.vertices;

  if (v == 4 && has({{3, 4}}) && regular_edges) return SolidName::tetrahedron;
  if (v == 6 && has({{3, 8}}) && congruent_up_to_scale(pts, all_signed_perms(1, 0, 0))) {
    return SolidName::octahedron;
  }
  if (v == 8 && has({{4, 6}}) && congruent_up_to_scale(pts, all_signed_perms(1, 1, 1))) {
    return SolidName::cube;
  }
  if (v == 12 && has({{3, 8}, {4, 6}}) && congruent_up_to_scale(pts, all_signed_perms(1, 1, 0))) {
    return SolidName::cuboctahedron;
  }
  if (v == 14 && has({{4, 12}}) &&
      congruent_up_to_scale(pts, join(all_signed_perms(2, 0, 0), all_signed_perms(1, 1, 1)))) {
    return SolidName::rhombic_dodecahedron;
  }
  if (v == 24 && has({{4, 6}, {6, 8}}) && congruent_up_to_scale(pts, all_signed_perms(2, 1, 0))) {
    return SolidName::truncated_octahedron;
  }
  if (v == 12 && has({{3, 20}})) {
    if (regular_edges && congruent_up_to_scale(pts, cyclic_signed(tau, 1, 0))) {
      return SolidName::icosahedron;
    }
    if (th_orbit_sizes(pts) == std::vector<std::size_t>{12}) return SolidName::pseudoicosahedron;
  }
  if (v == 20 && has({{5, 12}})) {
    const auto dodeca = join(all_signed_perms(1, 1, 1), cyclic_signed(0, tau, inv_tau));
    if (regular_edges && congruent_up_to_scale(pts, dodeca)) return SolidName::dodecahedron;
    if (th_orbit_sizes(pts) == std::vector<std::size_t>{8, 12}) return SolidName::pyritohedron;
  }
  if (v == 30) {
    const auto icosido = join(cyclic_signed(tau, 0, 0),
                              cyclic_signed(Rational(1, 2), tau * Rational(1, 2), tau * tau * Rational(1, 2)));
    if (has({{3, 20}, {5, 12}}) && regular_edges && congruent_up_to_scale(pts, icosido)) {
      return SolidName::icosidodecahedron;
    }
    // Away from x = τ the pentagons are not planar and the hull splits each
    // into three triangles, so only the orbit structure is used.
    if (th_orbit_sizes(pts) == std::vector<std::size_t>{6, 24}) {
      return SolidName::pseudoicosidodecahedron;
    }
  }
  return SolidName::unknown;
}

}  // namespace pyrito
