#include "pyrito/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "pyrito/error.hpp"

namespace pyrito {

namespace {

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool same_parity_integers(const LatticePoint& p) {
  for (const auto& c : p) {
    if (!is_integer(c)) return false;
  }
  const bool odd = mpz_odd_p(p[0].get_num_mpz_t()) != 0;
  return std::all_of(p.begin(), p.end(),
                     [&](const Rational& c) { return (mpz_odd_p(c.get_num_mpz_t()) != 0) == odd; });
}

void require_rank(LatticeKind kind, const LatticePoint& p) {
  if (p.size() != static_cast<std::size_t>(lattice_rank(kind))) {
    throw DomainError(lattice_label(kind) + " points have " + std::to_string(lattice_rank(kind)) +
                      " coordinates");
  }
}

Rational grid_step(LatticeKind kind, BccConvention convention) {
  if (kind == LatticeKind::bcc && convention == BccConvention::half_integer) return {1, 2};
  return 1;
}

// Lattice points whose coordinates lie in [-bound, bound] on the kind's grid.
void for_each_in_box(LatticeKind kind, BccConvention convention, long bound,
                     const std::function<void(const LatticePoint&)>& visit) {
  const Rational step = grid_step(kind, convention);
  const long steps = bound * static_cast<long>(mpz_get_si(step.get_den_mpz_t()));
  const std::size_t rank = static_cast<std::size_t>(lattice_rank(kind));
  LatticePoint p(rank);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rank) {
      if (member(kind, p, convention)) visit(p);
      return;
    }
    for (long k = -steps; k <= steps; ++k) {
      p[i] = step * k;
      rec(i + 1);
    }
  };
  rec(0);
}

// Coordinates of any point of squared norm at most r2 are bounded by this.
long coordinate_bound(const Rational& r2) {
  return static_cast<long>(std::ceil(std::sqrt(r2.get_d()))) + 1;
}

struct PointLess {
  bool operator()(const LatticePoint& x, const LatticePoint& y) const { return lex_compare(x, y) < 0; }
};

std::vector<LatticePoint> from_quaternions(const std::vector<Quaternion>& qs) {
  std::set<LatticePoint, PointLess> out;
  for (const auto& q : qs) out.insert(to_lattice_point(q));
  return {out.begin(), out.end()};
}

std::vector<LatticePoint> from_root_coords(const std::vector<RootCoords>& cs) {
  std::set<LatticePoint, PointLess> out;
  for (const auto& c : cs) {
    LatticePoint p;
    for (const auto& x : c) {
      if (!x.is_rational()) throw DomainError("irrational rank-2 coordinate");
      p.push_back(x.a());
    }
    out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

std::vector<LatticePoint> join(std::vector<LatticePoint> a, const std::vector<LatticePoint>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), PointLess{});
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Rational cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise convex polygon in coordinates whose orientation agrees
// with the orthonormal frame when `flip` is false.
std::vector<LatticePoint> polygon_order(std::vector<LatticePoint> pts, bool flip) {
  std::sort(pts.begin(), pts.end(), PointLess{});
  std::vector<LatticePoint> chain(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sgn(cross2(chain[k - 2], chain[k - 1], pts[i])) <= 0) --k;
    chain[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && sgn(cross2(chain[k - 2], chain[k - 1], pts[i])) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  if (flip) std::reverse(chain.begin() + 1, chain.end());
  return chain;
}

}  // namespace

LatticeKind parse_lattice_kind(std::string_view name) {
  if (name == "fcc") return LatticeKind::fcc;
  if (name == "bcc") return LatticeKind::bcc;
  if (name == "sc") return LatticeKind::sc;
  if (name == "hexA2" || name == "hex_A2") return LatticeKind::hex_A2;
  if (name == "squareB2" || name == "square_B2") return LatticeKind::square_B2;
  throw DomainError("unknown lattice kind '" + std::string(name) + "'");
}

std::string lattice_label(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::fcc: return "fcc";
    case LatticeKind::bcc: return "bcc";
    case LatticeKind::sc: return "sc";
    case LatticeKind::hex_A2: return "hexA2";
    case LatticeKind::square_B2: return "squareB2";
  }
  return "?";
}

int lattice_rank(LatticeKind kind) {
  return kind == LatticeKind::hex_A2 || kind == LatticeKind::square_B2 ? 2 : 3;
}

LatticeSpec lattice_spec(LatticeKind kind, BccConvention convention) {
  LatticeSpec spec{kind, convention, {}, lattice_basis(kind, convention)};
  if (kind == LatticeKind::hex_A2) {
    spec.gram = cached_diagram(DiagramName::A2).gram;
  } else {
    const std::size_t n = static_cast<std::size_t>(lattice_rank(kind));
    spec.gram.assign(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) spec.gram[i][i] = 1;
  }
  return spec;
}

Rational lattice_inner(const LatticeSpec& spec, const LatticePoint& x, const LatticePoint& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * y[j] * spec.gram[i][j];
  }
  return s;
}

Rational lattice_norm2(const LatticeSpec& spec, const LatticePoint& x) { return lattice_inner(spec, x, x); }

LatticePoint to_lattice_point(const Quaternion& q) {
  if (!q.is_pure()) throw DomainError("lattice points are pure quaternions");
  LatticePoint p;
  for (std::size_t i = 1; i < 4; ++i) {
    if (!q[i].is_rational()) throw DomainError("lattice points need rational coordinates");
    p.push_back(q[i].a());
  }
  return p;
}

Quaternion to_quaternion(const LatticePoint& p) {
  if (p.size() != 3) throw DomainError("only rank-3 lattice points are quaternions");
  return Quaternion::vec(p[0], p[1], p[2]);
}

bool member(LatticeKind kind, const LatticePoint& p, BccConvention convention) {
  require_rank(kind, p);
  switch (kind) {
    case LatticeKind::fcc: {
      if (!std::all_of(p.begin(), p.end(), is_integer)) return false;
      const Rational sum = p[0] + p[1] + p[2];
      return mpz_even_p(sum.get_num_mpz_t()) != 0;
    }
    case LatticeKind::bcc: {
      if (convention == BccConvention::doubled) return same_parity_integers(p);
      LatticePoint twice = p;
      for (auto& c : twice) c *= 2;
      return same_parity_integers(twice);
    }
    case LatticeKind::sc:
    case LatticeKind::hex_A2:
    case LatticeKind::square_B2:
      return std::all_of(p.begin(), p.end(), is_integer);
  }
  return false;
}

bool member(LatticeKind kind, const Quaternion& q, BccConvention convention) {
  if (lattice_rank(kind) != 3) throw DomainError(lattice_label(kind) + " points are not quaternions");
  if (!q.is_pure()) return false;
  for (std::size_t i = 1; i < 4; ++i) {
    if (!q[i].is_rational()) return false;
  }
  return member(kind, to_lattice_point(q), convention);
}

std::vector<LatticePoint> shell(LatticeKind kind, const Rational& norm2, BccConvention convention) {
  if (sgn(norm2) < 0) throw DomainError("shell norm must be nonnegative");
  const LatticeSpec spec = lattice_spec(kind, convention);
  std::vector<LatticePoint> out;
  for_each_in_box(kind, convention, coordinate_bound(norm2), [&](const LatticePoint& p) {
    if (lattice_norm2(spec, p) == norm2) out.push_back(p);
  });
  std::sort(out.begin(), out.end(), PointLess{});
  return out;
}

std::vector<LatticePoint> lattice_basis(LatticeKind kind, BccConvention convention) {
  switch (kind) {
    case LatticeKind::fcc:
      return from_quaternions(cached_diagram(DiagramName::D3).simple_roots);
    case LatticeKind::bcc: {
      std::vector<LatticePoint> out;
      for (const auto& w : cached_diagram(DiagramName::D3).weights) {
        LatticePoint p = to_lattice_point(w);
        if (convention == BccConvention::doubled) {
          for (auto& c : p) c *= 2;
        }
        out.push_back(std::move(p));
      }
      return out;
    }
    case LatticeKind::sc:
      return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case LatticeKind::hex_A2:
    case LatticeKind::square_B2:
      return {{1, 0}, {0, 1}};
  }
  return {};
}

WignerSeitzCell wigner_seitz(LatticeKind kind, BccConvention convention) {
  WignerSeitzCell cell{kind, {}, {}, {}};
  std::vector<Quaternion> pts;
  switch (kind) {
    case LatticeKind::fcc: {
      const auto& d3 = cached_diagram(DiagramName::D3);
      for (const auto& c : {std::vector<FieldScalar>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
        const auto o = orbit(d3, c).points;
        pts.insert(pts.end(), o.begin(), o.end());
      }
      break;
    }
    case LatticeKind::bcc: {
      const Rational scale = convention == BccConvention::doubled ? Rational(1, 2) : Rational(1, 4);
      pts = orbit(cached_diagram(DiagramName::D3), {1, 1, 1}, scale).points;
      break;
    }
    case LatticeKind::sc:
      pts = orbit(cached_diagram(DiagramName::B3), {0, 0, 1}).points;
      break;
    case LatticeKind::hex_A2: {
      const auto& a2 = cached_diagram(DiagramName::A2);
      cell.vertices = join(from_root_coords(plane_orbit(a2, {1, 0}).points),
                           from_root_coords(plane_orbit(a2, {0, 1}).points));
      // α1, α2 span the plane with negative orientation.
      cell.polygon = polygon_order(cell.vertices, true);
      return cell;
    }
    case LatticeKind::square_B2: {
      std::vector<LatticePoint> frame;
      for (const auto& c : plane_orbit(cached_diagram(DiagramName::B2), {0, 1}).points) {
        const auto l = b2_frame_coords(c);
        frame.push_back({l[0].a(), l[1].a()});
      }
      cell.vertices = join(frame, {});
      cell.polygon = polygon_order(cell.vertices, false);
      return cell;
    }
  }
  cell.vertices = from_quaternions(pts);
  cell.polyhedron = hull_faces(pts);
  return cell;
}

std::vector<Quaternion> primitive_cell_sc() {
  std::vector<Quaternion> out;
  for (int s = 0; s < 8; ++s) out.push_back(Quaternion::vec(s & 1, (s >> 1) & 1, (s >> 2) & 1));
  return canonical_set(std::move(out));
}

std::vector<Quaternion> sc_voronoi_planes() {
  const auto& b3 = cached_diagram(DiagramName::B3);
  const FieldScalar half = Rational(1, 2);
  std::vector<Quaternion> out;
  for (const auto& c : {std::vector<FieldScalar>{half, 0, 0}, {0, half, 0}, {0, 0, 1}}) {
    const auto o = orbit(b3, c).points;
    out.insert(out.end(), o.begin(), o.end());
  }
  return canonical_set(std::move(out));
}

VoronoiReport voronoi_vertex_check(LatticeKind kind, const LatticePoint& v, BccConvention convention) {
  require_rank(kind, v);
  const LatticeSpec spec = lattice_spec(kind, convention);
  const Rational r2 = lattice_norm2(spec, v);
  VoronoiReport report;
  bool nearer = false;
  // Any lattice point p at most as near as 0 has |p| <= 2|v|.
  for_each_in_box(kind, convention, coordinate_bound(4 * r2), [&](const LatticePoint& p) {
    LatticePoint diff(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - p[i];
    const int c = cmp(lattice_norm2(spec, diff), r2);
    const bool origin = std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; });
    if (c < 0) {
      nearer = true;
      report.detail = "lattice point " + to_string(p) + " is nearer than the origin";
    } else if (c == 0 && !origin) {
      ++report.neighbours;
    }
  });
  report.ok = !nearer && report.neighbours >= static_cast<std::size_t>(lattice_rank(kind));
  if (!nearer && !report.ok) {
    report.detail = "only " + std::to_string(report.neighbours) + " equidistant neighbours";
  }
  return report;
}

int lex_compare(const LatticePoint& x, const LatticePoint& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = cmp(x[i], y[i])) return c < 0 ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

std::string to_string(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].get_str();
  }
  return out + ")";
}

}  // namespace pyrito
