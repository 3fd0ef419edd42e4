#include "verify.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <variant>

#include "pyrito/coxeter.hpp"
#include "pyrito/lattice.hpp"
#include "pyrito/polyhedra.hpp"
#include "pyrito/qgroups.hpp"
#include "pyrito/transform.hpp"

namespace pyrito {

namespace {

class Expect {
 public:
  void that(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  std::string result() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 5) out += "; +" + std::to_string(failures_.size() - 5) + " more";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

FieldScalar q(long num, long den = 1) { return Rational(num, den); }

Quaternion vec(const FieldScalar& x, const FieldScalar& y, const FieldScalar& z) {
  return Quaternion::vec(x, y, z);
}

// {±a e1 ± b e2, ±a e2 ± b e3, ±a e3 ± b e1}.
std::vector<Quaternion> pm_cyclic(const FieldScalar& a, const FieldScalar& b) {
  std::vector<Quaternion> out;
  for (int s = 0; s < 4; ++s) {
    const FieldScalar x = s & 1 ? -a : a, y = s & 2 ? -b : b;
    out.push_back(vec(x, y, 0));
    out.push_back(vec(0, x, y));
    out.push_back(vec(y, 0, x));
  }
  return canonical_set(std::move(out));
}

std::vector<Quaternion> scaled_set(const std::vector<Quaternion>& pts, const FieldScalar& s) {
  return canonical_set(scaled(pts, s));
}

std::vector<Quaternion> cube(const FieldScalar& s) {
  std::vector<Quaternion> out;
  for (int k = 0; k < 8; ++k) out.push_back(vec(k & 1 ? -s : s, k & 2 ? -s : s, k & 4 ? -s : s));
  return canonical_set(std::move(out));
}

std::vector<Quaternion> octahedron(const FieldScalar& s) {
  return canonical_set({vec(s, 0, 0), vec(-s, 0, 0), vec(0, s, 0), vec(0, -s, 0), vec(0, 0, s), vec(0, 0, -s)});
}

std::vector<Quaternion> unite(std::vector<Quaternion> a, const std::vector<Quaternion>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return canonical_set(std::move(a));
}

bool is_identity(const OrthoElement& g) { return g == OrthoElement::identity(); }

OrthoElement chain(std::initializer_list<OrthoElement> gs) {
  OrthoElement out = OrthoElement::identity();
  for (const auto& g : gs) out = compose(out, g);
  return out;
}

std::string matrix_text(const Matrix<Rational>& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    out << "[";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].get_str();
    out << "]";
  }
  return out.str();
}

Matrix<Rational> rat(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix<Rational> m;
  for (const auto& r : rows) m.emplace_back(r);
  for (auto& row : m) {
    for (auto& x : row) x.canonicalize();
  }
  return m;
}

std::string check_group_orders() {
  Expect e;
  auto order = [](GroupName n) { return cached_point_group(n).size(); };
  e.that(binary_tetrahedral().size() == 24, "|T| != 24");
  e.that(tprime().size() == 24, "|T'| != 24");
  e.that(binary_octahedral().size() == 48, "|O| != 48");
  e.that(order(GroupName::tetrahedral) == 24, "|W(D3)| != 24");
  e.that(order(GroupName::octahedral) == 48, "|O_h| != 48");
  e.that(order(GroupName::chiral_octahedral) == 24, "|O| chiral != 24");
  e.that(order(GroupName::pyritohedral) == 24, "|T_h| != 24");
  e.that(order(GroupName::chiral_tetrahedral) == 12, "|A4| != 12");
  e.that(binary_icosahedral().size() == 120, "|I| != 120");
  e.that(icosahedral_complement().size() == 96, "|S| != 96");
  e.that(order(GroupName::icosahedral) == 120, "|W(H3)| != 120");
  return e.result();
}

std::string check_d3_orbit_tables() {
  Expect e;
  const auto& d3 = cached_diagram(DiagramName::D3);
  const FieldScalar h = q(1, 2);
  e.that(orbit(d3, {1, 0, 0}).points == octahedron(1), "(100) is not {±e_i}");
  e.that(orbit(d3, {0, 1, 0}).points ==
             canonical_set({vec(-h, -h, -h), vec(-h, h, h), vec(h, h, -h), vec(h, -h, h)}),
         "(010) is not the expected tetrahedron");
  e.that(orbit(d3, {0, 0, 1}).points ==
             canonical_set({vec(h, h, h), vec(h, -h, -h), vec(-h, -h, h), vec(-h, h, -h)}),
         "(001) is not the expected tetrahedron");
  std::vector<Quaternion> roots;
  for (int s = 0; s < 4; ++s) {
    const FieldScalar a = s & 1 ? -1 : 1, b = s & 2 ? -1 : 1;
    roots.push_back(vec(a, b, 0));
    roots.push_back(vec(0, a, b));
    roots.push_back(vec(b, 0, a));
  }
  e.that(orbit(d3, {0, 1, 1}).points == canonical_set(roots), "(011) is not {±e_i ± e_j}");
  return e.result();
}

std::string check_truncated_octahedron_orbit() {
  const auto got = orbit(cached_diagram(DiagramName::D3), {1, 1, 1}, q(1, 4)).points;
  const auto want = scaled_set(unite(pm_cyclic(2, 1), pm_cyclic(1, 2)), q(1, 4));
  return got == want && got.size() == 24 ? "" : "1/4 (111) is not 1/4 (±2, ±1, 0) permuted";
}

std::string check_b3_cube_orbit() {
  return orbit(cached_diagram(DiagramName::B3), {0, 0, 1}).points == cube(q(1, 2))
             ? ""
             : "(001)_B3 is not 1/2 (±1, ±1, ±1)";
}

std::string check_b3_110_equals_d3_111() {
  return orbit(cached_diagram(DiagramName::B3), {1, 1, 0}).points ==
                 orbit(cached_diagram(DiagramName::D3), {1, 1, 1}).points
             ? ""
             : "(110)_B3 != (111)_D3";
}

std::string check_d3_cartan() {
  Expect e;
  const auto& d3 = cached_diagram(DiagramName::D3);
  const Matrix<long> c = {{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}};
  e.that(d3.cartan == c, "D3 Cartan matrix is wrong");
  const auto inv = rat({{1, {1, 2}, {1, 2}}, {{1, 2}, {3, 4}, {1, 4}}, {{1, 2}, {1, 4}, {3, 4}}});
  e.that(d3.cartan_inv == inv, "D3 inverse Cartan matrix " + matrix_text(d3.cartan_inv));
  return e.result();
}

std::string check_rank2_metrics() {
  Expect e;
  const auto& a2 = cached_diagram(DiagramName::A2);
  const auto& b2 = cached_diagram(DiagramName::B2);
  e.that(a2.cartan == Matrix<long>{{2, -1}, {-1, 2}}, "A2 Cartan matrix is wrong");
  e.that(a2.metric == rat({{{2, 3}, {1, 3}}, {{1, 3}, {2, 3}}}), "A2 metric " + matrix_text(a2.metric));
  e.that(b2.cartan == Matrix<long>{{2, -2}, {-1, 2}}, "B2 Cartan matrix is wrong");
  e.that(b2.cartan_inv == rat({{1, 1}, {{1, 2}, 1}}), "B2 inverse " + matrix_text(b2.cartan_inv));
  e.that(b2.metric == rat({{1, {1, 2}}, {{1, 2}, {1, 2}}}), "B2 metric " + matrix_text(b2.metric));
  return e.result();
}

std::string check_weights() {
  Expect e;
  const FieldScalar h = q(1, 2);
  const auto& d3 = cached_diagram(DiagramName::D3);
  const auto& b3 = cached_diagram(DiagramName::B3);
  e.that(d3.weights == std::vector<Quaternion>{vec(1, 0, 0), vec(h, h, -h), vec(h, h, h)},
         "D3 weights are wrong");
  e.that(b3.weights == std::vector<Quaternion>{vec(1, 0, 0), vec(1, 1, 0), vec(h, h, h)},
         "B3 weights are wrong");
  for (const auto* d : {&d3, &b3}) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        e.that(scalar_product(d->weights[i], d->weights[j]) == FieldScalar(d->metric[i][j]),
               diagram_label(d->name) + " (w_i, w_j) != G_ij");
      }
    }
  }
  return e.result();
}

std::string check_coxeter_relations() {
  Expect e;
  for (DiagramName n : {DiagramName::D3, DiagramName::B3}) {
    const auto& d = cached_diagram(n);
    for (int i = 1; i <= 3; ++i) {
      for (int j = i; j <= 3; ++j) {
        const OrthoElement g = compose(simple_reflection(d, i), simple_reflection(d, j));
        const long cij = d.cartan[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        const long cji = d.cartan[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
        // m_ij from the Cartan product: 0 -> 2, 1 -> 3, 2 -> 4.
        const int m = i == j ? 1 : (cij * cji == 0 ? 2 : cij * cji == 1 ? 3 : 4);
        e.that(element_order(g) == m, diagram_label(n) + " (r" + std::to_string(i) + " r" +
                                          std::to_string(j) + ") has the wrong order");
      }
    }
  }
  return e.result();
}

std::string check_abab_relations() {
  Expect e;
  const auto& b3 = cached_diagram(DiagramName::B3);
  const OrthoElement r1 = simple_reflection(b3, 1), r2 = simple_reflection(b3, 2), r3 = simple_reflection(b3, 3);
  const OrthoElement a = compose(r1, r2), b = compose(r2, r3);
  const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
  e.that(a.apply(e1) == e2 && a.apply(e2) == e3 && a.apply(e3) == e1, "a is not the cycle (e1 e2 e3)");
  e.that(b.apply(e1) == e1 && b.apply(e3) == -e2, "b does not fix e1 and send e3 to -e2");
  e.that(is_identity(power(a, 3)) && is_identity(power(b, 4)) && is_identity(power(compose(a, b), 2)),
         "a^3 = b^4 = (ab)^2 = 1 fails");
  const auto o = closure(std::vector<OrthoElement>{a, b}, 48);
  e.that(o.size() == 24, "<a, b> does not have order 24");
  return e.result();
}

std::string check_diagonal_permutations() {
  Expect e;
  const auto& b3 = cached_diagram(DiagramName::B3);
  const OrthoElement r1 = simple_reflection(b3, 1), r2 = simple_reflection(b3, 2), r3 = simple_reflection(b3, 3);
  // Diagonals in the order AB', CD', DC', BA'.
  e.that(diagonal_permutation(compose(r1, r2)) == Perm4{0, 2, 3, 1}, "a does not act as (0)(1 2 3) on the diagonals");
  e.that(diagonal_permutation(compose(r2, r3)) == Perm4{2, 3, 1, 0}, "b does not act as (0 2 1 3) on the diagonals");
  e.that(diagonal_permutation(OrthoElement::central_inversion()) == Perm4{0, 1, 2, 3},
         "[1, -1] moves a diagonal");
  return e.result();
}

std::string check_tetrahedron_permutations() {
  Expect e;
  const auto& d3 = cached_diagram(DiagramName::D3);
  const std::array<std::string, 4> abcd = {"A", "B", "C", "D"};
  const OrthoElement r1 = simple_reflection(d3, 1), r2 = simple_reflection(d3, 2), r3 = simple_reflection(d3, 3);
  auto cycles = [&](const OrthoElement& g) {
    const auto act = tetrahedron_permutation(g);
    return std::holds_alternative<Perm4>(act) ? cycle_notation(std::get<Perm4>(act), abcd) : "mixed";
  };
  e.that(cycles(r1) == "(CD)", "r1 = " + cycles(r1));
  e.that(cycles(r2) == "(BD)", "r2 = " + cycles(r2));
  e.that(cycles(r3) == "(AC)", "r3 = " + cycles(r3));
  e.that(cycles(chain({r1, r2, r3})) == "(ADBC)", "r1 r2 r3 = " + cycles(chain({r1, r2, r3})));
  const OrthoElement gamma(Quaternion::e3(), Quaternion::e3());
  e.that(cycles(gamma) == "mixed", "gamma keeps the tetrahedra");
  e.that(chain({gamma, r2, gamma}) == r3, "gamma r2 gamma != r3");
  return e.result();
}

std::string check_pseudoicosahedron_at_one() {
  return pseudoicosahedron(1).vertices == pm_cyclic(2, 1) ? "" : "x = 1 is not (±2, ±1, 0) cyclic";
}

std::string check_icosahedron_at_tau() {
  Expect e;
  const FieldScalar t = FieldScalar::tau();
  const auto ico = pseudoicosahedron(t);
  e.that(ico.vertices == scaled_set(pm_cyclic(t, 1), t), "x = tau is not tau (±tau, ±1, 0) cyclic");
  e.that(classify(ico) == SolidName::icosahedron, "x = tau is not classified as an icosahedron");
  return e.result();
}

std::string check_mirror_icosahedron() {
  Expect e;
  const FieldScalar t = FieldScalar::tau();
  const auto ico = pseudoicosahedron(t);
  const auto mirror_set = scaled_set(pm_cyclic(1, t), t);
  e.that(mirror(ico).vertices == mirror_set, "mirror of the icosahedron is not tau (±1, ±tau, 0) cyclic");
  const FieldScalar s = FieldScalar::sigma();
  e.that(scaled_set(pseudoicosahedron_vertices(s), t * t * t) == mirror_set,
         "tau^3 times the x = sigma set is not the mirror");
  std::vector<Quaternion> turned;
  for (const auto& v : ico.vertices) turned.push_back(chirality_witness().apply(v));
  e.that(canonical_set(turned) == mirror_set, "the rotation witness does not map the icosahedron to its mirror");
  return e.result();
}

std::string check_equal_edges_golden_only() {
  Expect e;
  e.that(edge_length_profile(FieldScalar::tau()).equal, "tau does not equalize the edges");
  e.that(edge_length_profile(FieldScalar::sigma()).equal, "sigma does not equalize the edges");
  for (long n = -12; n <= 12; ++n) {
    for (long d = 1; d <= 6; ++d) {
      e.that(!edge_length_profile(q(n, d)).equal, "rational x = " + q(n, d).to_string() + " equalizes");
    }
  }
  return e.result();
}

std::string check_fibonacci_table() {
  Expect e;
  const auto fam = fibonacci_family(4);
  const long table[4][2] = {{2, 1}, {3, 2}, {5, 3}, {8, 5}};
  const Rational xs[4] = {1, 2, Rational(3, 2), Rational(5, 3)};
  for (std::size_t i = 0; i < 4; ++i) {
    e.that(fam[i].x == xs[i], "x_" + std::to_string(i + 1) + " is not F(n+1)/F(n)");
    e.that(fam[i].poly.vertices == pm_cyclic(table[i][0], table[i][1]),
           "n = " + std::to_string(i + 1) + " has the wrong vertex table");
  }
  return e.result();
}

std::string check_edge_profile() {
  Expect e;
  const auto p = edge_length_profile(1);
  e.that(p.equilateral_edge2 == FieldScalar(3) && p.isosceles_base2 == FieldScalar(2), "x = 1 profile is not (3, 2)");
  e.that(p.isosceles_base2 / p.equilateral_edge2 == q(2, 3), "base/leg ratio squared is not 2/3");
  const auto lengths = edge_lengths_squared(pseudoicosahedron(1));
  e.that(lengths == std::vector<FieldScalar>{4, 6}, "x = 1 squared edges are not {4, 6}");
  return e.result();
}

std::string check_pentagon_coplanarity() {
  Expect e;
  std::vector<FieldScalar> xs = {FieldScalar::tau(), FieldScalar::sigma(), -FieldScalar::tau()};
  for (long k = 1; k <= 10; ++k) xs.push_back(q(7 * k - 3, 2 * k + 1) * (k % 2 ? 1 : -1));
  for (const auto& x : xs) {
    const auto n = pyritohedron_normals(x);
    e.that(n.residue.is_zero(), "residue nonzero at x = " + x.to_string());
    for (const auto& r : n.coplanarity) e.that(r.is_zero(), "pentagon not planar at x = " + x.to_string());
  }
  return e.result();
}

std::string check_dual_proportional() {
  Expect e;
  for (const FieldScalar& x : {FieldScalar(1), q(3, 2), q(5, 3), FieldScalar::tau(), q(1, 3)}) {
    const auto dual = polar_dual(pseudoicosahedron(x));
    const auto r = uniform_ratio(dual.vertices, pyritohedron(h_from_x(x)).vertices);
    e.that(r.has_value(), "dual of x = " + x.to_string() + " is not a scaled pyritohedron");
  }
  return e.result();
}

std::string check_pyritohedron_at_half() {
  Expect e;
  const auto p = pyritohedron(q(1, 2), 8);
  e.that(p.vertices == unite(pm_cyclic(3, 6), cube(4)), "h = 1/2, a1 = 8 is not (±3, ±6, 0) cyclic with 4 (±1, ±1, ±1)");
  e.that(face_census(p) == std::map<std::size_t, std::size_t>{{5, 12}}, "not 12 pentagons");
  return e.result();
}

std::string check_dodecahedron_at_tau() {
  Expect e;
  const FieldScalar t = FieldScalar::tau(), s = FieldScalar::sigma();
  const auto dodeca = unite(scaled_set(pm_cyclic(s, t), q(1, 2)), cube(q(1, 2)));
  const auto dual = polar_dual(pseudoicosahedron(t));
  e.that(uniform_ratio(dual.vertices, dodeca).has_value(), "dual of the icosahedron is not a scaled dodecahedron");
  e.that(uniform_ratio(pyritohedron(h_from_x(t)).vertices, dodeca).has_value(),
         "pyritohedron at h = 1/tau is not a scaled dodecahedron");
  e.that(classify(dual) == SolidName::dodecahedron, "dual of the icosahedron does not classify as a dodecahedron");
  return e.result();
}

std::string check_dual_involution() {
  Expect e;
  for (const auto& p : {pseudoicosahedron(1), pseudoicosahedron(FieldScalar::tau()),
                        hull_faces(octahedron(1)), pyritohedron(q(1, 2))}) {
    e.that(polar_dual(polar_dual(p)).vertices == p.vertices, "polar dual is not an involution");
  }
  e.that(polar_dual(hull_faces(octahedron(1))).vertices == cube(1), "octahedron dual is not the cube");
  return e.result();
}

std::string check_lattice_span() {
  Expect e;
  for (LatticeKind kind : {LatticeKind::fcc, LatticeKind::bcc, LatticeKind::sc}) {
    const auto basis = lattice_basis(kind);
    Matrix<Rational> b(3, std::vector<Rational>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) b[j][i] = basis[i][j];
    }
    const auto binv = invert(b);
    for (int c0 = -3; c0 <= 3; ++c0) {
      for (int c1 = -3; c1 <= 3; ++c1) {
        for (int c2 = -3; c2 <= 3; ++c2) {
          LatticePoint p(3);
          for (std::size_t j = 0; j < 3; ++j) p[j] = c0 * basis[0][j] + c1 * basis[1][j] + c2 * basis[2][j];
          e.that(member(kind, p), lattice_label(kind) + " rejects " + to_string(p));
          // Half-integer grid point with the same index: member iff integral coefficients.
          LatticePoint g = {Rational(c0, 2), Rational(c1, 2), Rational(c2, 2)};
          for (auto& c : g) c.canonicalize();
          bool integral = true;
          for (std::size_t i = 0; i < 3; ++i) {
            Rational coef = binv[i][0] * g[0] + binv[i][1] * g[1] + binv[i][2] * g[2];
            coef.canonicalize();
            integral = integral && coef.get_den() == 1;
          }
          e.that(member(kind, g) == integral, lattice_label(kind) + " disagrees with its span at " + to_string(g));
        }
      }
    }
  }
  return e.result();
}

std::string check_wigner_seitz_sets() {
  Expect e;
  auto quats = [](const std::vector<LatticePoint>& pts) {
    std::vector<Quaternion> out;
    for (const auto& p : pts) out.push_back(to_quaternion(p));
    return canonical_set(std::move(out));
  };
  const auto& d3 = cached_diagram(DiagramName::D3);
  const auto fcc = unite(unite(orbit(d3, {1, 0, 0}).points, orbit(d3, {0, 1, 0}).points), orbit(d3, {0, 0, 1}).points);
  e.that(quats(wigner_seitz(LatticeKind::fcc).vertices) == unite(octahedron(1), cube(q(1, 2))) &&
             quats(wigner_seitz(LatticeKind::fcc).vertices) == fcc,
         "fcc cell differs from the (100) u (010) u (001) orbits");
  e.that(quats(wigner_seitz(LatticeKind::bcc).vertices) == scaled_set(unite(pm_cyclic(2, 1), pm_cyclic(1, 2)), q(1, 4)),
         "bcc cell is not 1/4 (±2, ±1, 0) permuted");
  e.that(quats(wigner_seitz(LatticeKind::sc).vertices) == cube(q(1, 2)), "sc cell is not 1/2 (±1, ±1, ±1)");
  e.that(classify(wigner_seitz(LatticeKind::fcc).polyhedron) == SolidName::rhombic_dodecahedron,
         "fcc cell is not a rhombic dodecahedron");
  e.that(classify(wigner_seitz(LatticeKind::bcc).polyhedron) == SolidName::truncated_octahedron,
         "bcc cell is not a truncated octahedron");
  return e.result();
}

std::string check_voronoi_oracle() {
  Expect e;
  for (LatticeKind kind : {LatticeKind::fcc, LatticeKind::bcc, LatticeKind::sc, LatticeKind::hex_A2,
                           LatticeKind::square_B2}) {
    for (const auto& v : wigner_seitz(kind).vertices) {
      const auto r = voronoi_vertex_check(kind, v);
      e.that(r.ok, lattice_label(kind) + " vertex " + to_string(v) + ": " + r.detail);
    }
  }
  return e.result();
}

std::string check_degenerate_limits() {
  Expect e;
  const auto oct = pseudoicosahedron(0);
  e.that(oct.degenerate && classify(oct) == SolidName::octahedron, "x = 0 is not a flagged octahedron");
  const auto rd = pyritohedron(1);
  e.that(rd.degenerate && rd.num_vertices() == 14 && classify(rd) == SolidName::rhombic_dodecahedron,
         "h = 1 is not a flagged rhombic dodecahedron");
  return e.result();
}

std::string check_bcc_cell_from_mirror_pair() {
  Expect e;
  const auto p = pseudoicosahedron(1);
  const auto pair = unite(p.vertices, mirror(p).vertices);
  e.that(pair == unite(pm_cyclic(2, 1), pm_cyclic(1, 2)), "x = 1 with its mirror is not all permutations of (±2, ±1, 0)");
  std::vector<Quaternion> cell;
  for (const auto& v : wigner_seitz(LatticeKind::bcc).vertices) cell.push_back(to_quaternion(v));
  e.that(pair == scaled_set(cell, 4), "the mirror pair is not 4 x the bcc cell");
  return e.result();
}

std::string check_icosidodecahedron_at_tau() {
  Expect e;
  const auto p = pseudoicosidodecahedron(FieldScalar::tau());
  e.that(classify(p) == SolidName::icosidodecahedron, "x = tau is not an icosidodecahedron");
  e.that(edge_lengths_squared(p).size() == 1, "x = tau edges are not all equal");
  e.that(p.vertices == edge_midpoints(pseudoicosahedron(FieldScalar::tau(), 2)),
         "x = tau vertices are not the edge midpoints");
  return e.result();
}

std::string check_hull_integrity() {
  Expect e;
  std::vector<std::pair<std::string, Polyhedron>> solids = {
      {"x=1", pseudoicosahedron(1)},
      {"x=3/2", pseudoicosahedron(q(3, 2))},
      {"x=tau", pseudoicosahedron(FieldScalar::tau())},
      {"x=-tau", pseudoicosahedron(-FieldScalar::tau())},
      {"h=1/2", pyritohedron(q(1, 2))},
      {"h=1/5", pyritohedron(q(1, 5))},
      {"icosido x=3/2", pseudoicosidodecahedron(q(3, 2))},
      {"icosido x=tau", pseudoicosidodecahedron(FieldScalar::tau())},
      {"fcc", wigner_seitz(LatticeKind::fcc).polyhedron},
      {"bcc", wigner_seitz(LatticeKind::bcc).polyhedron},
      {"sc", wigner_seitz(LatticeKind::sc).polyhedron},
  };
  for (const auto& [name, p] : solids) e.that(faces_consistent(p), name + " fails the hull checks");
  for (const FieldScalar& x : {FieldScalar(1), q(3, 2), q(5, 3), FieldScalar(2), -FieldScalar::tau()}) {
    const auto c = triangle_census(pseudoicosahedron(x));
    e.that(c.equilateral == 8 && c.isosceles == 12 && c.scalene == 0,
           "x = " + x.to_string() + " is not 8 equilateral + 12 isosceles");
  }
  for (const FieldScalar& h : {q(1, 2), q(1, 5), q(2, 3)}) {
    e.that(face_census(pyritohedron(h)) == std::map<std::size_t, std::size_t>{{5, 12}},
           "h = " + h.to_string() + " is not 12 pentagons");
  }
  return e.result();
}

std::string check_fibonacci_convergence() {
  Expect e;
  const FieldScalar t = FieldScalar::tau();
  const auto fam = fibonacci_family(10, A1Policy::unit);
  FieldScalar prev_gap;
  int prev_sign = 0;
  for (const auto& m : fam) {
    const FieldScalar d = FieldScalar(m.x) - t;
    const int s = field_sign(d);
    const FieldScalar gap = abs(d);
    if (m.n > 1) {
      e.that(s == -prev_sign, "sign does not alternate at n = " + std::to_string(m.n));
      e.that(real_less(gap, prev_gap), "|x_n - tau| does not decrease at n = " + std::to_string(m.n));
    }
    prev_sign = s;
    prev_gap = gap;
  }
  return e.result();
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check> checks = {
      {"group_orders", 1, check_group_orders},
      {"d3_orbit_tables", 2, check_d3_orbit_tables},
      {"eq29_truncated_octahedron", 2, check_truncated_octahedron_orbit},
      {"b3_cube_orbit", 2, check_b3_cube_orbit},
      {"b3_110_equals_d3_111", 2, check_b3_110_equals_d3_111},
      {"d3_cartan", 3, check_d3_cartan},
      {"rank2_metrics", 3, check_rank2_metrics},
      {"fundamental_weights", 3, check_weights},
      {"coxeter_relations", 4, check_coxeter_relations},
      {"abab_relations", 4, check_abab_relations},
      {"diagonal_permutations", 4, check_diagonal_permutations},
      {"tetrahedron_permutations", 4, check_tetrahedron_permutations},
      {"pseudoicosahedron_at_one", 5, check_pseudoicosahedron_at_one},
      {"icosahedron_at_tau", 5, check_icosahedron_at_tau},
      {"mirror_icosahedron", 5, check_mirror_icosahedron},
      {"equal_edges_golden_only", 5, check_equal_edges_golden_only},
      {"eq54_fibonacci_table", 5, check_fibonacci_table},
      {"edge_profile", 5, check_edge_profile},
      {"pentagon_coplanarity", 6, check_pentagon_coplanarity},
      {"dual_proportional", 6, check_dual_proportional},
      {"pyritohedron_at_half", 6, check_pyritohedron_at_half},
      {"dodecahedron_at_tau", 6, check_dodecahedron_at_tau},
      {"dual_involution", 6, check_dual_involution},
      {"lattice_span", 7, check_lattice_span},
      {"wigner_seitz_sets", 7, check_wigner_seitz_sets},
      {"voronoi_oracle", 7, check_voronoi_oracle},
      {"degenerate_limits", 8, check_degenerate_limits},
      {"bcc_cell_from_mirror_pair", 8, check_bcc_cell_from_mirror_pair},
      {"icosidodecahedron_at_tau", 8, check_icosidodecahedron_at_tau},
      {"hull_integrity", 9, check_hull_integrity},
      {"fibonacci_convergence", 10, check_fibonacci_convergence},
  };
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& only) {
  std::vector<CheckResult> out;
  for (const auto& c : check_registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
    CheckResult r{c.name, c.criterion, false, ""};
    try {
      r.detail = c.run();
      r.pass = r.detail.empty();
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pyrito
