#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pyrito/quaternion.hpp"
#include "pyrito/transform.hpp"

namespace pyrito {

// A finite set of unit quaternions in canonical (lexicographic) order.
struct QuaternionSet {
  std::vector<Quaternion> elements;
  std::string name;

  std::size_t size() const { return elements.size(); }
  bool contains(const Quaternion& q) const;
};

// T = {±1, ±e_i, (±1±e1±e2±e3)/2}, order 24.
QuaternionSet binary_tetrahedral();
// T' = {(±a ± b)/√2 : a ≠ b in {1, e1, e2, e3}}, 24 elements, not a group.
QuaternionSet tprime();
// O = T ∪ T', order 48.
QuaternionSet binary_octahedral();
// I = T ∪ S, the closure of p = (e1 + τe2 + σe3)/2 together with
// T = <q, e1>, q = (1+e1+e2+e3)/2; order 120. p and q alone generate a
// group of order 24.
QuaternionSet binary_icosahedral();
// I \ T: the 96 quaternions completing T to the binary icosahedral group.
QuaternionSet icosahedral_complement();

// Least multiplicatively closed set containing the generators and 1.
// Throws DomainError if the set grows beyond `cap` or a generator is not unit.
QuaternionSet closure(const std::vector<Quaternion>& generators, std::size_t cap);
std::vector<OrthoElement> closure(const std::vector<OrthoElement>& generators, std::size_t cap);

enum class GroupName {
  tetrahedral,        // W(D3) ≅ W(A3) ≅ T_d, order 24
  octahedral,         // O_h ≅ Aut(D3) ≅ W(B3), order 48
  chiral_octahedral,  // O, order 24
  pyritohedral,       // T_h, order 24
  chiral_tetrahedral, // A4 = [T, T̄], order 12
  icosahedral,        // W(H3), order 120
  chiral_icosahedral, // A5 = [I, Ī], order 60
  weyl_a2,            // W(A2), order 6
  dihedral_12,        // D6 = W(A2) extended by the diagram symmetry, order 12
  weyl_b2,            // W(B2), order 8
};

// Accepts the CLI spellings: WD3 Td WA3 | Oh AutD3 WB3 | O | Th | A4 | WH3 Ih |
// A5 | WA2 | D6 | WB2. Throws DomainError for anything else.
GroupName parse_group_name(std::string_view name);
std::string group_label(GroupName name);
std::size_t expected_order(GroupName name);

struct PointGroup {
  GroupName name;
  std::vector<OrthoElement> elements;  // canonical order

  std::size_t size() const { return elements.size(); }
  bool contains(const OrthoElement& g) const;
};

// Built from the quaternion sets by the bracket patterns
//   W(D3) = [T, T̄] ∪ [T', -T̄'],  O_h = [T, ±T̄] ∪ [T', ±T̄'],
//   O = [T, T̄] ∪ [T', T̄'],  T_h = [T, T̄] ∪ [T, -T̄],  W(H3) = [I, ±Ī].
// The rank-2 groups act on the planes spanned by their embedded roots
// (A2: e1-e2, e2-e3; B2: e1-e2, e2).
PointGroup point_group(GroupName name);
const PointGroup& cached_point_group(GroupName name);

// Images of A, B, C, D (indices 0..3) under an element of O_h.
using Perm4 = std::array<int, 4>;
struct SwapsTetrahedra {};
using TetraAction = std::variant<Perm4, SwapsTetrahedra>;

// Cube vertices A..D and A'..D' (half-integer points of the unit cube).
const std::array<Quaternion, 4>& tetrahedron_vertices();
const std::array<Quaternion, 4>& dual_tetrahedron_vertices();

// Throws DomainError if g is not in O_h.
TetraAction tetrahedron_permutation(const OrthoElement& g);
// Induced permutation of the diagonals (AB', CD', DC', BA'), indices 0..3.
Perm4 diagonal_permutation(const OrthoElement& g);

// Cycle notation over the given four labels, e.g. "(ADBC)"; "()" for identity.
std::string cycle_notation(const Perm4& perm, const std::array<std::string, 4>& labels);

}  // namespace pyrito
