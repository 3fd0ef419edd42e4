#include "pyrito/qgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "pyrito/error.hpp"

namespace pyrito {

namespace {

FieldScalar half() { return Rational(1, 2); }
// 1/√2 = √2/2.
FieldScalar inv_sqrt2() { return {0, Rational(1, 2), 0, 0}; }

Quaternion unit(int i) {
  Quaternion q;
  q[static_cast<std::size_t>(i)] = 1;
  return q;
}

QuaternionSet make_set(std::vector<Quaternion> elements, std::string name) {
  return {canonical_set(std::move(elements)), std::move(name)};
}

std::vector<OrthoElement> bracket(const std::vector<Quaternion>& set, int sign) {
  std::vector<OrthoElement> out;
  out.reserve(set.size());
  for (const auto& p : set) out.emplace_back(p, sign > 0 ? p.conj() : -p.conj());
  return out;
}

std::vector<OrthoElement> canonical_elements(std::vector<OrthoElement> elems) {
  std::sort(elems.begin(), elems.end(), ElementLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

template <typename T>
void append(std::vector<T>& to, const std::vector<T>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Breadth-first closure under right multiplication by the generators.
template <typename T, typename Less, typename Mul>
std::vector<T> close_under(const std::vector<T>& generators, const T& one, std::size_t cap,
                           Mul mul) {
  std::set<T, Less> seen{one};
  std::deque<T> frontier{one};
  while (!frontier.empty()) {
    T x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      T y = mul(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw DomainError("closure exceeds cap of " + std::to_string(cap));
        frontier.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

bool QuaternionSet::contains(const Quaternion& q) const {
  return std::binary_search(elements.begin(), elements.end(), q, CanonicalLess{});
}

QuaternionSet binary_tetrahedral() {
  std::vector<Quaternion> t;
  for (int i = 0; i < 4; ++i) {
    t.push_back(unit(i));
    t.push_back(-unit(i));
  }
  for (int s = 0; s < 16; ++s) {
    Quaternion q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = (s >> i & 1) ? -half() : half();
    t.push_back(q);
  }
  return make_set(std::move(t), "T");
}

QuaternionSet tprime() {
  std::vector<Quaternion> t;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int s = 0; s < 4; ++s) {
        Quaternion q = unit(i) * FieldScalar((s & 1) ? -1 : 1) +
                       unit(j) * FieldScalar((s & 2) ? -1 : 1);
        t.push_back(q * inv_sqrt2());
      }
    }
  }
  return make_set(std::move(t), "T'");
}

QuaternionSet binary_octahedral() {
  std::vector<Quaternion> o = binary_tetrahedral().elements;
  append(o, tprime().elements);
  return make_set(std::move(o), "O");
}

QuaternionSet binary_icosahedral() {
  const Quaternion p = Quaternion::vec(1, FieldScalar::tau(), FieldScalar::sigma()) * half();
  const Quaternion q = Quaternion(1, 1, 1, 1) * half();
  // <p, q> alone closes at order 24; adjoining p to T = <q, e1> gives I.
  QuaternionSet out = closure({p, q, unit(1)}, 120);
  out.name = "I";
  return out;
}

QuaternionSet icosahedral_complement() {
  const QuaternionSet i = binary_icosahedral();
  const QuaternionSet t = binary_tetrahedral();
  std::vector<Quaternion> s;
  std::set_difference(i.elements.begin(), i.elements.end(), t.elements.begin(), t.elements.end(),
                      std::back_inserter(s), CanonicalLess{});
  return {std::move(s), "S"};
}

QuaternionSet closure(const std::vector<Quaternion>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.norm() != FieldScalar(1)) throw DomainError("closure generator is not a unit quaternion");
  }
  auto elems = close_under<Quaternion, CanonicalLess>(
      generators, Quaternion(1), cap, [](const Quaternion& a, const Quaternion& b) { return a * b; });
  return {std::move(elems), ""};
}

std::vector<OrthoElement> closure(const std::vector<OrthoElement>& generators, std::size_t cap) {
  return close_under<OrthoElement, ElementLess>(
      generators, OrthoElement::identity(), cap,
      [](const OrthoElement& a, const OrthoElement& b) { return compose(a, b); });
}

GroupName parse_group_name(std::string_view name) {
  static const std::map<std::string_view, GroupName> names = {
      {"WD3", GroupName::tetrahedral},       {"Td", GroupName::tetrahedral},
      {"WA3", GroupName::tetrahedral},       {"Oh", GroupName::octahedral},
      {"AutD3", GroupName::octahedral},      {"WB3", GroupName::octahedral},
      {"O", GroupName::chiral_octahedral},   {"Th", GroupName::pyritohedral},
      {"A4", GroupName::chiral_tetrahedral}, {"WH3", GroupName::icosahedral},
      {"Ih", GroupName::icosahedral},        {"A5", GroupName::chiral_icosahedral},
      {"WA2", GroupName::weyl_a2},           {"D6", GroupName::dihedral_12},
      {"WB2", GroupName::weyl_b2},
  };
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown group name '" + std::string(name) + "'");
  return it->second;
}

std::string group_label(GroupName name) {
  switch (name) {
    case GroupName::tetrahedral: return "W(D3)";
    case GroupName::octahedral: return "Oh";
    case GroupName::chiral_octahedral: return "O";
    case GroupName::pyritohedral: return "Th";
    case GroupName::chiral_tetrahedral: return "A4";
    case GroupName::icosahedral: return "W(H3)";
    case GroupName::chiral_icosahedral: return "A5";
    case GroupName::weyl_a2: return "W(A2)";
    case GroupName::dihedral_12: return "D6";
    case GroupName::weyl_b2: return "W(B2)";
  }
  return "?";
}

std::size_t expected_order(GroupName name) {
  switch (name) {
    case GroupName::tetrahedral: return 24;
    case GroupName::octahedral: return 48;
    case GroupName::chiral_octahedral: return 24;
    case GroupName::pyritohedral: return 24;
    case GroupName::chiral_tetrahedral: return 12;
    case GroupName::icosahedral: return 120;
    case GroupName::chiral_icosahedral: return 60;
    case GroupName::weyl_a2: return 6;
    case GroupName::dihedral_12: return 12;
    case GroupName::weyl_b2: return 8;
  }
  return 0;
}

bool PointGroup::contains(const OrthoElement& g) const {
  return std::binary_search(elements.begin(), elements.end(), g, ElementLess{});
}

PointGroup point_group(GroupName name) {
  const auto t = binary_tetrahedral().elements;
  const auto tp = tprime().elements;
  std::vector<OrthoElement> e;
  switch (name) {
    case GroupName::tetrahedral:
      e = bracket(t, +1);
      append(e, bracket(tp, -1));
      break;
    case GroupName::octahedral:
      for (int s : {+1, -1}) {
        append(e, bracket(t, s));
        append(e, bracket(tp, s));
      }
      break;
    case GroupName::chiral_octahedral:
      e = bracket(t, +1);
      append(e, bracket(tp, +1));
      break;
    case GroupName::pyritohedral:
      e = bracket(t, +1);
      append(e, bracket(t, -1));
      break;
    case GroupName::chiral_tetrahedral:
      e = bracket(t, +1);
      break;
    case GroupName::icosahedral: {
      const auto i = binary_icosahedral().elements;
      e = bracket(i, +1);
      append(e, bracket(i, -1));
      break;
    }
    case GroupName::chiral_icosahedral:
      e = bracket(binary_icosahedral().elements, +1);
      break;
    case GroupName::weyl_a2:
      e = closure({reflection_from_root(Quaternion::e1() - Quaternion::e2()),
                   reflection_from_root(Quaternion::e2() - Quaternion::e3())},
                  expected_order(name));
      break;
    case GroupName::dihedral_12: {
      // Diagram symmetry α1 <-> α2 of the embedded A2: v -> -(v3, v2, v1).
      const OrthoElement gamma =
          compose(OrthoElement::central_inversion(),
                  reflection_from_root(Quaternion::e1() - Quaternion::e3()));
      e = closure({reflection_from_root(Quaternion::e1() - Quaternion::e2()),
                   reflection_from_root(Quaternion::e2() - Quaternion::e3()), gamma},
                  expected_order(name));
      break;
    }
    case GroupName::weyl_b2:
      e = closure({reflection_from_root(Quaternion::e1() - Quaternion::e2()),
                   reflection_from_root(Quaternion::e2())},
                  expected_order(name));
      break;
  }
  return {name, canonical_elements(std::move(e))};
}

const PointGroup& cached_point_group(GroupName name) {
  static std::mutex mu;
  static std::map<GroupName, PointGroup> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, point_group(name)).first;
  return it->second;
}

const std::array<Quaternion, 4>& tetrahedron_vertices() {
  static const std::array<Quaternion, 4> v = {
      Quaternion::vec(half(), half(), half()),     // A
      Quaternion::vec(-half(), -half(), half()),   // B
      Quaternion::vec(half(), -half(), -half()),   // C
      Quaternion::vec(-half(), half(), -half())};  // D
  return v;
}

const std::array<Quaternion, 4>& dual_tetrahedron_vertices() {
  static const std::array<Quaternion, 4> v = {
      Quaternion::vec(half(), half(), -half()),    // A'
      Quaternion::vec(-half(), -half(), -half()),  // B'
      Quaternion::vec(half(), -half(), half()),    // C'
      Quaternion::vec(-half(), half(), half())};   // D'
  return v;
}

namespace {

void require_octahedral(const OrthoElement& g) {
  if (!cached_point_group(GroupName::octahedral).contains(g)) {
    throw DomainError("element is not in O_h: " + g.to_string());
  }
}

int index_in(const std::array<Quaternion, 4>& pts, const Quaternion& x) {
  for (int i = 0; i < 4; ++i) {
    if (pts[static_cast<std::size_t>(i)] == x) return i;
  }
  return -1;
}

}  // namespace

TetraAction tetrahedron_permutation(const OrthoElement& g) {
  require_octahedral(g);
  const auto& abcd = tetrahedron_vertices();
  Perm4 perm{};
  for (std::size_t i = 0; i < 4; ++i) {
    const int j = index_in(abcd, g.apply(abcd[i]));
    if (j < 0) return SwapsTetrahedra{};
    perm[i] = j;
  }
  return perm;
}

Perm4 diagonal_permutation(const OrthoElement& g) {
  require_octahedral(g);
  // Diagonal k joins ends[k] and -ends[k]: AB', CD', DC', BA'.
  const auto& v = tetrahedron_vertices();
  const std::array<Quaternion, 4> ends = {v[0], v[2], v[3], v[1]};
  Perm4 perm{};
  for (std::size_t k = 0; k < 4; ++k) {
    const Quaternion image = g.apply(ends[k]);
    int j = index_in(ends, image);
    if (j < 0) j = index_in(ends, -image);
    perm[k] = j;
  }
  return perm;
}

std::string cycle_notation(const Perm4& perm, const std::array<std::string, 4>& labels) {
  const bool compact = std::all_of(labels.begin(), labels.end(),
                                   [](const std::string& s) { return s.size() == 1; });
  std::string out;
  std::array<bool, 4> done{};
  for (int start = 0; start < 4; ++start) {
    if (done[static_cast<std::size_t>(start)] || perm[static_cast<std::size_t>(start)] == start) {
      continue;
    }
    out += "(";
    int i = start;
    bool first = true;
    while (!done[static_cast<std::size_t>(i)]) {
      done[static_cast<std::size_t>(i)] = true;
      if (!first && !compact) out += " ";
      out += labels[static_cast<std::size_t>(i)];
      first = false;
      i = perm[static_cast<std::size_t>(i)];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace pyrito
