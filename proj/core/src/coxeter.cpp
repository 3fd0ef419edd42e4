#include "pyrito/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "pyrito/error.hpp"

namespace pyrito {

namespace {

void check_index(const CoxeterDiagram& d, int i) {
  if (i < 1 || i > d.rank) {
    throw DomainError("reflection index " + std::to_string(i) + " out of range for " +
                      diagram_label(d.name));
  }
}

void require_rank3(const CoxeterDiagram& d) {
  if (d.rank != 3) throw DomainError(diagram_label(d.name) + " has no quaternionic roots");
}

Matrix<Rational> gram_of(const std::vector<Quaternion>& roots) {
  Matrix<Rational> g(roots.size(), std::vector<Rational>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const FieldScalar s = scalar_product(roots[i], roots[j]);
      g[i][j] = s.a();
    }
  }
  return g;
}

void fill_derived(CoxeterDiagram& d) {
  const std::size_t n = d.gram.size();
  d.rank = static_cast<int>(n);
  d.cartan.assign(n, std::vector<long>(n));
  Matrix<Rational> c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c[i][j] = 2 * d.gram[i][j] / d.gram[j][j];
      c[i][j].canonicalize();
      d.cartan[i][j] = c[i][j].get_num().get_si();
    }
  }
  d.cartan_inv = invert(c);
  d.metric = d.cartan_inv;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d.metric[i][j] = d.cartan_inv[i][j] * d.gram[j][j] / 2;
  }
  d.weight_coords = d.cartan_inv;
  if (!d.simple_roots.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      Quaternion w;
      for (std::size_t k = 0; k < n; ++k) w += d.simple_roots[k] * FieldScalar(d.cartan_inv[i][k]);
      d.weights.push_back(w);
    }
  }
}

struct RootCoordsLess {
  bool operator()(const RootCoords& x, const RootCoords& y) const { return lex_compare(x, y) < 0; }
};

RootCoords apply_matrix(const Matrix<long>& m, const RootCoords& c) {
  RootCoords out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (m[i][k] != 0) out[k] += c[i] * FieldScalar(m[i][k]);
    }
  }
  return out;
}

Matrix<long> multiply(const Matrix<long>& a, const Matrix<long>& b) {
  const std::size_t n = a.size();
  Matrix<long> out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

bool all_zero(const std::vector<FieldScalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

}  // namespace

DiagramName parse_diagram_name(std::string_view name) {
  if (name == "A2") return DiagramName::A2;
  if (name == "B2") return DiagramName::B2;
  if (name == "D3" || name == "A3") return DiagramName::D3;
  if (name == "B3") return DiagramName::B3;
  throw DomainError("unknown diagram '" + std::string(name) + "'");
}

std::string diagram_label(DiagramName name) {
  switch (name) {
    case DiagramName::A2: return "A2";
    case DiagramName::B2: return "B2";
    case DiagramName::D3: return "D3";
    case DiagramName::B3: return "B3";
  }
  return "?";
}

CoxeterDiagram diagram(DiagramName name) {
  CoxeterDiagram d;
  d.name = name;
  const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
  switch (name) {
    case DiagramName::A2:
      d.gram = {{2, -1}, {-1, 2}};
      d.group_order = 6;
      break;
    case DiagramName::B2:
      d.gram = {{2, -1}, {-1, 1}};
      d.group_order = 8;
      break;
    case DiagramName::D3:
      d.simple_roots = {e1 - e2, e2 - e3, e2 + e3};
      d.gram = gram_of(d.simple_roots);
      d.group_order = 24;
      break;
    case DiagramName::B3:
      d.simple_roots = {e1 - e2, e2 - e3, e3};
      d.gram = gram_of(d.simple_roots);
      d.group_order = 48;
      break;
  }
  fill_derived(d);
  return d;
}

const CoxeterDiagram& cached_diagram(DiagramName name) {
  static std::mutex mu;
  static std::map<DiagramName, CoxeterDiagram> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, diagram(name)).first;
  return it->second;
}

OrthoElement simple_reflection(const CoxeterDiagram& d, int i) {
  require_rank3(d);
  check_index(d, i);
  return reflection_from_root(d.simple_roots[static_cast<std::size_t>(i - 1)]);
}

Matrix<long> simple_reflection_matrix(const CoxeterDiagram& d, int i) {
  check_index(d, i);
  const std::size_t n = static_cast<std::size_t>(d.rank);
  const std::size_t j = static_cast<std::size_t>(i - 1);
  Matrix<long> m(n, std::vector<long>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    m[k][k] = 1;
    m[k][j] -= d.cartan[k][j];
  }
  return m;
}

Quaternion reflect(const CoxeterDiagram& d, int i, const Quaternion& lambda) {
  require_rank3(d);
  check_index(d, i);
  const Quaternion& a = d.simple_roots[static_cast<std::size_t>(i - 1)];
  const FieldScalar k = FieldScalar(2) * scalar_product(lambda, a) / a.norm();
  return lambda - a * k;
}

RootCoords reflect(const CoxeterDiagram& d, int i, const RootCoords& lambda) {
  check_index(d, i);
  if (lambda.size() != static_cast<std::size_t>(d.rank)) throw DomainError("root coordinate rank mismatch");
  const std::size_t j = static_cast<std::size_t>(i - 1);
  RootCoords unit_root(lambda.size());
  unit_root[j] = 1;
  const FieldScalar k = FieldScalar(2) * root_inner(d, lambda, unit_root) / FieldScalar(d.gram[j][j]);
  RootCoords out = lambda;
  out[j] -= k;
  return out;
}

FieldScalar root_inner(const CoxeterDiagram& d, const RootCoords& x, const RootCoords& y) {
  FieldScalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(d.gram[i][j]) != 0) s += x[i] * y[j] * FieldScalar(d.gram[i][j]);
    }
  }
  return s;
}

Quaternion weight_point(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords) {
  require_rank3(d);
  if (coords.size() != 3) throw DomainError("rank-3 diagram needs 3 weight coordinates");
  Quaternion out;
  for (std::size_t i = 0; i < 3; ++i) out += d.weights[i] * coords[i];
  return out;
}

RootCoords weight_root_coords(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords) {
  const std::size_t n = static_cast<std::size_t>(d.rank);
  if (coords.size() != n) throw DomainError("weight coordinate count does not match the rank");
  RootCoords out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) out[k] += coords[i] * FieldScalar(d.weight_coords[i][k]);
  }
  return out;
}

std::vector<OrthoElement> coxeter_group(const CoxeterDiagram& d) {
  require_rank3(d);
  std::vector<OrthoElement> gens;
  for (int i = 1; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));
  return closure(gens, d.group_order);
}

std::vector<Matrix<long>> plane_group(const CoxeterDiagram& d, bool with_diagram_symmetry) {
  std::vector<Matrix<long>> gens;
  for (int i = 1; i <= d.rank; ++i) gens.push_back(simple_reflection_matrix(d, i));
  if (with_diagram_symmetry) {
    if (d.rank != 2) throw DomainError("diagram symmetry is only provided for rank 2");
    gens.push_back({{0, 1}, {1, 0}});
  }
  const std::size_t n = static_cast<std::size_t>(d.rank);
  Matrix<long> one(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) one[i][i] = 1;
  std::set<Matrix<long>> seen{one};
  std::deque<Matrix<long>> frontier{one};
  while (!frontier.empty()) {
    const Matrix<long> x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Matrix<long> y = multiply(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > 4 * d.group_order) throw DomainError("plane group does not close");
        frontier.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Orbit orbit(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords,
            const FieldScalar& scale, const PointGroup* group) {
  const Quaternion lambda = weight_point(d, coords);
  Orbit out{d.name, coords, scale, {}};
  std::vector<Quaternion> pts;
  if (all_zero(coords)) {
    pts.push_back(lambda);
  } else if (group != nullptr) {
    for (const auto& g : group->elements) pts.push_back(g.apply(lambda));
  } else {
    std::set<Quaternion, CanonicalLess> seen{lambda};
    std::deque<Quaternion> frontier{lambda};
    while (!frontier.empty()) {
      const Quaternion x = frontier.front();
      frontier.pop_front();
      for (int i = 1; i <= d.rank; ++i) {
        Quaternion y = reflect(d, i, x);
        if (seen.insert(y).second) frontier.push_back(std::move(y));
      }
    }
    pts.assign(seen.begin(), seen.end());
  }
  out.points = canonical_set(scaled(pts, scale));
  return out;
}

PlaneOrbit plane_orbit(const CoxeterDiagram& d, const std::vector<FieldScalar>& coords,
                       const FieldScalar& scale) {
  const RootCoords lambda = weight_root_coords(d, coords);
  std::set<RootCoords, RootCoordsLess> seen{lambda};
  std::deque<RootCoords> frontier{lambda};
  while (!frontier.empty()) {
    const RootCoords x = frontier.front();
    frontier.pop_front();
    for (int i = 1; i <= d.rank; ++i) {
      RootCoords y = reflect(d, i, x);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  std::set<RootCoords, RootCoordsLess> scaled_points;
  for (RootCoords p : seen) {
    for (auto& c : p) c *= scale;
    scaled_points.insert(std::move(p));
  }
  return {d.name, coords, scale, {scaled_points.begin(), scaled_points.end()}};
}

std::size_t stabilizer_order(const CoxeterDiagram& d, const Quaternion& lambda) {
  const auto group = coxeter_group(d);
  return static_cast<std::size_t>(std::count_if(
      group.begin(), group.end(), [&](const OrthoElement& g) { return g.apply(lambda) == lambda; }));
}

std::vector<Quaternion> root_system(const CoxeterDiagram& d) {
  require_rank3(d);
  std::vector<Quaternion> roots;
  for (const auto& g : coxeter_group(d)) {
    for (const auto& a : d.simple_roots) roots.push_back(g.apply(a));
  }
  return canonical_set(std::move(roots));
}

std::vector<RootCoords> plane_root_system(const CoxeterDiagram& d) {
  std::set<RootCoords, RootCoordsLess> roots;
  for (const auto& m : plane_group(d)) {
    for (int i = 0; i < d.rank; ++i) {
      RootCoords a(static_cast<std::size_t>(d.rank));
      a[static_cast<std::size_t>(i)] = 1;
      roots.insert(apply_matrix(m, a));
    }
  }
  return {roots.begin(), roots.end()};
}

Quaternion highest_root(const CoxeterDiagram& d) {
  require_rank3(d);
  // The root maximizing the height Σ c_i over the positive roots.
  const auto roots = root_system(d);
  const Matrix<Rational> g_inv = invert(d.gram);
  auto height = [&](const Quaternion& r) {
    FieldScalar h;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) {
        h += scalar_product(r, d.simple_roots[k]) * FieldScalar(g_inv[k][i]);
      }
    }
    return h;
  };
  return *std::max_element(roots.begin(), roots.end(), [&](const Quaternion& a, const Quaternion& b) {
    return real_less(height(a), height(b));
  });
}

Quaternion affine_reflect(const Quaternion& alpha, long k, const Quaternion& lambda) {
  if (alpha.is_zero()) throw DomainError("affine reflection root must be nonzero");
  const FieldScalar t =
      FieldScalar(2) * (scalar_product(lambda, alpha) - FieldScalar(k)) / alpha.norm();
  return lambda - alpha * t;
}

A2Embedding orthonormal_embed_A2(const RootCoords& v, int digits) {
  if (v.size() != 2) throw DomainError("A2 embedding needs two root coordinates");
  // α1 = (1/√2, √(3/2)), α2 = (1/√2, -√(3/2)).
  const FieldScalar half = Rational(1, 2);
  A2Embedding out;
  out.x = (v[0] + v[1]) * half * FieldScalar::sqrt2();
  out.y_over_sqrt6 = (v[0] - v[1]) * half;
  out.x_decimal = out.x.to_decimal(digits);
  out.y_decimal = decimal_times_sqrt(out.y_over_sqrt6, 6, digits);
  return out;
}

std::array<FieldScalar, 2> b2_frame_coords(const RootCoords& v) {
  if (v.size() != 2) throw DomainError("B2 frame needs two root coordinates");
  // c1 (l1 - l2) + c2 l2.
  return {v[0], v[1] - v[0]};
}

Matrix<Rational> invert(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  Matrix<Rational> a = m;
  Matrix<Rational> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  for (auto& row : inv) {
    for (auto& x : row) x.canonicalize();
  }
  return inv;
}

int lex_compare(const RootCoords& x, const RootCoords& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int r = lex_compare(x[i], y[i])) return r;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

}  // namespace pyrito
