#include <benchmark/benchmark.h>

#include "pyrito/coxeter.hpp"
#include "pyrito/lattice.hpp"
#include "pyrito/polyhedra.hpp"
#include "pyrito/qgroups.hpp"

namespace {

using namespace pyrito;

void BM_FieldMulInv(benchmark::State& state) {
  const FieldScalar a = FieldScalar::tau() + FieldScalar(Rational(3, 7));
  const FieldScalar b = FieldScalar::parse("2 - 1/3*r2 + 5/4*r10");
  for (auto _ : state) benchmark::DoNotOptimize(a * b / (a + b));
}
BENCHMARK(BM_FieldMulInv);

void BM_FieldSign(benchmark::State& state) {
  // 233/144 sits close to tau, so the interval refinement has real work to do.
  const FieldScalar d = FieldScalar(Rational(233, 144)) - FieldScalar::tau();
  for (auto _ : state) benchmark::DoNotOptimize(field_sign(d));
}
BENCHMARK(BM_FieldSign);

void BM_IcosahedralClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binary_icosahedral());
}
BENCHMARK(BM_IcosahedralClosure)->Unit(benchmark::kMillisecond);

void BM_OctahedralPointGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(point_group(GroupName::octahedral));
}
BENCHMARK(BM_OctahedralPointGroup)->Unit(benchmark::kMillisecond);

void BM_OrbitD3(benchmark::State& state) {
  const auto& d3 = cached_diagram(DiagramName::D3);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(d3, {1, 1, 1}, Rational(1, 4)));
}
BENCHMARK(BM_OrbitD3)->Unit(benchmark::kMicrosecond);

void BM_HullPseudoicosahedron(benchmark::State& state) {
  const auto pts = pseudoicosahedron_vertices(Rational(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(hull_faces(pts));
}
BENCHMARK(BM_HullPseudoicosahedron)->Unit(benchmark::kMillisecond);

void BM_HullIcosidodecahedron(benchmark::State& state) {
  const auto pts = pseudoicosidodecahedron_vertices(FieldScalar::tau());
  for (auto _ : state) benchmark::DoNotOptimize(hull_faces(pts));
}
BENCHMARK(BM_HullIcosidodecahedron)->Unit(benchmark::kMillisecond);

void BM_PolarDual(benchmark::State& state) {
  const auto p = pseudoicosahedron(FieldScalar::tau());
  for (auto _ : state) benchmark::DoNotOptimize(polar_dual(p));
}
BENCHMARK(BM_PolarDual)->Unit(benchmark::kMillisecond);

void BM_WignerSeitzBcc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wigner_seitz(LatticeKind::bcc));
}
BENCHMARK(BM_WignerSeitzBcc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
