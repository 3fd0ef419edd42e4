#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "export.hpp"
#include "pyrito/error.hpp"
#include "pyrito/polyhedra.hpp"
#include "support.hpp"

using namespace pyrito;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// |decimal - exact| evaluated at 1024 bits.
double decimal_error(const std::string& decimal, const FieldScalar& x) {
  mpfr_t d, acc, term, root;
  mpfr_inits2(1024, d, acc, term, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_str(d, decimal.c_str(), 10, MPFR_RNDN);
  mpfr_set_q(acc, x.a().get_mpq_t(), MPFR_RNDN);
  const std::pair<const Rational*, unsigned> parts[] = {{&x.b(), 2}, {&x.c(), 5}, {&x.d(), 10}};
  for (const auto& [coef, radicand] : parts) {
    mpfr_sqrt_ui(root, radicand, MPFR_RNDN);
    mpfr_mul_q(term, root, coef->get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  mpfr_sub(d, d, acc, MPFR_RNDN);
  const double e = std::fabs(mpfr_get_d(d, MPFR_RNDN));
  mpfr_clears(d, acc, term, root, static_cast<mpfr_ptr>(nullptr));
  return e;
}

}  // namespace

TEST(Export, OffCounts) {
  const auto ico = pseudoicosahedron(FieldScalar::tau());
  const auto off = lines(write_off(ico));
  ASSERT_GE(off.size(), 2u);
  EXPECT_EQ(off[0], "OFF");
  EXPECT_EQ(off[1], "12 20 30");
  EXPECT_EQ(off.size(), 2u + 12u + 20u);
  EXPECT_EQ(lines(write_off(pyritohedron(Rational(1, 2))))[1], "20 12 30");
  // Face lines start with the vertex count.
  EXPECT_EQ(off.back().substr(0, 2), "3 ");
}

TEST(Export, ObjIsOneBased) {
  const auto obj = lines(write_obj(hull_faces(test::signs(1, 1, 1))));
  std::size_t v = 0, f = 0;
  for (const auto& l : obj) {
    if (l.rfind("v ", 0) == 0) ++v;
    if (l.rfind("f ", 0) == 0) {
      ++f;
      std::istringstream in(l.substr(2));
      for (int idx; in >> idx;) {
        EXPECT_GE(idx, 1);
        EXPECT_LE(idx, 8);
      }
    }
  }
  EXPECT_EQ(v, 8u);
  EXPECT_EQ(f, 6u);
}

TEST(Export, FacelessPolyhedronIsRejected) {
  Polyhedron empty;
  empty.vertices = test::signs(1, 1, 1);
  EXPECT_THROW(write_off(empty), DomainError);
  EXPECT_THROW(write_obj(empty), DomainError);
}

TEST(Export, JsonRoundTripIsExact) {
  for (const auto& p : {pseudoicosahedron(FieldScalar::tau()), pyritohedron(Rational(1, 2), 8),
                        pseudoicosidodecahedron(FieldScalar::sigma()), pseudoicosahedron(0)}) {
    const auto rec = make_record(p, "test");
    const auto back = read_json(write_json(rec));
    EXPECT_EQ(back.vertices, rec.vertices);
    EXPECT_EQ(back.faces, rec.faces);
    EXPECT_EQ(back.solid, rec.solid);
    EXPECT_EQ(back.degenerate, rec.degenerate);
    EXPECT_EQ(back.num_edges, rec.num_edges);
    EXPECT_EQ(record_polyhedron(back).faces, p.faces);
  }
}

TEST(Export, JsonExactAndDecimalVertices) {
  const std::string text = write_json(make_record(pseudoicosahedron(FieldScalar::tau()), "ico"));
  EXPECT_NE(text.find("\"3/2 + 1/2*r5\""), std::string::npos);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["solid"], "icosahedron");
  EXPECT_EQ(j["counts"]["F"], 20);
  for (const auto& v : j["vertices"]) {
    for (int i = 0; i < 3; ++i) {
      const auto exact = FieldScalar::parse(v["exact"][i].get<std::string>());
      EXPECT_LT(decimal_error(v["decimal"][i].get<std::string>(), exact), 1e-40);
    }
  }
}

TEST(Export, PointRecords) {
  const auto rec = make_record(test::signs(1, 2, 3), "points");
  EXPECT_TRUE(rec.faces.empty());
  EXPECT_EQ(rec.solid, "unknown");
  EXPECT_EQ(read_json(write_json(rec)).vertices, rec.vertices);
}

TEST(Export, MalformedJson) {
  EXPECT_THROW(read_json("{"), ParseError);
  EXPECT_THROW(read_json("{\"vertices\": [{\"exact\": [\"1\", \"2\"]}]}"), ParseError);
  EXPECT_THROW(read_json("{\"vertices\": [{\"exact\": [\"1\", \"2\", \"zz\"]}]}"), ParseError);
  EXPECT_THROW(read_json("{\"vertices\": [{\"exact\": [\"1\", \"2\", \"3\"]}], \"faces\": [[0, 5, 1]]}"), ParseError);
}

TEST(Export, PrecisionOverride) {
  ::setenv("PYRITO_PRECISION", "12", 1);
  EXPECT_EQ(json_digits(), 12);
  ::setenv("PYRITO_PRECISION", "abc", 1);
  EXPECT_THROW(json_digits(), DomainError);
  ::unsetenv("PYRITO_PRECISION");
  EXPECT_EQ(json_digits(), kJsonDigits);
}
