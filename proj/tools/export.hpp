#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pyrito/polyhedron.hpp"

namespace pyrito {

inline constexpr int kJsonDigits = 50;
inline constexpr int kMeshDigits = 17;

// JSON decimal digits: PYRITO_PRECISION if set to a positive integer, else 50.
int json_digits();

struct ExportRecord {
  std::string source;
  std::vector<Quaternion> vertices;
  std::vector<std::vector<std::size_t>> faces;
  std::string solid;
  bool degenerate = false;
  std::string note;
  std::size_t num_edges = 0;
};

ExportRecord make_record(const Polyhedron& poly, std::string source);
// Point sets without a hull (faces empty, solid "unknown").
ExportRecord make_record(const std::vector<Quaternion>& points, std::string source);

// Both throw DomainError for a polyhedron without faces.
std::string write_off(const Polyhedron& poly);
std::string write_obj(const Polyhedron& poly);

// {"source", "solid", "degenerate", "note", "counts": {V, E, F},
//  "vertices": [{"exact": [x, y, z], "decimal": [x, y, z]}], "faces"}
std::string write_json(const ExportRecord& record, int digits = kJsonDigits);
// Reads write_json output back. Throws ParseError.
ExportRecord read_json(const std::string& text);
// Polyhedron with the record's vertices, faces recomputed by the hull.
Polyhedron record_polyhedron(const ExportRecord& record);

}  // namespace pyrito
