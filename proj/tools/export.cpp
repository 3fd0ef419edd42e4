#include "export.hpp"

#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "pyrito/error.hpp"

namespace pyrito {

namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kMeshDigits, v);
  return buf;
}

void require_faces(const Polyhedron& poly) {
  if (!poly.has_faces()) {
    throw DomainError("polyhedron has no faces; compute the hull before exporting a mesh");
  }
}

}  // namespace

int json_digits() {
  const char* env = std::getenv("PYRITO_PRECISION");
  if (env == nullptr || *env == '\0') return kJsonDigits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0 || v > 10000) {
    throw DomainError("PYRITO_PRECISION must be a positive integer");
  }
  return static_cast<int>(v);
}

ExportRecord make_record(const Polyhedron& poly, std::string source) {
  ExportRecord r;
  r.source = std::move(source);
  r.vertices = poly.vertices;
  r.faces = poly.faces;
  r.solid = poly.has_faces() ? solid_label(classify(poly)) : "unknown";
  r.degenerate = poly.degenerate;
  r.note = poly.note;
  r.num_edges = poly.num_edges();
  return r;
}

ExportRecord make_record(const std::vector<Quaternion>& points, std::string source) {
  ExportRecord r;
  r.source = std::move(source);
  r.vertices = canonical_set(points);
  r.solid = "unknown";
  return r;
}

std::string write_off(const Polyhedron& poly) {
  require_faces(poly);
  std::ostringstream out;
  out << "OFF\n" << poly.num_vertices() << ' ' << poly.num_faces() << ' ' << poly.num_edges() << '\n';
  for (const auto& v : poly.vertices) {
    out << format_double(v[1].to_double()) << ' ' << format_double(v[2].to_double()) << ' '
        << format_double(v[3].to_double()) << '\n';
  }
  for (const auto& f : poly.faces) {
    out << f.size();
    for (std::size_t i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

std::string write_obj(const Polyhedron& poly) {
  require_faces(poly);
  std::ostringstream out;
  for (const auto& v : poly.vertices) {
    out << "v " << format_double(v[1].to_double()) << ' ' << format_double(v[2].to_double()) << ' '
        << format_double(v[3].to_double()) << '\n';
  }
  for (const auto& f : poly.faces) {
    out << 'f';
    for (std::size_t i : f) out << ' ' << i + 1;
    out << '\n';
  }
  return out.str();
}

std::string write_json(const ExportRecord& record, int digits) {
  ordered_json j;
  j["source"] = record.source;
  j["solid"] = record.solid;
  j["degenerate"] = record.degenerate;
  if (!record.note.empty()) j["note"] = record.note;
  j["counts"] = {{"V", record.vertices.size()}, {"E", record.num_edges}, {"F", record.faces.size()}};
  ordered_json verts = ordered_json::array();
  for (const auto& v : record.vertices) {
    ordered_json exact = ordered_json::array(), decimal = ordered_json::array();
    for (std::size_t i = 1; i < 4; ++i) {
      exact.push_back(v[i].to_string());
      decimal.push_back(v[i].to_decimal(digits));
    }
    verts.push_back({{"exact", exact}, {"decimal", decimal}});
  }
  j["vertices"] = std::move(verts);
  j["faces"] = record.faces;
  return j.dump(2) + "\n";
}

ExportRecord read_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    ExportRecord r;
    r.source = j.value("source", "");
    r.solid = j.value("solid", "unknown");
    r.degenerate = j.value("degenerate", false);
    r.note = j.value("note", "");
    for (const auto& v : j.at("vertices")) {
      const auto& exact = v.at("exact");
      if (exact.size() != 3) throw ParseError("each vertex needs three exact coordinates");
      r.vertices.push_back(Quaternion::vec(FieldScalar::parse(exact[0].get<std::string>()),
                                           FieldScalar::parse(exact[1].get<std::string>()),
                                           FieldScalar::parse(exact[2].get<std::string>())));
    }
    if (j.contains("faces")) r.faces = j.at("faces").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& f : r.faces) {
      for (std::size_t i : f) {
        if (i >= r.vertices.size()) throw ParseError("face index out of range");
      }
    }
    if (j.contains("counts")) r.num_edges = j.at("counts").value("E", std::size_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
}

Polyhedron record_polyhedron(const ExportRecord& record) { return hull_faces(record.vertices); }

}  // namespace pyrito
