#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "export.hpp"
#include "pyrito/coxeter.hpp"
#include "pyrito/error.hpp"
#include "pyrito/lattice.hpp"
#include "pyrito/polyhedra.hpp"
#include "pyrito/qgroups.hpp"
#include "verify.hpp"

namespace pyrito::cli {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::vector<FieldScalar> parse_scalars(const std::string& text) {
  std::vector<FieldScalar> out;
  for (const auto& p : split_commas(text)) out.push_back(FieldScalar::parse(p));
  if (out.empty()) throw ParseError("empty coordinate list");
  return out;
}

Rational parse_rational(const std::string& text) {
  const FieldScalar s = FieldScalar::parse(text);
  if (!s.is_rational()) throw DomainError("lattice coordinates must be rational: " + text);
  return s.a();
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "pyrito";
  for (const auto& a : args) s += " " + a;
  return s;
}

struct Output {
  std::string format = "json";
  std::string path;
};

void add_output(CLI::App* cmd, Output& o, bool with_format = true) {
  if (with_format) cmd->add_option("--format", o.format, "off, obj or json")->check(CLI::IsMember({"off", "obj", "json"}));
  cmd->add_option("--out", o.path, "write to this file instead of standard output");
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, std::string source)
      : out_(out), err_(err), source_(std::move(source)) {}

  void emit(const std::string& text, const Output& o) {
    if (o.path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f) throw DomainError("cannot open " + o.path + " for writing");
    f << text;
    if (!f) throw DomainError("failed writing " + o.path);
  }

  void emit_polyhedron(const Polyhedron& poly, const Output& o) {
    if (poly.degenerate) err_ << "note: degenerate result: " << poly.note << '\n';
    if (o.format == "off") {
      emit(write_off(poly), o);
    } else if (o.format == "obj") {
      emit(write_obj(poly), o);
    } else {
      emit(write_json(make_record(poly, source_), json_digits()), o);
    }
  }

  std::ostream& err() { return err_; }
  const std::string& source() const { return source_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::string source_;
};

// ---- group ----

struct GroupArgs {
  std::string name;
  bool order = false, list = false, json = false;
};

void cmd_group(Session& s, const GroupArgs& a) {
  const GroupName name = parse_group_name(a.name);
  const auto& g = cached_point_group(name);
  std::ostringstream text;
  if (a.json) {
    ordered_json j;
    j["group"] = group_label(name);
    j["order"] = g.size();
    if (a.list) {
      ordered_json els = ordered_json::array();
      for (const auto& el : g.elements) els.push_back(el.to_string());
      j["elements"] = std::move(els);
    }
    text << j.dump(2) << '\n';
  } else if (a.list) {
    for (const auto& el : g.elements) text << el.to_string() << '\n';
  } else {
    text << g.size() << '\n';
  }
  s.emit(text.str(), Output{});
}

// ---- orbit ----

struct OrbitArgs {
  std::string diagram, coords, scale = "1", group;
  Output output;
};

void cmd_orbit(Session& s, const OrbitArgs& a) {
  const auto& d = cached_diagram(parse_diagram_name(a.diagram));
  const auto coords = parse_scalars(a.coords);
  const FieldScalar scale = FieldScalar::parse(a.scale);
  if (static_cast<int>(coords.size()) != d.rank) {
    throw DomainError(diagram_label(d.name) + " needs " + std::to_string(d.rank) + " coordinates");
  }
  if (d.rank == 2) {
    if (!a.group.empty()) throw DomainError("--group applies to rank-3 diagrams only");
    if (a.output.format != "json") throw DomainError("rank-2 orbits are planar; only --format json is available");
    const auto orb = plane_orbit(d, coords, scale);
    const int digits = json_digits();
    ordered_json j;
    j["source"] = s.source();
    j["diagram"] = diagram_label(d.name);
    j["count"] = orb.points.size();
    ordered_json pts = ordered_json::array();
    for (const auto& p : orb.points) {
      ordered_json rc = ordered_json::array(), frame = ordered_json::array();
      for (const auto& c : p) rc.push_back(c.to_string());
      if (d.name == DiagramName::A2) {
        const auto emb = orthonormal_embed_A2(p, digits);
        frame = {emb.x_decimal, emb.y_decimal};
      } else {
        for (const auto& c : b2_frame_coords(p)) frame.push_back(c.to_decimal(digits));
      }
      pts.push_back({{"root_coords", rc}, {"decimal", frame}});
    }
    j["points"] = std::move(pts);
    s.emit(j.dump(2) + "\n", a.output);
    return;
  }
  const PointGroup* group = nullptr;
  if (!a.group.empty()) group = &cached_point_group(parse_group_name(a.group));
  const auto orb = orbit(d, coords, scale, group);
  if (a.output.format == "json") {
    // Orbits of fewer than four points (or planar ones) have no hull; the
    // JSON record then carries the points alone.
    try {
      s.emit_polyhedron(hull_faces(orb.points), a.output);
    } catch (const DomainError&) {
      s.err() << "note: orbit has no 3D hull; emitting points only\n";
      s.emit(write_json(make_record(orb.points, s.source()), json_digits()), a.output);
    }
    return;
  }
  s.emit_polyhedron(hull_faces(orb.points), a.output);
}

// ---- lattice ----

struct LatticeArgs {
  std::string kind, convention = "half", point, norm2;
  bool json = false;
  Output output;
};

BccConvention parse_convention(const std::string& c) {
  return c == "doubled" ? BccConvention::doubled : BccConvention::half_integer;
}

LatticePoint parse_point(const std::string& text, LatticeKind kind) {
  LatticePoint p;
  for (const auto& part : split_commas(text)) p.push_back(parse_rational(part));
  if (static_cast<int>(p.size()) != lattice_rank(kind)) {
    throw DomainError(lattice_label(kind) + " points need " + std::to_string(lattice_rank(kind)) + " coordinates");
  }
  return p;
}

std::string point_lines(const std::vector<LatticePoint>& pts, bool json, const std::string& key,
                        ordered_json head) {
  if (!json) {
    std::string out;
    for (const auto& p : pts) out += to_string(p) + "\n";
    return out;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) {
    ordered_json row = ordered_json::array();
    for (const auto& c : p) row.push_back(c.get_str());
    arr.push_back(std::move(row));
  }
  head["count"] = pts.size();
  head[key] = std::move(arr);
  return head.dump(2) + "\n";
}

void cmd_lattice_member(Session& s, const LatticeArgs& a) {
  const LatticeKind kind = parse_lattice_kind(a.kind);
  const bool in = member(kind, parse_point(a.point, kind), parse_convention(a.convention));
  s.emit(in ? "true\n" : "false\n", a.output);
}

void cmd_lattice_shell(Session& s, const LatticeArgs& a) {
  const LatticeKind kind = parse_lattice_kind(a.kind);
  const Rational n2 = parse_rational(a.norm2);
  const auto pts = shell(kind, n2, parse_convention(a.convention));
  s.emit(point_lines(pts, a.json, "points", {{"kind", lattice_label(kind)}, {"norm2", n2.get_str()}}), a.output);
}

void cmd_lattice_basis(Session& s, const LatticeArgs& a) {
  const LatticeKind kind = parse_lattice_kind(a.kind);
  const auto pts = lattice_basis(kind, parse_convention(a.convention));
  s.emit(point_lines(pts, a.json, "basis", {{"kind", lattice_label(kind)}}), a.output);
}

void cmd_lattice_ws(Session& s, const LatticeArgs& a) {
  const LatticeKind kind = parse_lattice_kind(a.kind);
  const auto cell = wigner_seitz(kind, parse_convention(a.convention));
  if (lattice_rank(kind) == 3) {
    s.emit_polyhedron(cell.polyhedron, a.output);
    return;
  }
  if (a.output.format != "json") throw DomainError("rank-2 cells are polygons; only --format json is available");
  s.emit(point_lines(cell.polygon, true, "polygon", {{"source", s.source()}, {"kind", lattice_label(kind)}}),
         a.output);
}

// ---- poly ----

struct PolyArgs {
  std::string x, h, a1 = "1", input;
  Output output;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot read " + path);
  std::ostringstream text;
  text << f.rdbuf();
  return text.str();
}

// ---- fib ----

struct FibArgs {
  int n = 0;
  std::string policy = "clear";
  Output output{"", ""};
};

void cmd_fib(Session& s, const FibArgs& a) {
  if (a.n < 1) throw DomainError("--n must be at least 1");
  const A1Policy policy = a.policy == "unit" ? A1Policy::unit : A1Policy::clear_denominators;
  const auto fam = fibonacci_family(a.n, policy);
  if (a.output.format.empty()) {
    const FieldScalar tau = FieldScalar::tau();
    std::ostringstream text;
    text << "n\tx_n\ta1\tsign(x_n - tau)\tx_n - tau\n";
    for (const auto& m : fam) {
      const FieldScalar d = FieldScalar(m.x) - tau;
      const int sg = field_sign(d);
      text << m.n << '\t' << m.x.get_str() << '\t' << m.a1.get_str() << '\t' << (sg > 0 ? "+" : sg < 0 ? "-" : "0")
           << '\t' << d.to_decimal(20) << '\n';
    }
    s.emit(text.str(), a.output);
    return;
  }
  if (a.output.format == "json") {
    std::string text = "[\n";
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto& m = fam[i];
      text += write_json(make_record(m.poly, s.source() + " [n=" + std::to_string(m.n) + "]"), json_digits());
      text.pop_back();
      text += i + 1 < fam.size() ? ",\n" : "\n";
    }
    s.emit(text + "]\n", a.output);
    return;
  }
  // Meshes hold one solid: the last member of the family.
  s.emit_polyhedron(fam.back().poly, a.output);
}

// ---- verify ----

struct VerifyArgs {
  std::vector<std::string> only;
  bool json = false;
};

bool cmd_verify(Session& s, const VerifyArgs& a) {
  for (const auto& name : a.only) {
    const auto& reg = check_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const Check& c) { return c.name == name; })) {
      throw DomainError("unknown check: " + name);
    }
  }
  const auto results = run_checks(a.only);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
  std::ostringstream text;
  if (a.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      ordered_json j = {{"name", r.name}, {"criterion", r.criterion}, {"pass", r.pass}};
      if (!r.pass) j["detail"] = r.detail;
      arr.push_back(std::move(j));
    }
    ordered_json j = {{"checks", results.size()}, {"failed", failed}, {"results", std::move(arr)}};
    text << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      text << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name;
      if (!r.pass) text << ": " << r.detail;
      text << '\n';
    }
    text << results.size() << " checks, " << failed << " failed\n";
  }
  s.emit(text.str(), Output{});
  return failed == 0 && !results.empty();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quaternionic Coxeter groups, lattices and pyritohedral polyhedra", "pyrito"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  Session session(out, err, join(args));
  std::function<void()> action;
  bool verify_ok = true;

  GroupArgs ga;
  auto* group = app.add_subcommand("group", "Point groups: WD3 Oh O Th A4 WH3 A5 WA2 D6 WB2");
  group->add_option("name", ga.name, "group name")->required();
  auto* order_flag = group->add_flag("--order", ga.order, "print the group order");
  group->add_flag("--list", ga.list, "list the elements")->excludes(order_flag);
  group->add_flag("--json", ga.json, "JSON output");
  group->callback([&] { action = [&] { cmd_group(session, ga); }; });

  OrbitArgs oa;
  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a1 w1 + ... + an wn");
  orbit_cmd->add_option("--diagram", oa.diagram, "A2, B2, D3 (A3) or B3")->required();
  orbit_cmd->add_option("--coords", oa.coords, "comma-separated Dynkin coordinates")->required();
  orbit_cmd->add_option("--scale", oa.scale, "scale factor (field literal)");
  orbit_cmd->add_option("--group", oa.group, "use this point group instead of W(diagram)");
  add_output(orbit_cmd, oa.output);
  orbit_cmd->callback([&] { action = [&] { cmd_orbit(session, oa); }; });

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "fcc, bcc, sc, hexA2 and squareB2 lattices");
  lattice->require_subcommand(1);
  auto lattice_common = [&](CLI::App* c) {
    c->add_option("--kind", la.kind, "fcc, bcc, sc, hexA2 or squareB2")->required();
    c->add_option("--convention", la.convention, "bcc coordinates: half or doubled")
        ->check(CLI::IsMember({"half", "doubled"}));
  };
  auto* member_cmd = lattice->add_subcommand("member", "test membership of a point");
  lattice_common(member_cmd);
  member_cmd->add_option("--point", la.point, "comma-separated coordinates")->required();
  member_cmd->callback([&] { action = [&] { cmd_lattice_member(session, la); }; });
  auto* shell_cmd = lattice->add_subcommand("shell", "lattice points of a given squared norm");
  lattice_common(shell_cmd);
  shell_cmd->add_option("--norm2", la.norm2, "squared norm")->required();
  shell_cmd->add_flag("--json", la.json, "JSON output");
  add_output(shell_cmd, la.output, false);
  shell_cmd->callback([&] { action = [&] { cmd_lattice_shell(session, la); }; });
  auto* ws_cmd = lattice->add_subcommand("ws", "Wigner-Seitz cell");
  lattice_common(ws_cmd);
  add_output(ws_cmd, la.output);
  ws_cmd->callback([&] { action = [&] { cmd_lattice_ws(session, la); }; });
  auto* basis_cmd = lattice->add_subcommand("basis", "generating vectors");
  lattice_common(basis_cmd);
  basis_cmd->add_flag("--json", la.json, "JSON output");
  basis_cmd->callback([&] { action = [&] { cmd_lattice_basis(session, la); }; });

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "Pseudoicosahedra, pyritohedra and their relatives");
  poly->require_subcommand(1);
  auto* pi_cmd = poly->add_subcommand("pseudoicosa", "pseudoicosahedron for parameter x");
  pi_cmd->add_option("--x", pa.x, "parameter x (field literal)")->required();
  pi_cmd->add_option("--a1", pa.a1, "scale a1 > 0");
  add_output(pi_cmd, pa.output);
  pi_cmd->callback([&] {
    action = [&] { session.emit_polyhedron(pseudoicosahedron(FieldScalar::parse(pa.x), FieldScalar::parse(pa.a1)), pa.output); };
  });
  auto* py_cmd = poly->add_subcommand("pyrito", "pyritohedron for parameter h");
  py_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  py_cmd->add_option("--h", pa.h, "parameter h (field literal)")->required();
  py_cmd->add_option("--a1", pa.a1, "scale a1");
  add_output(py_cmd, pa.output);
  py_cmd->callback([&] {
    action = [&] { session.emit_polyhedron(pyritohedron(FieldScalar::parse(pa.h), FieldScalar::parse(pa.a1)), pa.output); };
  });
  auto* id_cmd = poly->add_subcommand("icosidodeca", "edge-midpoint solid of the pseudoicosahedron");
  id_cmd->add_option("--x", pa.x, "parameter x (field literal)")->required();
  id_cmd->add_option("--a1", pa.a1, "scale a1");
  add_output(id_cmd, pa.output);
  id_cmd->callback([&] {
    action = [&] {
      session.emit_polyhedron(pseudoicosidodecahedron(FieldScalar::parse(pa.x), FieldScalar::parse(pa.a1)), pa.output);
    };
  });
  auto* dual_cmd = poly->add_subcommand("dual", "polar dual of a JSON record");
  dual_cmd->add_option("input", pa.input, "JSON file written by this tool")->required();
  add_output(dual_cmd, pa.output);
  dual_cmd->callback([&] {
    action = [&] {
      const auto rec = read_json(read_file(pa.input));
      session.emit_polyhedron(polar_dual(record_polyhedron(rec)), pa.output);
    };
  });

  FibArgs fa;
  auto* fib = app.add_subcommand("fib", "Fibonacci approximants x_n = F(n+1)/F(n)");
  fib->add_option("--n", fa.n, "largest n")->required();
  fib->add_option("--policy", fa.policy, "a1 choice: clear (a1 = F(n)) or unit")
      ->check(CLI::IsMember({"clear", "unit"}));
  add_output(fib, fa.output);
  fib->callback([&] { action = [&] { cmd_fib(session, fa); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "replay the built-in exact checks");
  verify->add_option("--only", va.only, "run only these checks");
  verify->add_flag("--json", va.json, "JSON report");
  verify->callback([&] { action = [&] { verify_ok = cmd_verify(session, va); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return verify_ok ? kExitOk : kExitUsage;
}

}  // namespace pyrito::cli
