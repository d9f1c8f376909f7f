#include "f4/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace f4 {

namespace {

using nlohmann::json;

std::string nodes_str(const std::vector<int>& nodes) {
  std::string out = "<";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ",";
    out += "r" + std::to_string(nodes[k] + 1);
  }
  return out + ">";
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

json face_classes(const std::vector<FaceClass>& classes) {
  json out = json::array();
  for (const FaceClass& f : classes) {
    out.push_back({{"dim", f.dim},
                   {"nodes", f.nodes},
                   {"shape", f.shape},
                   {"count", f.count},
                   {"center", to_json(f.center)}});
  }
  return out;
}

json point_json(const Point3& p) { return json::array({to_json(p(0)), to_json(p(1)), to_json(p(2))}); }

}  // namespace

std::string render(const B4Branching& b) {
  std::string out = b.input.str() + "_F4 =";
  for (std::size_t k = 0; k < b.parts.size(); ++k) {
    out += (k ? " + " : " ") + b.parts[k].str() + "_B4";
  }
  return out;
}

std::string render(const B3A1Branching& b) {
  std::string out = b.input.str() + "_F4 =";
  for (std::size_t k = 0; k < b.slices.size(); ++k) {
    const B3Slice& s = b.slices[k];
    out += (k ? " + {" : " {") + s.b3_label.str() + "_B3 ± " + s.height.pretty() + "}";
  }
  return out;
}

std::string render(const PolytopeComplex& c) {
  std::ostringstream os;
  os << c.orbit.label.str() << "_" << to_string(c.orbit.system) << ": N0=" << c.n[0]
     << " N1=" << c.n[1] << " N2=" << c.n[2] << " N3=" << c.n[3] << " Euler=" << c.euler()
     << "\n";
  auto list = [&](const char* what, const std::vector<FaceClass>& classes) {
    for (const FaceClass& f : classes) {
      os << "  " << what << " " << nodes_str(f.nodes) << " " << f.count << " " << f.shape
         << " center " << f.center.str() << "\n";
    }
  };
  list("edges", c.edge_inventory);
  list("faces", c.face_inventory);
  list("cells", c.cell_inventory);
  return os.str();
}

std::string render(const DualPolytope& d) {
  std::ostringstream os;
  os << "dual of " << d.source_label.str() << "_F4: N0=" << d.n0 << " cells=" << d.cell_count
     << "\n";
  for (const DualShell& s : d.vertex_orbits) {
    os << "  " << s.scale.pretty() << " * w" << s.weight + 1 << ": " << s.size
       << " vertices, R^2=" << s.radius2.pretty() << " R=" << g17(std::sqrt(s.radius2.to_double()))
       << "\n";
  }
  return os.str();
}

std::string render(const DualCell& cell) {
  std::ostringstream os;
  os << "dual cell at " << cell.source_label.str() << "_F4: " << cell.centers.size()
     << " vertices, " << cell.edges.size() << " edges, " << cell.faces.size() << " faces\n";
  for (std::size_t k = 0; k < cell.centers.size(); ++k) {
    const CenterVector& c = cell.centers[k];
    const Point3& p = cell.local_coords[k];
    os << "  " << (c.scale == FieldScalar(1) ? "" : c.scale.pretty() + " ") << c.name() << " = ("
       << p(0).pretty() << ", " << p(1).pretty() << ", " << p(2).pretty() << ")\n";
  }
  const CellMetrics m = cell_metrics(cell);
  os << "  squared edge lengths:";
  for (const FieldScalar& l : m.edge_lengths2) os << " " << l.pretty();
  os << "\n";
  return os.str();
}

std::string render(const std::vector<ProjectedSlice>& slices) {
  std::ostringstream os;
  for (const ProjectedSlice& s : slices) {
    os << "height " << s.height.pretty() << " " << s.b3_label.str() << "_B3 (" << s.points.size()
       << " points)\n";
    for (const Point3& p : s.points) {
      os << "  (" << p(0).pretty() << ", " << p(1).pretty() << ", " << p(2).pretty() << ")\n";
    }
  }
  return os.str();
}

json to_json(const FieldScalar& x) { return x.str(); }

json to_json(const Quat& q) {
  return json::array({to_json(q[0]), to_json(q[1]), to_json(q[2]), to_json(q[3])});
}

json to_json(const OrbitLabel& label) {
  json out = json::array();
  for (const FieldScalar& a : label) out.push_back(to_json(a));
  return out;
}

json to_json(const GroupElement& g) {
  return {{"p", to_json(g.p())}, {"q", to_json(g.q())}, {"star", g.star()}};
}

json to_json(const FiniteGroup& g) {
  json elements = json::array();
  for (const GroupElement& e : g) elements.push_back(to_json(e));
  return {{"group", to_string(g.name())}, {"order", g.order()}, {"elements", elements}};
}

json to_json(const Orbit& o) {
  json vertices = json::array();
  for (const Quat& v : o.vertices) vertices.push_back(to_json(v));
  return {{"system", to_string(o.system)},
          {"label", to_json(o.label)},
          {"size", o.vertices.size()},
          {"vertices", vertices}};
}

json to_json(const PolytopeComplex& c) {
  return {{"label", to_json(c.orbit.label)},
          {"N0", c.n[0]},
          {"N1", c.n[1]},
          {"N2", c.n[2]},
          {"N3", c.n[3]},
          {"euler", c.euler()},
          {"edge_inventory", face_classes(c.edge_inventory)},
          {"face_inventory", face_classes(c.face_inventory)},
          {"cell_inventory", face_classes(c.cell_inventory)},
          {"vertices", to_json(c.orbit)["vertices"]}};
}

json to_json(const B4Branching& b) {
  json parts = json::array();
  for (const OrbitLabel& p : b.parts) parts.push_back(to_json(p));
  return {{"input", to_json(b.input)}, {"parts", parts}, {"text", render(b)}};
}

json to_json(const B3A1Branching& b) {
  json slices = json::array();
  for (const B3Slice& s : b.slices) {
    slices.push_back({{"b3_label", to_json(s.b3_label)},
                      {"height", to_json(s.height)},
                      {"signs", s.multiplicity == SliceMultiplicity::Zero ? "0" : "+-"},
                      {"vertices", slice_vertex_count(s)}});
  }
  return {{"input", to_json(b.input)}, {"slices", slices}, {"text", render(b)}};
}

json to_json(const std::vector<ProjectedSlice>& slices) {
  json out = json::array();
  for (const ProjectedSlice& s : slices) {
    json points = json::array();
    for (const Point3& p : s.points) points.push_back(point_json(p));
    out.push_back({{"height", to_json(s.height)},
                   {"b3_label", to_json(s.b3_label)},
                   {"points", points}});
  }
  return out;
}

json to_json(const DualPolytope& d) {
  json shells = json::array();
  for (const DualShell& s : d.vertex_orbits) {
    shells.push_back({{"weight", s.weight + 1},
                      {"scale", to_json(s.scale)},
                      {"label", to_json(s.label)},
                      {"size", s.size},
                      {"radius2", to_json(s.radius2)},
                      {"radius", std::sqrt(s.radius2.to_double())}});
  }
  return {{"source_label", to_json(d.source_label)},
          {"n0", d.n0},
          {"cell_count", d.cell_count},
          {"shells", shells}};
}

json to_json(const DualCell& cell) {
  json vertices = json::array();
  for (std::size_t k = 0; k < cell.centers.size(); ++k) {
    const CenterVector& c = cell.centers[k];
    vertices.push_back({{"name", c.name()},
                        {"scale", to_json(c.scale)},
                        {"center", to_json(c.point())},
                        {"local", point_json(cell.local_coords[k])}});
  }
  const CellMetrics m = cell_metrics(cell);
  json lengths = json::array();
  for (const FieldScalar& l : m.edge_lengths2) lengths.push_back(to_json(l));
  json faces = json::array();
  for (const FaceMetrics& f : m.faces) faces.push_back({{"vertices", f.vertices}, {"area", f.area}});
  return {{"source_label", to_json(cell.source_label)},
          {"apex", to_json(cell.apex_vertex)},
          {"frame_norm2", to_json(cell.frame_norm2)},
          {"unit2", to_json(cell.unit2)},
          {"vertices", vertices},
          {"edges", cell.edges},
          {"edge_lengths2", lengths},
          {"faces", faces}};
}

Mesh mesh_of(const DualCell& cell) {
  Mesh mesh;
  const double unit = std::sqrt(cell.unit2.to_double());
  for (const Point3& p : cell.local_coords) {
    mesh.vertices.emplace_back(p(0).to_double() / unit, p(1).to_double() / unit,
                               p(2).to_double() / unit);
  }
  mesh.faces = cell.faces;
  return mesh;
}

std::string to_off(const Mesh& mesh) {
  if (mesh.vertices.empty() || mesh.faces.empty())
    throw std::invalid_argument("cannot write an OFF mesh without vertices and faces");
  std::size_t edges = 0;
  for (const auto& f : mesh.faces) edges += f.size();
  std::ostringstream os;
  os << "OFF\n" << mesh.vertices.size() << " " << mesh.faces.size() << " " << edges / 2 << "\n";
  for (const Eigen::Vector3d& v : mesh.vertices) {
    os << g17(v.x()) << " " << g17(v.y()) << " " << g17(v.z()) << "\n";
  }
  for (const auto& f : mesh.faces) {
    os << f.size();
    for (int i : f) {
      if (i < 0 || static_cast<std::size_t>(i) >= mesh.vertices.size())
        throw std::invalid_argument("face index out of range");
      os << " " << i;
    }
    os << "\n";
  }
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace f4
