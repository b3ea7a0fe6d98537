#include "facecorr/mesh_io.hpp"

#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "facecorr/errors.hpp"

namespace facecorr {

namespace {

// Fan-triangulates a polygon face (v0, v1, ..., vn-1) into (v0, vi, vi+1).
void emit_face(std::vector<std::array<int, 3>>& faces, const std::vector<int>& poly) {
  if (poly.size() < 3) throw DataError("face with fewer than 3 vertices");
  for (size_t i = 1; i + 1 < poly.size(); ++i)
    faces.push_back({poly[0], poly[static_cast<int>(i)], poly[static_cast<int>(i + 1)]});
}

TriangleMesh load_obj_stream(std::istream& in) {
  TriangleMesh mesh;
  std::vector<Vec3> file_normals;
  std::vector<int> normal_of_vertex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Vec3 p;
      if (!(ls >> p.x() >> p.y() >> p.z()))
        throw DataError("OBJ parse failure at line " + std::to_string(line_no));
      mesh.vertices.push_back(p);
    } else if (tag == "vn") {
      Vec3 n;
      if (!(ls >> n.x() >> n.y() >> n.z()))
        throw DataError("OBJ parse failure at line " + std::to_string(line_no));
      file_normals.push_back(n);
    } else if (tag == "f") {
      std::vector<int> poly;
      std::string item;
      while (ls >> item) {
        // Accept v, v/vt, v//vn and v/vt/vn references.
        size_t slash = item.find('/');
        int vi = 0, ni = 0;
        try {
          vi = std::stoi(item.substr(0, slash));
        } catch (...) {
          throw DataError("OBJ parse failure at line " + std::to_string(line_no));
        }
        if (slash != std::string::npos) {
          size_t slash2 = item.find('/', slash + 1);
          if (slash2 != std::string::npos && slash2 + 1 < item.size())
            ni = std::stoi(item.substr(slash2 + 1));
        }
        if (vi < 0) vi = static_cast<int>(mesh.vertices.size()) + vi + 1;
        if (vi < 1) throw DataError("OBJ face index out of range at line " + std::to_string(line_no));
        poly.push_back(vi - 1);
        if (ni > 0) {
          normal_of_vertex.resize(mesh.vertices.size(), -1);
          if (vi - 1 < static_cast<int>(normal_of_vertex.size()))
            normal_of_vertex[vi - 1] = ni - 1;
        }
      }
      emit_face(mesh.faces, poly);
    }
    // Other records (vt, usemtl, comments, ...) are ignored.
  }
  if (!file_normals.empty() && !normal_of_vertex.empty()) {
    normal_of_vertex.resize(mesh.vertices.size(), -1);
    bool all = true;
    for (int ni : normal_of_vertex)
      if (ni < 0 || ni >= static_cast<int>(file_normals.size())) all = false;
    if (all) {
      mesh.normals.resize(mesh.vertices.size());
      for (size_t v = 0; v < mesh.vertices.size(); ++v)
        mesh.normals[v] = file_normals[normal_of_vertex[v]];
    }
  }
  if (mesh.vertices.empty()) throw DataError("OBJ contains no vertices");
  mesh.finalize();
  return mesh;
}

struct PlyProperty {
  std::string name;
  std::string type;       // scalar type, or element type of a list
  std::string count_type; // non-empty for list properties
};

struct PlyElement {
  std::string name;
  size_t count = 0;
  std::vector<PlyProperty> props;
};

size_t ply_type_size(const std::string& t) {
  if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
  if (t == "short" || t == "ushort" || t == "int16" || t == "uint16") return 2;
  if (t == "int" || t == "uint" || t == "int32" || t == "uint32" || t == "float" ||
      t == "float32")
    return 4;
  if (t == "double" || t == "float64") return 8;
  throw DataError("PLY: unknown type " + t);
}

double ply_read_binary_scalar(std::istream& in, const std::string& type) {
  unsigned char buf[8];
  size_t n = ply_type_size(type);
  in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(n));
  if (!in) throw DataError("PLY: truncated binary payload");
  // Binary little-endian only; matches the header check below.
  if (type == "char" || type == "int8") return *reinterpret_cast<int8_t*>(buf);
  if (type == "uchar" || type == "uint8") return *reinterpret_cast<uint8_t*>(buf);
  if (type == "short" || type == "int16") { int16_t v; std::memcpy(&v, buf, 2); return v; }
  if (type == "ushort" || type == "uint16") { uint16_t v; std::memcpy(&v, buf, 2); return v; }
  if (type == "int" || type == "int32") { int32_t v; std::memcpy(&v, buf, 4); return v; }
  if (type == "uint" || type == "uint32") { uint32_t v; std::memcpy(&v, buf, 4); return v; }
  if (type == "float" || type == "float32") { float v; std::memcpy(&v, buf, 4); return v; }
  if (type == "double" || type == "float64") { double v; std::memcpy(&v, buf, 8); return v; }
  throw DataError("PLY: unknown type " + type);
}

TriangleMesh load_ply_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("PLY: empty stream");
  if (line.rfind("ply", 0) != 0) throw DataError("PLY: missing magic");

  bool binary = false;
  std::vector<PlyElement> elements;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "comment" || tag == "obj_info") continue;
    if (tag == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt == "ascii")
        binary = false;
      else if (fmt == "binary_little_endian")
        binary = true;
      else
        throw DataError("PLY: unsupported format " + fmt);
    } else if (tag == "element") {
      PlyElement el;
      ls >> el.name >> el.count;
      elements.push_back(el);
    } else if (tag == "property") {
      if (elements.empty()) throw DataError("PLY: property before element");
      PlyProperty p;
      std::string t;
      ls >> t;
      if (t == "list") {
        ls >> p.count_type >> p.type >> p.name;
      } else {
        p.type = t;
        ls >> p.name;
      }
      elements.back().props.push_back(p);
    } else if (tag == "end_header") {
      break;
    } else if (!tag.empty()) {
      throw DataError("PLY: unexpected header line: " + line);
    }
  }

  TriangleMesh mesh;
  std::vector<Vec3> normals;
  auto read_scalar = [&](const std::string& type) -> double {
    if (binary) return ply_read_binary_scalar(in, type);
    double v;
    if (!(in >> v)) throw DataError("PLY: truncated ascii payload");
    return v;
  };

  for (const auto& el : elements) {
    if (el.name == "vertex") {
      mesh.vertices.reserve(el.count);
      bool has_normals = false;
      for (const auto& p : el.props)
        if (p.name == "nx") has_normals = true;
      if (has_normals) normals.reserve(el.count);
      for (size_t i = 0; i < el.count; ++i) {
        Vec3 pos = Vec3::Zero(), nrm = Vec3::Zero();
        for (const auto& p : el.props) {
          if (!p.count_type.empty()) {
            size_t n = static_cast<size_t>(read_scalar(p.count_type));
            for (size_t k = 0; k < n; ++k) read_scalar(p.type);
            continue;
          }
          double v = read_scalar(p.type);
          if (p.name == "x") pos.x() = v;
          else if (p.name == "y") pos.y() = v;
          else if (p.name == "z") pos.z() = v;
          else if (p.name == "nx") nrm.x() = v;
          else if (p.name == "ny") nrm.y() = v;
          else if (p.name == "nz") nrm.z() = v;
        }
        mesh.vertices.push_back(pos);
        if (has_normals) normals.push_back(nrm);
      }
    } else if (el.name == "face") {
      for (size_t i = 0; i < el.count; ++i) {
        for (const auto& p : el.props) {
          if (!p.count_type.empty()) {
            size_t n = static_cast<size_t>(read_scalar(p.count_type));
            std::vector<int> poly(n);
            for (size_t k = 0; k < n; ++k) poly[k] = static_cast<int>(read_scalar(p.type));
            if (p.name == "vertex_indices" || p.name == "vertex_index")
              emit_face(mesh.faces, poly);
          } else {
            read_scalar(p.type);
          }
        }
      }
    } else {
      // Skip unknown elements payload.
      for (size_t i = 0; i < el.count; ++i) {
        for (const auto& p : el.props) {
          if (!p.count_type.empty()) {
            size_t n = static_cast<size_t>(read_scalar(p.count_type));
            for (size_t k = 0; k < n; ++k) read_scalar(p.type);
          } else {
            read_scalar(p.type);
          }
        }
      }
    }
  }
  if (mesh.vertices.empty()) throw DataError("PLY contains no vertices");
  if (normals.size() == mesh.vertices.size()) mesh.normals = std::move(normals);
  mesh.finalize();
  return mesh;
}

}  // namespace

TriangleMesh load_mesh(std::istream& in, MeshFormat format) {
  return format == MeshFormat::Obj ? load_obj_stream(in) : load_ply_stream(in);
}

TriangleMesh load_mesh(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open mesh file: " + path);
  auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  for (auto& c : ext) c = static_cast<char>(std::tolower(c));
  if (ext == "obj") return load_mesh(in, MeshFormat::Obj);
  if (ext == "ply") return load_mesh(in, MeshFormat::Ply);
  throw DataError("unknown mesh extension: " + path);
}

void save_obj(const TriangleMesh& mesh, std::ostream& out) {
  out.precision(9);
  for (const auto& v : mesh.vertices)
    out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& n : mesh.normals)
    out << "vn " << n.x() << ' ' << n.y() << ' ' << n.z() << '\n';
  bool with_normals = mesh.normals.size() == mesh.vertices.size();
  for (const auto& f : mesh.faces) {
    if (with_normals)
      out << "f " << f[0] + 1 << "//" << f[0] + 1 << ' ' << f[1] + 1 << "//" << f[1] + 1 << ' '
          << f[2] + 1 << "//" << f[2] + 1 << '\n';
    else
      out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

void save_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write mesh file: " + path);
  save_obj(mesh, out);
}

void save_ply(const TriangleMesh& mesh, std::ostream& out, bool binary,
              const std::vector<std::array<uint8_t, 3>>* colors) {
  if (colors && colors->size() != mesh.vertices.size())
    throw DataError("PLY color array size mismatch");
  bool with_normals = mesh.normals.size() == mesh.vertices.size();
  out << "ply\nformat " << (binary ? "binary_little_endian" : "ascii") << " 1.0\n";
  out << "element vertex " << mesh.vertices.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  if (with_normals) out << "property double nx\nproperty double ny\nproperty double nz\n";
  if (colors) out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  out << "element face " << mesh.faces.size() << "\n";
  out << "property list uchar int vertex_indices\n";
  out << "end_header\n";

  if (binary) {
    auto put = [&](const void* p, size_t n) { out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n)); };
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
      double xyz[3] = {mesh.vertices[i].x(), mesh.vertices[i].y(), mesh.vertices[i].z()};
      put(xyz, 24);
      if (with_normals) {
        double n[3] = {mesh.normals[i].x(), mesh.normals[i].y(), mesh.normals[i].z()};
        put(n, 24);
      }
      if (colors) put((*colors)[i].data(), 3);
    }
    for (const auto& f : mesh.faces) {
      uint8_t three = 3;
      put(&three, 1);
      int32_t idx[3] = {f[0], f[1], f[2]};
      put(idx, 12);
    }
  } else {
    out.precision(17);
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
      out << mesh.vertices[i].x() << ' ' << mesh.vertices[i].y() << ' ' << mesh.vertices[i].z();
      if (with_normals)
        out << ' ' << mesh.normals[i].x() << ' ' << mesh.normals[i].y() << ' '
            << mesh.normals[i].z();
      if (colors)
        out << ' ' << int((*colors)[i][0]) << ' ' << int((*colors)[i][1]) << ' '
            << int((*colors)[i][2]);
      out << '\n';
    }
    for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  }
}

void save_ply(const TriangleMesh& mesh, const std::string& path, bool binary,
              const std::vector<std::array<uint8_t, 3>>* colors) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write mesh file: " + path);
  save_ply(mesh, out, binary, colors);
}

}  // namespace facecorr
