#include "facecorr/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "facecorr/errors.hpp"

namespace facecorr {

uint64_t TriangleMesh::edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

void TriangleMesh::finalize() {
  const int nv = num_vertices();
  if (nv == 0) throw DataError("mesh has no vertices");
  if (faces.empty()) throw DataError("mesh has no faces");

  for (const auto& f : faces) {
    for (int idx : f) {
      if (idx < 0 || idx >= nv) throw DataError("face index out of range");
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      throw DataError("degenerate face repeats a vertex");
  }

  vertex_faces.assign(nv, {});
  for (int fi = 0; fi < num_faces(); ++fi) {
    for (int idx : faces[fi]) vertex_faces[idx].push_back(fi);
  }

  edge_faces_.clear();
  edge_faces_.reserve(faces.size() * 2);
  for (int fi = 0; fi < num_faces(); ++fi) {
    const auto& f = faces[fi];
    for (int e = 0; e < 3; ++e) {
      uint64_t key = edge_key(f[e], f[(e + 1) % 3]);
      auto [it, inserted] = edge_faces_.try_emplace(key, std::array<int, 2>{fi, -1});
      if (!inserted) {
        if (it->second[1] != -1) throw DataError("non-manifold edge (more than two faces)");
        it->second[1] = fi;
      }
    }
  }

  vertex_ring.assign(nv, {});
  boundary.assign(nv, 0);
  for (const auto& [key, fs] : edge_faces_) {
    int a = static_cast<int>(key >> 32);
    int b = static_cast<int>(key & 0xffffffffu);
    vertex_ring[a].push_back(b);
    vertex_ring[b].push_back(a);
    if (fs[1] == -1) {
      boundary[a] = 1;
      boundary[b] = 1;
    }
  }
  for (auto& ring : vertex_ring) std::sort(ring.begin(), ring.end());

  if (normals.size() != vertices.size()) {
    normals.assign(nv, Vec3::Zero());
    for (int fi = 0; fi < num_faces(); ++fi) {
      const auto& f = faces[fi];
      // Cross product carries the area weight.
      Vec3 n = (vertices[f[1]] - vertices[f[0]]).cross(vertices[f[2]] - vertices[f[0]]);
      for (int idx : f) normals[idx] += n;
    }
  }
  for (auto& n : normals) {
    double len = n.norm();
    n = len > 1e-14 ? Vec3(n / len) : Vec3(0, 0, 1);
  }
}

Vec3 TriangleMesh::face_normal(int f) const {
  const auto& t = faces[f];
  Vec3 n = (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]);
  double len = n.norm();
  return len > 1e-14 ? Vec3(n / len) : Vec3::Zero();
}

double TriangleMesh::face_area(int f) const {
  const auto& t = faces[f];
  return 0.5 * (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
}

double TriangleMesh::total_area() const {
  double a = 0;
  for (int f = 0; f < num_faces(); ++f) a += face_area(f);
  return a;
}

int TriangleMesh::adjacent_face(int face, int a, int b) const {
  auto it = edge_faces_.find(edge_key(a, b));
  if (it == edge_faces_.end()) return -1;
  if (it->second[0] == face) return it->second[1];
  if (it->second[1] == face) return it->second[0];
  return -1;
}

bool TriangleMesh::edge_is_boundary(int a, int b) const {
  auto it = edge_faces_.find(edge_key(a, b));
  return it != edge_faces_.end() && it->second[1] == -1;
}

std::array<int, 2> TriangleMesh::opposite_edge(int face, int v) const {
  const auto& f = faces[face];
  if (f[0] == v) return {f[1], f[2]};
  if (f[1] == v) return {f[2], f[0]};
  return {f[0], f[1]};
}

Vec3 centroid(const TriangleMesh& mesh) {
  Vec3 c = Vec3::Zero();
  for (const auto& v : mesh.vertices) c += v;
  return c / static_cast<double>(mesh.vertices.size());
}

TriangleMesh rigidly_transformed(const TriangleMesh& mesh, const Eigen::Matrix3d& rotation,
                                 const Vec3& translation) {
  TriangleMesh out;
  out.faces = mesh.faces;
  out.vertices.reserve(mesh.vertices.size());
  for (const auto& v : mesh.vertices) out.vertices.push_back(rotation * v + translation);
  out.normals.reserve(mesh.normals.size());
  for (const auto& n : mesh.normals) out.normals.push_back(rotation * n);
  out.finalize();
  return out;
}

}  // namespace facecorr
