#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace facecorr {

using Vec3 = Eigen::Vector3d;

/// Indexed triangle surface. Positions are in millimeters. After finalize()
/// the mesh carries unit outer vertex normals, boundary flags and adjacency,
/// and is immutable by convention.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<Vec3> normals;        // unit, per vertex
  std::vector<uint8_t> boundary;    // 1 iff vertex touches an edge with exactly one face

  // Adjacency, built by finalize().
  std::vector<std::vector<int>> vertex_faces;
  std::vector<std::vector<int>> vertex_ring;  // one-ring neighbors, ascending

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }

  /// Validates indices, builds adjacency and boundary flags, computes
  /// area-weighted vertex normals when none are present, normalizes any
  /// supplied normals. Throws DataError on invalid topology.
  void finalize();

  Vec3 face_normal(int f) const;  // unit; zero vector for degenerate faces
  double face_area(int f) const;
  double total_area() const;

  /// Face adjacent to `face` across edge (a, b); -1 for boundary edges.
  int adjacent_face(int face, int a, int b) const;
  bool edge_is_boundary(int a, int b) const;

  /// Vertices of `face` other than `v` (v must belong to the face).
  std::array<int, 2> opposite_edge(int face, int v) const;

  bool finalized() const { return !vertex_faces.empty() || vertices.empty(); }

 private:
  static uint64_t edge_key(int a, int b);
  std::unordered_map<uint64_t, std::array<int, 2>> edge_faces_;
};

/// Centroid of all vertices.
Vec3 centroid(const TriangleMesh& mesh);

/// Returns a copy with `R * v + t` applied to every vertex (normals rotated).
TriangleMesh rigidly_transformed(const TriangleMesh& mesh, const Eigen::Matrix3d& rotation,
                                 const Vec3& translation);

}  // namespace facecorr
