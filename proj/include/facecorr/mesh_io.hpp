#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "facecorr/geometry.hpp"

namespace facecorr {

enum class MeshFormat { Obj, Ply };

/// Format chosen from the file extension (.obj / .ply).
TriangleMesh load_mesh(const std::string& path);
TriangleMesh load_mesh(std::istream& in, MeshFormat format);

void save_obj(const TriangleMesh& mesh, const std::string& path);
void save_obj(const TriangleMesh& mesh, std::ostream& out);

/// Optional per-vertex colors are written as uchar red/green/blue properties.
void save_ply(const TriangleMesh& mesh, const std::string& path, bool binary = false,
              const std::vector<std::array<uint8_t, 3>>* colors = nullptr);
void save_ply(const TriangleMesh& mesh, std::ostream& out, bool binary = false,
              const std::vector<std::array<uint8_t, 3>>* colors = nullptr);

}  // namespace facecorr
