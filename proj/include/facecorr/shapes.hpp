#pragma once

#include <functional>

#include "facecorr/geometry.hpp"

namespace facecorr {

/// Regular grid over [-width/2, width/2] x [-height/2, height/2] in the z=0
/// plane, (nx+1)*(ny+1) vertices, diagonals alternated per cell.
TriangleMesh make_plane_grid(double width, double height, int nx, int ny);

/// Geodesic sphere from a subdivided icosahedron. subdivisions=0 gives the
/// bare icosahedron (12 vertices / 20 faces).
TriangleMesh make_icosphere(double radius, int subdivisions);

/// Open cylinder around the z axis, z in [-height/2, height/2].
TriangleMesh make_cylinder(double radius, double height, int segments, int rings);

/// Height-field patch z = f(x, y) over an elliptical domain of the given
/// half-axes; grid-based, boundary follows the ellipse.
TriangleMesh make_height_field(double half_width, double half_height, double spacing,
                               const std::function<double(double, double)>& height);

}  // namespace facecorr
