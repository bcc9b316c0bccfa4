#pragma once

#include <array>
#include <string>
#include <vector>

#include "cutfem/geometry.hpp"
#include "cutfem/mesh.hpp"
#include "cutfem/vec3.hpp"

namespace cutfem {

struct QuadPoint {
    Vec3 point;
    double weight = 0.0;
};

/// One piece of the discrete manifold inside a single background tet:
/// a triangle (codim 1) or a segment (codim 2), with its quadrature rule and
/// the constant tangential/normal projectors of its affine span.
struct CutFacet {
    int parent_tet = -1;
    int n_vertices = 3;  // 3 triangle, 2 segment
    std::array<Vec3, 3> vertices{};
    double measure = 0.0;  // area or length
    int n_quad = 0;
    std::array<QuadPoint, 3> quad{};
    Mat3 P_gh = Mat3::zero();
    Mat3 Q_gh = Mat3::zero();
};

struct DiscreteManifold {
    int codim = 1;
    double h = 0.0;
    double total_measure = 0.0;
    double dropped_length = 0.0;  // polyline pieces outside the box (codim 2)
    std::vector<CutFacet> facets;

    int dim() const { return 3 - codim; }
};

/// Zero set of the nodal interpolant of the level set (codim 1).
DiscreteManifold marching_tets(const BackgroundMesh& bg, const ManifoldSpec& m);
DiscreteManifold marching_tets(const BackgroundMesh& bg, const std::vector<double>& phi_nodal);

/// Polyline through gamma(2*pi*j/M), j = 0..M-1, clipped so every segment
/// piece lies in exactly one background tet (codim 2).
DiscreteManifold clip_polyline(const BackgroundMesh& bg, const ManifoldSpec& m, int segments);
DiscreteManifold clip_polyline(const BackgroundMesh& bg, const std::vector<Vec3>& points, bool closed);

/// Orthogonal projector onto the facet's affine span.
Mat3 facet_projector(const CutFacet& f);

/// Per-tet discrete normal projector used by the normal-gradient stabilization.
/// codim 1: n = grad of the nodal level-set interpolant; codim 2: complement of
/// the curve tangent at the parameter closest to the tet centroid.
Mat3 discrete_normal_projector(const BackgroundMesh& bg, int tet, const DiscreteManifold& dm,
                               const ManifoldSpec& m);

struct GeometryReport {
    double rho_max = 0.0;       // max distance of quadrature points to the exact manifold
    double proj_dev_max = 0.0;  // max entrywise deviation of P_gh from the exact projector
    double measure_ratio = 0.0; // discrete / analytic measure
    double total_measure = 0.0;
    double analytic = 0.0;
    int n_facets = 0;
};

GeometryReport geometry_validation(const DiscreteManifold& dm, const ManifoldSpec& m);

/// Legacy ASCII VTK export of the facets (cell types 5 / 3). `point_data`,
/// when nonempty, holds one value per facet vertex in facet order.
void write_vtk_facets(const std::string& path, const DiscreteManifold& dm,
                      const std::vector<double>& point_data = {},
                      const std::string& data_name = "u");

}  // namespace cutfem
