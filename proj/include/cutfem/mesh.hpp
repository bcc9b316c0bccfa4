#pragma once

#include <array>
#include <string>
#include <vector>

#include "cutfem/vec3.hpp"

namespace cutfem {

struct DiscreteManifold;  // cutcell.hpp

/// Axis-aligned box subdivided into n^3 cubic cells.
struct BoxSpec {
    Vec3 lo{-1.1, -1.1, -1.1};
    Vec3 hi{1.1, 1.1, 1.1};
    int n = 10;

    double h() const { return (hi.x - lo.x) / n; }
};

/// Structured tetrahedral mesh: each cube split into 6 tets (Kuhn pattern),
/// so faces conform across cube boundaries.
struct BackgroundMesh {
    BoxSpec box;
    std::vector<Vec3> vertices;             // (n+1)^3 grid points
    std::vector<std::array<int, 4>> tets;   // positively oriented
    double h = 0.0;
};

struct Face {
    int tet_plus = -1;
    int tet_minus = -1;
    std::array<int, 3> verts{};
    Vec3 normal{};  // unit, oriented from tet_plus to tet_minus
    double area = 0.0;
};

/// Background tets intersected by the discrete manifold, with the dof map of
/// their vertices and the interior faces shared by two active tets.
struct ActiveMesh {
    std::vector<int> tet_ids;        // sorted
    std::vector<char> tet_active;    // per background tet
    std::vector<int> vertex_to_dof;  // -1 when inactive
    std::vector<int> dof_to_vertex;
    std::vector<Face> faces;
    double measure_tol = 0.0;

    int n_dofs() const { return static_cast<int>(dof_to_vertex.size()); }
    bool is_active(int tet) const { return tet_active[static_cast<size_t>(tet)] != 0; }
};

BackgroundMesh build_background(const BoxSpec& box);
ActiveMesh extract_active(const BackgroundMesh& bg, const DiscreteManifold& dm);
std::vector<Face> interior_faces(const ActiveMesh& active, const BackgroundMesh& bg);

/// Active tets without any face neighbor in the active mesh. Expected empty
/// for a resolved manifold; reported as a warning by the drivers.
std::vector<int> isolated_active_tets(const ActiveMesh& active, const BackgroundMesh& bg);

// P1 element utilities.
std::array<Vec3, 4> tet_coords(const BackgroundMesh& bg, int tet);
double tet_volume(const std::array<Vec3, 4>& p);
Vec3 tet_centroid(const std::array<Vec3, 4>& p);
std::array<Vec3, 4> hat_gradients(const std::array<Vec3, 4>& p);
std::array<double, 4> barycentric(const std::array<Vec3, 4>& p, const Vec3& x);

/// Legacy ASCII VTK export of the active mesh (unstructured grid, cell type 10).
void write_vtk_active(const std::string& path, const BackgroundMesh& bg, const ActiveMesh& active);

}  // namespace cutfem
