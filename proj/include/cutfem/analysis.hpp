#pragma once

#include <utility>
#include <vector>

#include "cutfem/cutcell.hpp"
#include "cutfem/geometry.hpp"
#include "cutfem/mesh.hpp"

namespace cutfem {

struct ErrorReport {
    double l2 = 0.0;
    double h1_semi = 0.0;
    double h1 = 0.0;
    double h = 0.0;
    int n_dof = 0;
};

/// L2 and tangential-H1 errors of a P1 coefficient vector against the
/// manufactured solution, integrated facet-wise with degree-4 (triangle) /
/// degree-5 (segment) rules. `subdivide` refines each facet 4^s / 2^s times
/// before applying the rule (used for quadrature-convergence checks).
ErrorReport error_norms(const std::vector<double>& u_h, const ManufacturedCase& mc,
                        const BackgroundMesh& bg, const ActiveMesh& active,
                        const DiscreteManifold& dm, const ManifoldSpec& m, int subdivide = 0);

/// Orders log2(E_{k-1}/E_k) for a factor-2 refinement ladder of (h, E) pairs.
std::vector<double> eoc(const std::vector<std::pair<double, double>>& errors);

}  // namespace cutfem
