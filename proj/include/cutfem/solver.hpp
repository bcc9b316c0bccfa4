#pragma once

#include <vector>

#include "cutfem/csr.hpp"
#include "cutfem/cutcell.hpp"
#include "cutfem/mesh.hpp"

namespace cutfem {

struct CgConfig {
    double rel_tol = 1e-10;
    int max_iter = 0;  // 0: 20 * n
    bool jacobi = true;
    bool deflate_constants = false;
    bool track_energy = false;  // log 0.5 x'Ax - b'x per iteration (costs a matvec)
};

struct CgResult {
    std::vector<double> x;
    int iterations = 0;
    bool converged = false;
    double rel_residual = 0.0;
    std::vector<double> energy;
};

CgResult cg_solve(const Csr& A, const std::vector<double>& b, const CgConfig& cfg = {});

struct EigenConfig {
    double rel_change = 1e-8;
    int power_max_iter = 10000;
    int inverse_max_iter = 10000;
    int refinements = 3;        // extra inverse-iteration polish steps
    double inner_rel_tol = 1e-12;
    int inner_max_iter = 0;     // 0: 20 * n
    unsigned seed = 12345;
};

struct EigenEstimate {
    double lambda_max = 0.0;
    double lambda_min_nonzero = 0.0;
    int iterations = 0;
    bool converged = true;
};

/// Largest eigenvalue by power iteration, smallest nonzero one by inverse
/// power iteration (CG inner solves); `deflate` restricts both to the
/// complement of the constant vector.
EigenEstimate lambda_extremes(const Csr& A, bool deflate, const EigenConfig& cfg = {});

double condition_number(const Csr& A, bool deflate, const EigenConfig& cfg = {});

/// Subtract the manifold average so the result has zero mean over Gamma_h.
std::vector<double> post_normalize(const std::vector<double>& u, const BackgroundMesh& bg,
                                   const ActiveMesh& active, const DiscreteManifold& dm);

}  // namespace cutfem
