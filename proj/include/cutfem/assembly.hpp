#pragma once

#include <optional>
#include <vector>

#include "cutfem/csr.hpp"
#include "cutfem/cutcell.hpp"
#include "cutfem/geometry.hpp"
#include "cutfem/mesh.hpp"

namespace cutfem {

enum class BilinearKind { Tangential, Full };
enum class StabKind { None, Face, FullGradient, NormalGradient };

struct FormConfig {
    BilinearKind bilinear = BilinearKind::Full;
    StabKind stabilization = StabKind::None;
    double tau = 0.0;
    double alpha = 2.0;  // normal-gradient exponent, in [0, 2]
    bool with_mass = false;
    int codim = 1;
    // Replaces the default h exponent of the chosen stabilization
    // (1-c face, 2-c full gradient, alpha-c normal gradient) when set.
    std::optional<double> stab_exponent;
};

struct LinearSystem {
    Csr A;
    std::vector<double> b;
};

/// Stiffness over the cut facets (tangential or full ambient gradients),
/// plus the mass term on the same facets when cfg.with_mass is set.
Csr assemble_surface_bilinear(const BackgroundMesh& bg, const ActiveMesh& active,
                              const DiscreteManifold& dm, const FormConfig& cfg);

/// Face-jump stabilization h^{1-c} (n_F.[grad v], n_F.[grad w]) over interior faces.
Csr assemble_stab_face(const ActiveMesh& active, const BackgroundMesh& bg, int codim);

/// Full-gradient stabilization h^{2-c} (grad v, grad w) over active tets.
Csr assemble_stab_full(const ActiveMesh& active, const BackgroundMesh& bg, int codim);

/// Normal-gradient stabilization h^{alpha-c} (Q grad v, Q grad w) over active tets.
Csr assemble_stab_normal(const ActiveMesh& active, const BackgroundMesh& bg,
                         const DiscreteManifold& dm, const ManifoldSpec& m, int codim,
                         double alpha);

/// Load vector b_i = sum_K sum_q w_q f(p(x_q)) lambda_i(x_q).
std::vector<double> assemble_rhs(const BackgroundMesh& bg, const ActiveMesh& active,
                                 const DiscreteManifold& dm, const ManifoldSpec& m,
                                 const ManufacturedCase& mc);

/// Integral of a P1 coefficient vector over the discrete manifold.
double integrate_solution(const BackgroundMesh& bg, const ActiveMesh& active,
                          const DiscreteManifold& dm, const std::vector<double>& u);

/// A = bilinear (+ mass) + tau * h^{delta} * stabilization, b = load vector.
LinearSystem build_system(const BackgroundMesh& bg, const ActiveMesh& active,
                          const DiscreteManifold& dm, const ManifoldSpec& m,
                          const FormConfig& cfg, const ManufacturedCase& mc);

}  // namespace cutfem
