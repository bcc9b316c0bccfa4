#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cutfem/vec3.hpp"

namespace cutfem {

enum class ManifoldKind {
    LevelSetTorus,       // codim 1, zero set of x3^2 + (sqrt(x1^2+x2^2) - R)^2 - r^2
    LevelSetSphere,      // codim 1, zero set of |x|^2 - radius^2
    LevelSetPlane,       // codim 1, zero set of x3 - z0 (validation manifold)
    ParametricTorusLine  // codim 2, curve winding N times around the torus tube
};

/// Analytic description of the embedded manifold, optionally rigidly translated.
/// The translation is realized by mapping query points into the untranslated
/// frame, so all formulas below are written for offset = 0.
struct ManifoldSpec {
    ManifoldKind kind = ManifoldKind::LevelSetTorus;
    double R = 1.0;       // torus major radius
    double r = 0.5;       // torus minor radius
    int winding = 3;      // torus line winding number N
    double radius = 1.0;  // sphere radius
    double z0 = 0.0;      // plane height
    Vec3 offset{};        // rigid translation of the manifold

    int codim() const { return kind == ManifoldKind::ParametricTorusLine ? 2 : 1; }
    int dim() const { return 3 - codim(); }

    static ManifoldSpec torus(double R, double r) {
        ManifoldSpec m;
        m.kind = ManifoldKind::LevelSetTorus;
        m.R = R;
        m.r = r;
        return m;
    }
    static ManifoldSpec sphere(double radius) {
        ManifoldSpec m;
        m.kind = ManifoldKind::LevelSetSphere;
        m.radius = radius;
        return m;
    }
    static ManifoldSpec plane(double z0) {
        ManifoldSpec m;
        m.kind = ManifoldKind::LevelSetPlane;
        m.z0 = z0;
        return m;
    }
    static ManifoldSpec torus_line(double R, double r, int N) {
        ManifoldSpec m;
        m.kind = ManifoldKind::ParametricTorusLine;
        m.R = R;
        m.r = r;
        m.winding = N;
        return m;
    }
};

/// Result of the closest point projection p(x).
/// params holds the surface angles (phi, theta) for the torus/sphere,
/// (t, 0) for the torus line, and (x1, x2) for the plane.
struct ClosestPoint {
    Vec3 point{};   // p(x), on the (translated) manifold
    double rho = 0; // dist(x, manifold)
    std::array<double, 2> params{};
};

struct LevelSetValue {
    double value = 0;
    Vec3 gradient{};
};

/// Orthonormal tangent/normal frame and the induced projectors at a manifold point.
struct Frames {
    std::vector<Vec3> tangents;
    std::vector<Vec3> normals;
    Mat3 P;  // tangential projector, sum t_i t_i^T
    Mat3 Q;  // normal projector, I - P
};

LevelSetValue level_set_eval(const ManifoldSpec& m, const Vec3& x);
ClosestPoint closest_point(const ManifoldSpec& m, const Vec3& x);
Frames frames(const ManifoldSpec& m, const ClosestPoint& cp);

/// Extension by the pull back: evaluates g at the closest point of x.
double extend(const ManifoldSpec& m, const std::function<double(const ClosestPoint&)>& g,
              const Vec3& x);

/// Exact measure of the manifold (surface area or curve length).
/// The torus line length is evaluated by adaptive quadrature of |gamma'|.
double analytic_measure(const ManifoldSpec& m);

// Torus line evaluators (parameter t in [0, 2pi), untranslated frame).
Vec3 curve_point(const ManifoldSpec& m, double t);
Vec3 curve_velocity(const ManifoldSpec& m, double t);
Vec3 curve_acceleration(const ManifoldSpec& m, double t);

/// Reference solution on the manifold: exact u, its tangential gradient, and
/// the right hand side of the reaction problem -lap_G u + u = f.
struct ManufacturedCase {
    std::function<double(const ClosestPoint&)> u;
    std::function<Vec3(const ClosestPoint&)> grad_u;  // tangential, Q grad = 0
    std::function<double(const ClosestPoint&)> f;
    bool reaction = true;
};

ManufacturedCase manufactured_torus_surface(double R = 1.0, double r = 0.5);
ManufacturedCase manufactured_torus_line(double R = 1.0, double r = 0.5, int N = 3);
ManufacturedCase manufactured_constant(double c);

}  // namespace cutfem
