#pragma once

#include <string>
#include <vector>

#include "cutfem/analysis.hpp"
#include "cutfem/assembly.hpp"
#include "cutfem/geometry.hpp"
#include "cutfem/mesh.hpp"
#include "cutfem/solver.hpp"

namespace cutfem {

enum class ExperimentKind { Solve, Convergence, Condition, ValidateGeometry };

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Convergence;
    ManifoldSpec manifold = ManifoldSpec::torus(1.0, 0.5);
    BoxSpec box;
    int levels = 4;
    int segments0 = 100;  // polyline segments at level 0 (codim 2)
    FormConfig form;
    std::string case_name = "torus_surface";  // torus_surface | torus_line | constant
    double constant_value = 1.0;
    int delta_samples = 50;
    std::string out_dir;  // empty: no files written
    bool write_vtk = false;
    unsigned seed = 12345;
    CgConfig cg;
    EigenConfig eig;
};

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig config_from_json_file(const std::string& path);
std::string config_to_json_text(const ExperimentConfig& cfg);

struct ConvergenceRow {
    int level = 0;
    double h = 0.0;
    int n_dof = 0;
    double l2 = 0.0;
    double h1_semi = 0.0;
    double h1 = 0.0;
    double eoc_l2 = 0.0;  // NaN on the coarsest level
    double eoc_h1 = 0.0;
    bool failed = false;
    std::string message;
};

struct ConditionRow {
    double h = 0.0;
    double delta = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double kappa = 0.0;
    double h2_kappa = 0.0;
    bool converged = true;
};

struct GeometryRow {
    int level = 0;
    double h = 0.0;
    int n_facets = 0;
    double total_measure = 0.0;
    double measure_ratio = 0.0;
    double rho_max = 0.0;
    double proj_dev_max = 0.0;
};

struct SweepSummary {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    int excluded = 0;  // rows without converged eigenvalue estimates
};

struct StudyReport {
    std::string experiment;
    std::vector<ConvergenceRow> convergence;
    std::vector<ConditionRow> condition;
    std::vector<GeometryRow> geometry;
    SweepSummary h2_kappa;
    // Observed orders between consecutive geometry levels.
    std::vector<double> orders_rho;
    std::vector<double> orders_proj;
    std::vector<double> orders_measure;
};

StudyReport run_convergence(const ExperimentConfig& cfg);
StudyReport run_condition_sweep(const ExperimentConfig& cfg);
StudyReport run_validate_geometry(const ExperimentConfig& cfg);
StudyReport run_solve(const ExperimentConfig& cfg);

/// Dispatch on cfg.experiment and write results.csv / report.json (+ VTK)
/// into cfg.out_dir when it is set.
StudyReport run_experiment(const ExperimentConfig& cfg);

void write_csv(const StudyReport& rep, const std::string& path);
StudyReport read_report_csv(const std::string& path);
void write_report_json(const StudyReport& rep, const ExperimentConfig& cfg, const std::string& path);

/// Tolerance checks for --check mode; returns violated criteria (empty = ok).
std::vector<std::string> check_report(const StudyReport& rep, const ExperimentConfig& cfg);

}  // namespace cutfem
