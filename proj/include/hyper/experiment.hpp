#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyper/analysis.hpp"
#include "hyper/basis.hpp"
#include "hyper/domain.hpp"
#include "hyper/estimators.hpp"
#include "hyper/noise.hpp"
#include "hyper/quadrature.hpp"

namespace hyper {

struct TestFunction {
    std::string name;
    int ambient_dim = 1;
    std::vector<DomainKind> domains;
    std::function<double(const Eigen::VectorXd&)> f;
};

const TestFunction& test_function(const std::string& name);
std::vector<std::string> test_function_names();
std::string default_test_function(DomainKind kind);

// Wendland C6 bump used by the sphere test function.
double wendland_c6(double r);
double wendland_scale();  // support radius 9*Gamma(5/2)/(2*Gamma(3))

struct ExperimentConfig {
    Domain domain = Domain::interval();
    int degree = 16;           // L
    std::string function;      // empty = domain default
    double sigma = 0.0;        // Gaussian noise level
    double impulse = 0.0;      // impulse noise level
    bool impulse_whole_vector = false;
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<int> lambda_indices = {10};
    std::vector<Variant> variants = {Variant::Tikhonov, Variant::Filtered,
                                     Variant::Lasso,    Variant::Hybrid,
                                     Variant::Hard,     Variant::Plain};
    std::string design_file;   // sphere approximation rule, optional
    std::string eval_design_file;  // sphere evaluation rule, optional
    std::vector<Eigen::Vector3d> wendland_centers;  // default: octahedron

    std::string out;           // CSV path; empty = stdout only
};

ExperimentConfig config_from_json_file(const std::string& path);
void apply_json(ExperimentConfig& config, const std::string& json_text);
std::string config_to_json(const ExperimentConfig& config);

// Approximation rule with exactness >= 2L for the configured domain.
QuadratureRule make_rule(const ExperimentConfig& config);

// Higher-exactness rule used for L2 errors (exactness > 2L).
QuadratureRule make_evaluation_rule(const ExperimentConfig& config);

// Everything that is fixed across trials.
struct ExperimentContext {
    QuadratureRule rule;
    BasisSpec basis;
    Eigen::MatrixXd vandermonde;
    FilterFunction filter;
    QuadratureRule eval_rule;
    Eigen::MatrixXd eval_vandermonde;
    Eigen::VectorXd clean_samples;  // f at rule nodes
    Eigen::VectorXd f_at_eval;      // f at evaluation nodes
    TestFunction f;                 // resolved test function
};

ExperimentContext prepare(const ExperimentConfig& config);

// Noise vector for one trial (Gaussian and impulse components summed,
// independent sub-streams).
Eigen::VectorXd trial_noise(const ExperimentConfig& config, std::uint64_t trial,
                            Eigen::Index n);

struct RunRow {
    Variant variant = Variant::Plain;
    int lambda_index = 0;
    double lambda_value = 0.0;
    double mean_error = 0.0;
    double std_error = 0.0;
    double mean_sparsity = 0.0;
};

// One row per (variant, lambda index): trial-averaged L2 errors and
// sparsities.  Deterministic given the config.
std::vector<RunRow> run_experiment(const ExperimentConfig& config);
std::vector<RunRow> run_experiment(const ExperimentConfig& config,
                                   const ExperimentContext& ctx);

struct SweepRow {
    Variant variant = Variant::Plain;
    int s = 0;
    double lambda_value = 0.0;
    double mean_sparsity = 0.0;
    double mean_error = 0.0;   // evaluation-rule L2 error
    double mean_J = 0.0;
    double mean_H = 0.0;
    double mean_direct = 0.0;  // ||W^(1/2)(A z - f)||^2 on the sampling rule
};

// lambda(s) sweep over s = s_begin, s_begin+s_step, ..., <= s_end, for the
// sparse variants in the config.  Verifies the decomposition identity
// |direct - (J + H + constant)| <= 1e-9 (1 + constant) for every trial.
std::vector<SweepRow> sweep_lambda(const ExperimentConfig& config, int s_begin,
                                   int s_end, int s_step);

void write_run_csv(const std::vector<RunRow>& rows, const std::string& path);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::string run_csv(const std::vector<RunRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// JSON sidecar with the fully resolved config, written next to `out`.
void write_sidecar(const ExperimentConfig& config, const std::string& out_path);

}  // namespace hyper
