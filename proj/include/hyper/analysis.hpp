#pragma once

#include <Eigen/Dense>
#include <functional>

#include "hyper/basis.hpp"
#include "hyper/estimators.hpp"
#include "hyper/quadrature.hpp"

namespace hyper {

// lambda(s) = s-th largest |hyperinterpolation coefficient| (1-based).
struct LambdaSchedule {
    Eigen::VectorXd zeta;  // descending

    double operator()(int s) const { return zeta[s - 1]; }
    int size() const { return static_cast<int>(zeta.size()); }
};

LambdaSchedule lambda_schedule(const Eigen::VectorXd& alpha);

// Number of nonzero coefficients.
int sparsity(const Estimate& est);

// J(z) = sum z_k^2 - 2 z_k alpha_k  (nonpositive for the shrinking variants
// under the lambda(s) rule).
double J_term(const Eigen::VectorXd& z, const Eigen::VectorXd& alpha);

// H(z) = 2 sum_k z_k sum_j w_j eps_j Phi_k(x_j) = 2 z^T (A^T W eps).
double H_term(const Eigen::VectorXd& z, const Eigen::VectorXd& eps,
              const Eigen::MatrixXd& vandermonde, const QuadratureRule& rule);

// Exact split of the weighted residual against the clean samples:
//   direct = ||W^(1/2)(A z - f)||^2 = J + H + constant,
// where constant = ||W^(1/2) f||^2 and alpha comes from the noisy samples.
struct DecompositionTerms {
    double J = 0.0;
    double H = 0.0;
    double constant = 0.0;
    double direct = 0.0;
};

DecompositionTerms decompose(const Estimate& est, const Eigen::VectorXd& alpha,
                             const SampleVector& samples,
                             const Eigen::MatrixXd& vandermonde,
                             const QuadratureRule& rule);

// K(f) = sum_k { h_k S(alpha_k) alpha_k - [h_k S(alpha_k)]^2 }, nonnegative.
double K_of_f(const Eigen::VectorXd& alpha, const RegularizationParams& params,
              const FilterFunction& filter);

double discrete_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                      const QuadratureRule& rule);

// sqrt( sum_j w_j (p(x_j) - f(x_j))^2 ) over the evaluation rule's nodes.
double l2_error(const Estimate& est, const BasisSpec& basis,
                const std::function<double(const Eigen::VectorXd&)>& f,
                const QuadratureRule& eval_rule);

// Same, with the estimate's values at the evaluation nodes precomputed.
double l2_error_from_values(const Eigen::VectorXd& estimate_values,
                            const Eigen::VectorXd& f_values,
                            const QuadratureRule& eval_rule);

}  // namespace hyper
