#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "hyper/basis.hpp"
#include "hyper/quadrature.hpp"

namespace hyper {

enum class Variant { Plain, Filtered, Lasso, Hard, Hybrid, Tikhonov };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

// Samples aligned with rule nodes.  When the noise vector is present,
// values - noise are the clean samples (kept for the error decomposition).
struct SampleVector {
    Eigen::VectorXd values;
    std::optional<Eigen::VectorXd> noise;

    Eigen::VectorXd clean() const {
        return noise ? Eigen::VectorXd(values - *noise) : values;
    }
};

struct RegularizationParams {
    double lambda = 0.0;
    Eigen::VectorXd mu;  // empty = all ones

    double mu_at(Eigen::Index k) const { return mu.size() ? mu[k] : 1.0; }
};

// h(x) = 1 on [0,1/2], sin^2(pi x) on (1/2,1), 0 on [1,inf).  The outer
// branches are exact so that filtered coefficients vanish identically at
// deg/L >= 1.
double sine_squared_filter(double x);

struct FilterFunction {
    std::function<double(double)> h;
    Eigen::VectorXd values;  // h(deg Phi_k / L) per basis element

    static FilterFunction sine_squared(const BasisSpec& basis);
    static FilterFunction constant_one(const BasisSpec& basis);
};

template <typename Scalar>
Scalar soft_threshold(Scalar a, Scalar k) {
    return std::max(Scalar(0), a - k) + std::min(Scalar(0), a + k);
}

template <typename Scalar>
Scalar hard_threshold(Scalar a, Scalar k) {
    return std::abs(a) > k ? a : Scalar(0);
}

// alpha_k = sum_j w_j f(x_j) Phi_k(x_j), i.e. A^T W f.
Eigen::VectorXd hyper_coefficients(const Eigen::VectorXd& samples,
                                   const Eigen::MatrixXd& vandermonde,
                                   const QuadratureRule& rule);

struct Estimate {
    Variant variant = Variant::Plain;
    Eigen::VectorXd coeffs;
    double lambda = 0.0;
};

// Coefficientwise transforms of the hyperinterpolation coefficients:
//   Plain     alpha
//   Filtered  h_k * alpha_k
//   Lasso     soft(alpha_k, lambda*mu_k)
//   Hard      hard(alpha_k, lambda)
//   Hybrid    h_k * soft(alpha_k, lambda*mu_k)
//   Tikhonov  alpha_k / (1 + lambda)
Estimate estimate(Variant variant, const Eigen::VectorXd& alpha,
                  const RegularizationParams& params, const FilterFunction& filter);

Eigen::VectorXd evaluate_estimate(const Estimate& est, const BasisSpec& basis,
                                  const Eigen::MatrixXd& points);

// b_k = 0 for deg/L <= 1/2, sqrt(1/h_k - 1) for deg/L in (1/2,1); elements
// with deg/L = 1 are flagged instead (their coefficient is forced to zero).
struct BCoefficients {
    Eigen::VectorXd b;
    std::vector<bool> at_cutoff;
};

BCoefficients b_coefficients(const FilterFunction& filter, const BasisSpec& basis);

}  // namespace hyper
