#include "hyper/estimators.hpp"

#include <cmath>
#include <numbers>

#include "hyper/errors.hpp"

namespace hyper {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Filtered: return "filtered";
        case Variant::Lasso: return "lasso";
        case Variant::Hard: return "hard";
        case Variant::Hybrid: return "hybrid";
        case Variant::Tikhonov: return "tikhonov";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    for (Variant v : {Variant::Plain, Variant::Filtered, Variant::Lasso,
                      Variant::Hard, Variant::Hybrid, Variant::Tikhonov}) {
        if (name == variant_name(v)) return v;
    }
    return std::nullopt;
}

double sine_squared_filter(double x) {
    if (x <= 0.5) return 1.0;
    if (x >= 1.0) return 0.0;
    const double s = std::sin(std::numbers::pi * x);
    return s * s;
}

FilterFunction FilterFunction::sine_squared(const BasisSpec& basis) {
    FilterFunction filter;
    filter.h = [](double x) { return sine_squared_filter(x); };
    filter.values.resize(basis.d);
    for (int k = 0; k < basis.d; ++k)
        filter.values[k] = sine_squared_filter(double(basis.degrees[k]) / basis.L);
    return filter;
}

FilterFunction FilterFunction::constant_one(const BasisSpec& basis) {
    FilterFunction filter;
    filter.h = [](double) { return 1.0; };
    filter.values = Eigen::VectorXd::Ones(basis.d);
    return filter;
}

Eigen::VectorXd hyper_coefficients(const Eigen::VectorXd& samples,
                                   const Eigen::MatrixXd& vandermonde,
                                   const QuadratureRule& rule) {
    if (samples.size() != vandermonde.rows() || samples.size() != rule.size())
        throw config_error("hyper_coefficients: dimension mismatch");
    return vandermonde.transpose() * rule.weights.cwiseProduct(samples);
}

Estimate estimate(Variant variant, const Eigen::VectorXd& alpha,
                  const RegularizationParams& params, const FilterFunction& filter) {
    if (params.lambda < 0.0) throw config_error("estimate: lambda must be >= 0");
    if (params.mu.size() && params.mu.size() != alpha.size())
        throw config_error("estimate: mu dimension mismatch");

    Estimate est;
    est.variant = variant;
    est.lambda = params.lambda;
    est.coeffs.resize(alpha.size());

    const bool needs_filter =
        variant == Variant::Filtered || variant == Variant::Hybrid;
    if (needs_filter && filter.values.size() != alpha.size())
        throw config_error("estimate: filter not precomputed for this basis");

    for (Eigen::Index k = 0; k < alpha.size(); ++k) {
        switch (variant) {
            case Variant::Plain:
                est.coeffs[k] = alpha[k];
                break;
            case Variant::Filtered:
                est.coeffs[k] = filter.values[k] * alpha[k];
                break;
            case Variant::Lasso:
                est.coeffs[k] = soft_threshold(alpha[k], params.lambda * params.mu_at(k));
                break;
            case Variant::Hard:
                est.coeffs[k] = hard_threshold(alpha[k], params.lambda);
                break;
            case Variant::Hybrid:
                est.coeffs[k] = filter.values[k] *
                                soft_threshold(alpha[k], params.lambda * params.mu_at(k));
                break;
            case Variant::Tikhonov:
                est.coeffs[k] = alpha[k] / (1.0 + params.lambda);
                break;
        }
    }
    return est;
}

Eigen::VectorXd evaluate_estimate(const Estimate& est, const BasisSpec& basis,
                                  const Eigen::MatrixXd& points) {
    if (est.coeffs.size() != basis.d)
        throw config_error("evaluate_estimate: coefficient dimension mismatch");
    return evaluate_basis(basis, points) * est.coeffs;
}

BCoefficients b_coefficients(const FilterFunction& filter, const BasisSpec& basis) {
    if (filter.values.size() != basis.d)
        throw config_error("b_coefficients: filter not precomputed for this basis");

    BCoefficients out;
    out.b = Eigen::VectorXd::Zero(basis.d);
    out.at_cutoff.assign(basis.d, false);
    for (int k = 0; k < basis.d; ++k) {
        const double x = double(basis.degrees[k]) / basis.L;
        if (x >= 1.0) {
            out.at_cutoff[k] = true;  // h = 0, coefficient forced to zero
        } else if (x > 0.5) {
            out.b[k] = std::sqrt(1.0 / filter.values[k] - 1.0);
        }
    }
    return out;
}

}  // namespace hyper
