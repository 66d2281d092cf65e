#include "hyper/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hyper/errors.hpp"

namespace hyper {

LambdaSchedule lambda_schedule(const Eigen::VectorXd& alpha) {
    LambdaSchedule schedule;
    schedule.zeta = alpha.cwiseAbs();
    std::sort(schedule.zeta.data(), schedule.zeta.data() + schedule.zeta.size(),
              std::greater<double>());
    return schedule;
}

int sparsity(const Estimate& est) {
    int count = 0;
    for (Eigen::Index k = 0; k < est.coeffs.size(); ++k)
        if (est.coeffs[k] != 0.0) ++count;
    return count;
}

double J_term(const Eigen::VectorXd& z, const Eigen::VectorXd& alpha) {
    if (z.size() != alpha.size()) throw config_error("J_term: dimension mismatch");
    return z.squaredNorm() - 2.0 * z.dot(alpha);
}

double H_term(const Eigen::VectorXd& z, const Eigen::VectorXd& eps,
              const Eigen::MatrixXd& vandermonde, const QuadratureRule& rule) {
    if (eps.size() != vandermonde.rows() || z.size() != vandermonde.cols())
        throw config_error("H_term: dimension mismatch");
    return 2.0 * z.dot(vandermonde.transpose() * rule.weights.cwiseProduct(eps));
}

DecompositionTerms decompose(const Estimate& est, const Eigen::VectorXd& alpha,
                             const SampleVector& samples,
                             const Eigen::MatrixXd& vandermonde,
                             const QuadratureRule& rule) {
    if (!samples.noise)
        throw config_error("decompose: noise vector required (clean samples unknown)");

    const Eigen::VectorXd clean = samples.clean();
    DecompositionTerms terms;
    terms.J = J_term(est.coeffs, alpha);
    terms.H = H_term(est.coeffs, *samples.noise, vandermonde, rule);
    terms.constant = rule.weights.dot(clean.cwiseProduct(clean));
    const Eigen::VectorXd residual = vandermonde * est.coeffs - clean;
    terms.direct = rule.weights.dot(residual.cwiseProduct(residual));
    return terms;
}

double K_of_f(const Eigen::VectorXd& alpha, const RegularizationParams& params,
              const FilterFunction& filter) {
    if (filter.values.size() != alpha.size())
        throw config_error("K_of_f: filter dimension mismatch");
    double K = 0.0;
    for (Eigen::Index k = 0; k < alpha.size(); ++k) {
        const double hs =
            filter.values[k] * soft_threshold(alpha[k], params.lambda * params.mu_at(k));
        K += hs * alpha[k] - hs * hs;
    }
    return K;
}

double discrete_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                      const QuadratureRule& rule) {
    if (u.size() != v.size() || u.size() != rule.size())
        throw config_error("discrete_inner: dimension mismatch");
    return rule.weights.dot(u.cwiseProduct(v));
}

double l2_error(const Estimate& est, const BasisSpec& basis,
                const std::function<double(const Eigen::VectorXd&)>& f,
                const QuadratureRule& eval_rule) {
    const Eigen::VectorXd p = evaluate_estimate(est, basis, eval_rule.nodes);
    Eigen::VectorXd fv(eval_rule.size());
    Eigen::VectorXd node(eval_rule.nodes.cols());
    for (Eigen::Index j = 0; j < eval_rule.size(); ++j) {
        node = eval_rule.nodes.row(j);
        fv[j] = f(node);
    }
    return l2_error_from_values(p, fv, eval_rule);
}

double l2_error_from_values(const Eigen::VectorXd& estimate_values,
                            const Eigen::VectorXd& f_values,
                            const QuadratureRule& eval_rule) {
    const Eigen::VectorXd diff = estimate_values - f_values;
    return std::sqrt(eval_rule.weights.dot(diff.cwiseProduct(diff)));
}

}  // namespace hyper
