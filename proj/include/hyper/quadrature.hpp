#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "hyper/domain.hpp"

namespace hyper {

// Positive-weight, interior-node rule with a claimed algebraic degree of
// exactness.  Immutable after construction.
struct QuadratureRule {
    Domain domain = Domain::interval();
    Eigen::MatrixXd nodes;    // N x ambient_dim, one node per row
    Eigen::VectorXd weights;  // N, all positive
    int exactness = 0;

    Eigen::Index size() const { return weights.size(); }
    double volume() const { return weights.sum(); }
};

// Gauss-Legendre on [-1,1]: n nodes, exactness 2n-1, weights summing to 2.
QuadratureRule gauss_legendre(int n);

// Unit disk, polar product rule: (L+1)-point radial Gauss-Legendre mapped to
// [0,1] times 2L+1 equispaced angles; N=(L+1)(2L+1), exactness 2L.
QuadratureRule disk_polar_rule(int L);

// Unit sphere, Gauss-Legendre in cos(theta) times trapezoidal in phi;
// (L+1)(2L+1) nodes, exactness 2L for the surface measure.
QuadratureRule sphere_product_rule(int L);

// Equal-weight spherical design read from a text file (one "x y z" node per
// line; blank lines and lines starting with '#' ignored).  Weights are
// 4*pi/N.  The claimed exactness t is validated on spherical-harmonic
// moments; failure throws validation_error naming the worst basis index.
QuadratureRule load_spherical_design(const std::string& path, int t);

// [-1,1]^3 with the product-Chebyshev weight 1/(pi^3 prod sqrt(1-x_i^2)):
// parity-selected subset of the (L+2)^3 Chebyshev-Lobatto grid, exactness 2L,
// about (L+2)^3/4 nodes.  Construction validates all Chebyshev moments of
// total degree <= 2L and throws validation_error on failure.
QuadratureRule cube_rule(int L);

// Composite rule over pairwise disjoint disks: affine images of
// disk_polar_rule(ceil(degree/2)).  Exactness `degree` by additivity.
QuadratureRule union_disks_rule(const Domain& domain, int degree);

struct ExactnessReport {
    double max_deviation = 0.0;
    int worst_index = -1;
};

// Compares discrete integrals of test functions (index, node) -> value
// against closed-form moments.  Never mutates the rule.
ExactnessReport validate_exactness(
    const QuadratureRule& rule, int count,
    const std::function<double(int, const Eigen::VectorXd&)>& evaluate,
    const std::function<double(int)>& moment);

}  // namespace hyper
