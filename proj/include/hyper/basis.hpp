#pragma once

#include <Eigen/Dense>

#include "hyper/domain.hpp"
#include "hyper/quadrature.hpp"

namespace hyper {

enum class BasisKind { Legendre, Ridge, SphericalHarmonic, ChebyshevTensor, NumericalQR };

// Ordered orthonormal basis of P_L(domain) with nondecreasing total degrees.
// An optional upper-triangular postmultiplier maps the raw analytic family to
// the returned one (used for the numerically orthonormalized union-of-disks
// basis and by renormalize_if_needed); triangularity preserves degrees.
struct BasisSpec {
    Domain domain = Domain::interval();
    int L = 0;
    int d = 0;
    BasisKind kind = BasisKind::Legendre;
    Eigen::VectorXi degrees;

    Eigen::MatrixXi exponents;  // per-element tensor indices (cube, union raw basis)
    Eigen::Vector2d box_lo = Eigen::Vector2d::Zero();  // union bounding box
    Eigen::Vector2d box_hi = Eigen::Vector2d::Zero();

    Eigen::MatrixXd transform;  // d x d upper triangular; empty = identity
};

// dim P_L: interval L+1, disk and union (L+1)(L+2)/2, sphere (L+1)^2,
// cube binomial(L+3,3).
int basis_dimension(const Domain& domain, int L);

// Requires rule exactness >= 2L.  Union-of-disks uses the weighted QR
// construction sqrt(W)*V = Q*R over the bounding-box Chebyshev family and
// throws validation_error on rank deficiency or condition number > 1e12.
BasisSpec build_basis(const Domain& domain, int L, const QuadratureRule& rule);

// Entry [i][k] = Phi_k(points.row(i)).  Evaluation away from the domain is
// the polynomial's analytic continuation (sphere points are projected
// radially, as harmonics are evaluated on the sphere itself).
Eigen::MatrixXd evaluate_basis(const BasisSpec& basis, const Eigen::MatrixXd& points);

// evaluate_basis at the rule's own nodes.
Eigen::MatrixXd vandermonde_matrix(const BasisSpec& basis, const QuadratureRule& rule);

// max |A^T W A - I| entrywise.
double gram_deviation(const Eigen::MatrixXd& vandermonde, const Eigen::VectorXd& weights);

// Returns the basis unchanged when the discrete Gram matrix is within 1e-8
// of identity; otherwise re-orthonormalizes through weighted QR (same span,
// still triangular) and verifies the Gram check.
BasisSpec renormalize_if_needed(const BasisSpec& basis, const QuadratureRule& rule);

}  // namespace hyper
