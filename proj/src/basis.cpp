#include "hyper/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hyper/errors.hpp"
#include "hyper/spherical_harmonics.hpp"

namespace hyper {

namespace {

constexpr double kPi = std::numbers::pi;

// Orthonormal Legendre values at x: Phi_k = sqrt((2k+1)/2) P_k, k = 0..L.
void legendre_row(double x, int L, Eigen::Ref<Eigen::RowVectorXd> out) {
    double p0 = 1.0, p1 = x;
    out[0] = std::sqrt(0.5);
    if (L >= 1) out[1] = std::sqrt(1.5) * x;
    for (int k = 1; k < L; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        out[k + 1] = std::sqrt((2.0 * k + 3.0) / 2.0) * p2;
        p0 = p1;
        p1 = p2;
    }
}

// Chebyshev U_m values at t, m = 0..L.
void chebyshev_u_row(double t, int L, Eigen::Ref<Eigen::RowVectorXd> out) {
    out[0] = 1.0;
    if (L >= 1) out[1] = 2.0 * t;
    for (int m = 1; m < L; ++m) out[m + 1] = 2.0 * t * out[m] - out[m - 1];
}

// Orthonormal Chebyshev values at t, k = 0..L (weight 1/(pi sqrt(1-t^2))).
void chebyshev_t_row(double t, int L, Eigen::Ref<Eigen::RowVectorXd> out) {
    out[0] = 1.0;
    if (L >= 1) out[1] = std::numbers::sqrt2 * t;
    for (int k = 1; k < L; ++k)
        out[k + 1] = 2.0 * t * out[k] - (k == 1 ? std::numbers::sqrt2 : 1.0) * out[k - 1];
}

Eigen::MatrixXd evaluate_interval(const BasisSpec& basis, const Eigen::MatrixXd& pts) {
    Eigen::MatrixXd A(pts.rows(), basis.d);
    for (Eigen::Index i = 0; i < pts.rows(); ++i)
        legendre_row(pts(i, 0), basis.L, A.row(i));
    return A;
}

// Logan-Shepp ridge polynomials: block m holds the m+1 elements
// U_m(<x, xi_mj>)/sqrt(pi) with xi_mj at angles j*pi/(m+1).
Eigen::MatrixXd evaluate_ridge(const BasisSpec& basis, const Eigen::MatrixXd& pts) {
    const int L = basis.L;
    Eigen::MatrixXd A(pts.rows(), basis.d);
    Eigen::RowVectorXd u(L + 1);
    const double scale = 1.0 / std::sqrt(kPi);
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        int col = 0;
        for (int m = 0; m <= L; ++m) {
            for (int j = 0; j <= m; ++j) {
                const double angle = j * kPi / (m + 1);
                const double t = pts(i, 0) * std::cos(angle) + pts(i, 1) * std::sin(angle);
                chebyshev_u_row(t, m, u.head(m + 1));
                A(i, col++) = scale * u[m];
            }
        }
    }
    return A;
}

Eigen::MatrixXd evaluate_chebyshev_tensor(const BasisSpec& basis,
                                          const Eigen::MatrixXd& pts) {
    const int L = basis.L;
    Eigen::MatrixXd A(pts.rows(), basis.d);
    Eigen::RowVectorXd tx(L + 1), ty(L + 1), tz(L + 1);
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        chebyshev_t_row(pts(i, 0), L, tx);
        chebyshev_t_row(pts(i, 1), L, ty);
        chebyshev_t_row(pts(i, 2), L, tz);
        for (int k = 0; k < basis.d; ++k)
            A(i, k) = tx[basis.exponents(k, 0)] * ty[basis.exponents(k, 1)] *
                      tz[basis.exponents(k, 2)];
    }
    return A;
}

// Raw family behind the union-of-disks basis: product Chebyshev on the
// bounding rectangle, total-degree blocks, lexicographic within a block.
Eigen::MatrixXd evaluate_box_chebyshev(const BasisSpec& basis,
                                       const Eigen::MatrixXd& pts) {
    const int L = basis.L;
    Eigen::MatrixXd A(pts.rows(), basis.d);
    Eigen::RowVectorXd tx(L + 1), ty(L + 1);
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        const double u = (2.0 * pts(i, 0) - basis.box_lo[0] - basis.box_hi[0]) /
                         (basis.box_hi[0] - basis.box_lo[0]);
        const double v = (2.0 * pts(i, 1) - basis.box_lo[1] - basis.box_hi[1]) /
                         (basis.box_hi[1] - basis.box_lo[1]);
        chebyshev_t_row(u, L, tx);
        chebyshev_t_row(v, L, ty);
        for (int k = 0; k < basis.d; ++k)
            A(i, k) = tx[basis.exponents(k, 0)] * ty[basis.exponents(k, 1)];
    }
    return A;
}

Eigen::MatrixXd evaluate_raw(const BasisSpec& basis, const Eigen::MatrixXd& pts) {
    switch (basis.kind) {
        case BasisKind::Legendre: return evaluate_interval(basis, pts);
        case BasisKind::Ridge: return evaluate_ridge(basis, pts);
        case BasisKind::SphericalHarmonic:
            return real_spherical_harmonics(pts, basis.L);
        case BasisKind::ChebyshevTensor: return evaluate_chebyshev_tensor(basis, pts);
        case BasisKind::NumericalQR: return evaluate_box_chebyshev(basis, pts);
    }
    throw std::logic_error("evaluate_raw: unknown basis kind");
}

// Weighted QR pass: returns the upper-triangular R (positive diagonal) of
// sqrt(W) * A = Q * R, checking rank and conditioning.
Eigen::MatrixXd weighted_qr_factor(const Eigen::MatrixXd& A, const Eigen::VectorXd& w) {
    const Eigen::MatrixXd scaled = w.array().sqrt().matrix().asDiagonal() * A;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(scaled);
    Eigen::MatrixXd R = qr.matrixQR()
                            .topRows(A.cols())
                            .template triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < R.rows(); ++k)
        if (R(k, k) < 0.0) R.row(k) *= -1.0;

    const Eigen::VectorXd diag = R.diagonal().cwiseAbs();
    if (diag.minCoeff() <= 0.0 ||
        diag.minCoeff() < 1e-14 * diag.maxCoeff()) {
        throw validation_error(
            "basis: weighted Vandermonde matrix is rank deficient; the rule "
            "cannot resolve P_L");
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
    const double cond = svd.singularValues()(0) /
                        svd.singularValues()(svd.singularValues().size() - 1);
    if (cond > 1e12) {
        std::ostringstream msg;
        msg << "basis: raw Vandermonde condition number " << cond << " exceeds 1e12";
        throw validation_error(msg.str());
    }
    return R;
}

void apply_qr_transform(BasisSpec& basis, const QuadratureRule& rule) {
    const Eigen::MatrixXd A = evaluate_basis(basis, rule.nodes);
    const Eigen::MatrixXd R = weighted_qr_factor(A, rule.weights);
    const Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(basis.d, basis.d));
    if (basis.transform.size() == 0)
        basis.transform = Rinv;
    else
        basis.transform = basis.transform * Rinv;
}

}  // namespace

int basis_dimension(const Domain& domain, int L) {
    switch (domain.kind()) {
        case DomainKind::Interval: return L + 1;
        case DomainKind::Disk:
        case DomainKind::UnionOfDisks: return (L + 1) * (L + 2) / 2;
        case DomainKind::Sphere: return (L + 1) * (L + 1);
        case DomainKind::Cube: return (L + 1) * (L + 2) * (L + 3) / 6;
    }
    return 0;
}

BasisSpec build_basis(const Domain& domain, int L, const QuadratureRule& rule) {
    if (L < 0) throw config_error("build_basis: L must be >= 0");
    if (rule.exactness < 2 * L)
        throw config_error("build_basis: rule exactness below 2L");

    BasisSpec basis;
    basis.domain = domain;
    basis.L = L;
    basis.d = basis_dimension(domain, L);
    basis.degrees.resize(basis.d);

    switch (domain.kind()) {
        case DomainKind::Interval: {
            basis.kind = BasisKind::Legendre;
            for (int k = 0; k <= L; ++k) basis.degrees[k] = k;
            break;
        }
        case DomainKind::Disk: {
            basis.kind = BasisKind::Ridge;
            int col = 0;
            for (int m = 0; m <= L; ++m)
                for (int j = 0; j <= m; ++j) basis.degrees[col++] = m;
            break;
        }
        case DomainKind::Sphere: {
            basis.kind = BasisKind::SphericalHarmonic;
            int col = 0;
            for (int l = 0; l <= L; ++l)
                for (int m = -l; m <= l; ++m) basis.degrees[col++] = l;
            break;
        }
        case DomainKind::Cube: {
            basis.kind = BasisKind::ChebyshevTensor;
            basis.exponents.resize(basis.d, 3);
            int col = 0;
            for (int deg = 0; deg <= L; ++deg)
                for (int a = 0; a <= deg; ++a)
                    for (int b = 0; a + b <= deg; ++b) {
                        basis.exponents.row(col) << a, b, deg - a - b;
                        basis.degrees[col++] = deg;
                    }
            break;
        }
        case DomainKind::UnionOfDisks: {
            basis.kind = BasisKind::NumericalQR;
            basis.exponents.resize(basis.d, 2);
            int col = 0;
            for (int deg = 0; deg <= L; ++deg)
                for (int a = 0; a <= deg; ++a) {
                    basis.exponents.row(col) << a, deg - a;
                    basis.degrees[col++] = deg;
                }
            Eigen::Vector2d lo(1e300, 1e300), hi(-1e300, -1e300);
            for (const auto& dsk : domain.disks()) {
                lo = lo.cwiseMin(dsk.center.array() - dsk.radius).matrix();
                hi = hi.cwiseMax(dsk.center.array() + dsk.radius).matrix();
            }
            basis.box_lo = lo;
            basis.box_hi = hi;
            apply_qr_transform(basis, rule);
            break;
        }
    }

    // One corrective pass if roundoff (or an analytic constant) left the
    // discrete Gram matrix off identity.
    return renormalize_if_needed(basis, rule);
}

Eigen::MatrixXd evaluate_basis(const BasisSpec& basis, const Eigen::MatrixXd& points) {
    if (points.cols() != basis.domain.ambient_dim())
        throw config_error("evaluate_basis: point dimension mismatch");
    Eigen::MatrixXd A = evaluate_raw(basis, points);
    if (basis.transform.size()) A = A * basis.transform;
    return A;
}

Eigen::MatrixXd vandermonde_matrix(const BasisSpec& basis, const QuadratureRule& rule) {
    return evaluate_basis(basis, rule.nodes);
}

double gram_deviation(const Eigen::MatrixXd& vandermonde, const Eigen::VectorXd& weights) {
    const Eigen::MatrixXd gram =
        vandermonde.transpose() * weights.asDiagonal() * vandermonde;
    const Eigen::Index d = vandermonde.cols();
    return (gram - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

BasisSpec renormalize_if_needed(const BasisSpec& basis, const QuadratureRule& rule) {
    const Eigen::MatrixXd A = vandermonde_matrix(basis, rule);
    if (gram_deviation(A, rule.weights) <= 1e-8) return basis;

    BasisSpec fixed = basis;
    apply_qr_transform(fixed, rule);
    const double dev = gram_deviation(vandermonde_matrix(fixed, rule), rule.weights);
    if (dev > 1e-8) {
        std::ostringstream msg;
        msg << "renormalize_if_needed: Gram deviation " << dev
            << " persists after re-orthonormalization";
        throw validation_error(msg.str());
    }
    return fixed;
}

}  // namespace hyper
