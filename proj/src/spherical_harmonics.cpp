#include "hyper/spherical_harmonics.hpp"

#include <cmath>
#include <numbers>

namespace hyper {

Eigen::MatrixXd real_spherical_harmonics(const Eigen::MatrixXd& points, int L) {
    const Eigen::Index N = points.rows();
    const int d = (L + 1) * (L + 1);
    Eigen::MatrixXd Y(N, d);

    const double p00 = std::sqrt(1.0 / (4.0 * std::numbers::pi));
    const double sqrt2 = std::numbers::sqrt2;

    // Normalized associated Legendre column per (l,m), built by the stable
    // sectoral-then-upward recurrence.
    Eigen::VectorXd pmm(N), plm1(N), plm2(N), p(N);
    Eigen::VectorXd ct(N), st(N), cp(N), sp(N), cos_m(N), sin_m(N);

    for (Eigen::Index i = 0; i < N; ++i) {
        const double r = points.row(i).norm();
        const double z = r > 0 ? points(i, 2) / r : 1.0;
        ct[i] = z;
        const double rho = std::hypot(points(i, 0), points(i, 1));
        st[i] = r > 0 ? rho / r : 0.0;
        if (rho > 0) {
            cp[i] = points(i, 0) / rho;
            sp[i] = points(i, 1) / rho;
        } else {
            cp[i] = 1.0;
            sp[i] = 0.0;
        }
    }

    auto column = [&](int l, int m) { return l * l + l + m; };

    pmm.setConstant(p00);
    cos_m.setOnes();
    sin_m.setZero();

    for (int m = 0; m <= L; ++m) {
        if (m > 0) {
            pmm = pmm.cwiseProduct(st) * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
            for (Eigen::Index i = 0; i < N; ++i) {
                const double c = cos_m[i] * cp[i] - sin_m[i] * sp[i];
                sin_m[i] = sin_m[i] * cp[i] + cos_m[i] * sp[i];
                cos_m[i] = c;
            }
        }
        plm2 = pmm;
        if (m == 0) {
            Y.col(column(m, 0)) = plm2;
        } else {
            Y.col(column(m, m)) = sqrt2 * plm2.cwiseProduct(cos_m);
            Y.col(column(m, -m)) = sqrt2 * plm2.cwiseProduct(sin_m);
        }
        if (m + 1 <= L) {
            plm1 = std::sqrt(2.0 * m + 3.0) * ct.cwiseProduct(pmm);
            if (m == 0) {
                Y.col(column(m + 1, 0)) = plm1;
            } else {
                Y.col(column(m + 1, m)) = sqrt2 * plm1.cwiseProduct(cos_m);
                Y.col(column(m + 1, -m)) = sqrt2 * plm1.cwiseProduct(sin_m);
            }
        }
        for (int l = m + 2; l <= L; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
            const double b = std::sqrt((2.0 * l + 1.0) * ((l - 1.0) * (l - 1.0) - double(m) * m) /
                                       ((2.0 * l - 3.0) * (double(l) * l - double(m) * m)));
            p = a * ct.cwiseProduct(plm1) - b * plm2;
            if (m == 0) {
                Y.col(column(l, 0)) = p;
            } else {
                Y.col(column(l, m)) = sqrt2 * p.cwiseProduct(cos_m);
                Y.col(column(l, -m)) = sqrt2 * p.cwiseProduct(sin_m);
            }
            plm2 = plm1;
            plm1 = p;
        }
    }
    return Y;
}

}  // namespace hyper
