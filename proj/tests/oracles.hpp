// Test-only oracles, independent of the library's computation paths:
// closed-form moments, adaptive quadrature, brute-force grid search,
// Kolmogorov-Smirnov statistic.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hyper/domain.hpp"
#include "hyper/noise.hpp"

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

// --- closed-form monomial moments ------------------------------------------

// int_{-1}^{1} x^k dx
inline double interval_moment(int k) {
    return k % 2 == 0 ? 2.0 / (k + 1) : 0.0;
}

// int_{unit disk} x^a y^b dA = Gamma((a+1)/2) Gamma((b+1)/2) / Gamma((a+b+4)/2)
// for even a,b; 0 otherwise.
inline double disk_moment(int a, int b) {
    if (a % 2 != 0 || b % 2 != 0) return 0.0;
    return std::tgamma((a + 1) / 2.0) * std::tgamma((b + 1) / 2.0) /
           std::tgamma((a + b + 4) / 2.0);
}

inline double double_factorial(int n) {
    double out = 1.0;
    for (int k = n; k > 1; k -= 2) out *= k;
    return out;
}

// int_{S^2} x^a y^b z^c dS = 4 pi (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!! (all even)
inline double sphere_moment(int a, int b, int c) {
    if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0) return 0.0;
    return 4.0 * kPi * double_factorial(a - 1) * double_factorial(b - 1) *
           double_factorial(c - 1) / double_factorial(a + b + c + 1);
}

inline double binomial(int n, int k) {
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out *= double(n - k + i) / i;
    return out;
}

// int over a disk with given center/radius (binomial expansion of the affine
// map onto the unit disk).
inline double shifted_disk_moment(const hyper::DiskSpec& d, int a, int b) {
    double sum = 0.0;
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
            const double m = disk_moment(i, j);
            if (m == 0.0) continue;
            sum += binomial(a, i) * binomial(b, j) * std::pow(d.center[0], a - i) *
                   std::pow(d.center[1], b - j) * std::pow(d.radius, i + j + 2) * m;
        }
    }
    return sum;
}

inline double union_moment(const hyper::Domain& domain, int a, int b) {
    double sum = 0.0;
    for (const auto& d : domain.disks()) sum += shifted_disk_moment(d, a, b);
    return sum;
}

// --- random polynomials with known integrals --------------------------------

struct RandomPolynomial {
    std::function<double(const Eigen::VectorXd&)> eval;
    double integral = 0.0;
};

inline double tilde_chebyshev(int k, double t) {
    if (k == 0) return 1.0;
    return std::numbers::sqrt2 * std::cos(k * std::acos(std::clamp(t, -1.0, 1.0)));
}

// Random polynomial of total degree <= deg on the given domain, with its
// exact integral w.r.t. the domain measure.  Cube draws in the orthonormal
// Chebyshev product basis (integral = coefficient of the constant).
inline RandomPolynomial random_polynomial(const hyper::Domain& domain, int deg,
                                          hyper::RngStream& rng) {
    RandomPolynomial out;
    switch (domain.kind()) {
        case hyper::DomainKind::Interval: {
            std::vector<double> c(deg + 1);
            for (auto& v : c) v = 2.0 * rng.next_unit() - 1.0;
            out.integral = 0.0;
            for (int k = 0; k <= deg; ++k) out.integral += c[k] * interval_moment(k);
            out.eval = [c, deg](const Eigen::VectorXd& x) {
                double acc = 0.0;
                for (int k = deg; k >= 0; --k) acc = acc * x[0] + c[k];
                return acc;
            };
            break;
        }
        case hyper::DomainKind::Disk:
        case hyper::DomainKind::UnionOfDisks: {
            std::vector<std::array<int, 2>> exps;
            std::vector<double> c;
            for (int a = 0; a <= deg; ++a)
                for (int b = 0; a + b <= deg; ++b) {
                    exps.push_back({a, b});
                    c.push_back(2.0 * rng.next_unit() - 1.0);
                }
            out.integral = 0.0;
            for (size_t i = 0; i < exps.size(); ++i) {
                const double m = domain.kind() == hyper::DomainKind::Disk
                                     ? disk_moment(exps[i][0], exps[i][1])
                                     : union_moment(domain, exps[i][0], exps[i][1]);
                out.integral += c[i] * m;
            }
            out.eval = [exps, c](const Eigen::VectorXd& x) {
                double acc = 0.0;
                for (size_t i = 0; i < exps.size(); ++i)
                    acc += c[i] * std::pow(x[0], exps[i][0]) * std::pow(x[1], exps[i][1]);
                return acc;
            };
            break;
        }
        case hyper::DomainKind::Sphere: {
            std::vector<std::array<int, 3>> exps;
            std::vector<double> c;
            for (int a = 0; a <= deg; ++a)
                for (int b = 0; a + b <= deg; ++b)
                    for (int cc = 0; a + b + cc <= deg; ++cc) {
                        exps.push_back({a, b, cc});
                        c.push_back(2.0 * rng.next_unit() - 1.0);
                    }
            out.integral = 0.0;
            for (size_t i = 0; i < exps.size(); ++i)
                out.integral += c[i] * sphere_moment(exps[i][0], exps[i][1], exps[i][2]);
            out.eval = [exps, c](const Eigen::VectorXd& x) {
                double acc = 0.0;
                for (size_t i = 0; i < exps.size(); ++i)
                    acc += c[i] * std::pow(x[0], exps[i][0]) *
                           std::pow(x[1], exps[i][1]) * std::pow(x[2], exps[i][2]);
                return acc;
            };
            break;
        }
        case hyper::DomainKind::Cube: {
            std::vector<std::array<int, 3>> exps;
            std::vector<double> c;
            for (int a = 0; a <= deg; ++a)
                for (int b = 0; a + b <= deg; ++b)
                    for (int cc = 0; a + b + cc <= deg; ++cc) {
                        exps.push_back({a, b, cc});
                        c.push_back(2.0 * rng.next_unit() - 1.0);
                    }
            for (size_t i = 0; i < exps.size(); ++i)
                if (exps[i][0] == 0 && exps[i][1] == 0 && exps[i][2] == 0)
                    out.integral = c[i];
            out.eval = [exps, c](const Eigen::VectorXd& x) {
                double acc = 0.0;
                for (size_t i = 0; i < exps.size(); ++i)
                    acc += c[i] * tilde_chebyshev(exps[i][0], x[0]) *
                           tilde_chebyshev(exps[i][1], x[1]) *
                           tilde_chebyshev(exps[i][2], x[2]);
                return acc;
            };
            break;
        }
    }
    return out;
}

// --- adaptive quadrature -----------------------------------------------------

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double b, double fa, double fm, double fb,
                                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// --- grid search for the 1-D estimator objectives ---------------------------

// Minimizes over the grid {k*step : |k*step| <= 2|alpha|} (zero included).
inline double grid_argmin(const std::function<double(double)>& objective,
                          double alpha, double step = 1e-5) {
    const long long half = static_cast<long long>(std::ceil(2.0 * std::abs(alpha) / step));
    double best_z = 0.0;
    double best_val = objective(0.0);
    for (long long k = -half; k <= half; ++k) {
        const double z = k * step;
        const double val = objective(z);
        if (val < best_val) {
            best_val = val;
            best_z = z;
        }
    }
    return best_z;
}

// --- Kolmogorov-Smirnov ------------------------------------------------------

// Two-sided KS statistic of sorted samples against a CDF.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double d = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        d = std::max(d, std::max(F - i / n, (i + 1) / n - F));
    }
    return d;
}

}  // namespace oracles
