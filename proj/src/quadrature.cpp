#include "hyper/quadrature.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "hyper/errors.hpp"
#include "hyper/spherical_harmonics.hpp"

namespace hyper {

namespace {

constexpr double kPi = std::numbers::pi;

// Legendre P_n and its derivative at x.
std::pair<double, double> legendre_with_derivative(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw config_error("gauss_legendre: n must be >= 1");

    QuadratureRule rule;
    rule.domain = Domain::interval();
    rule.nodes.resize(n, 1);
    rule.weights.resize(n);
    rule.exactness = 2 * n - 1;

    if (n == 1) {
        rule.nodes(0, 0) = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-like asymptotic guess.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre_with_derivative(n, z);
            pp = dp;
            const double dz = p / dp;
            z -= dz;
            if (std::abs(dz) <= 1e-15) {
                pp = legendre_with_derivative(n, z).second;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.nodes(i, 0) = -z;
        rule.nodes(n - 1 - i, 0) = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes(half - 1, 0) = 0.0;
    return rule;
}

QuadratureRule disk_polar_rule(int L) {
    if (L < 1) throw config_error("disk_polar_rule: L must be >= 1");

    const QuadratureRule radial = gauss_legendre(L + 1);
    const int n_ang = 2 * L + 1;
    const int N = (L + 1) * n_ang;

    QuadratureRule rule;
    rule.domain = Domain::disk();
    rule.nodes.resize(N, 2);
    rule.weights.resize(N);
    rule.exactness = 2 * L;

    int idx = 0;
    for (int j = 0; j <= L; ++j) {
        const double r = 0.5 * (radial.nodes(j, 0) + 1.0);  // map to (0,1)
        const double wr = 0.5 * radial.weights[j];
        for (int m = 0; m < n_ang; ++m) {
            const double theta = 2.0 * kPi * m / n_ang;
            rule.nodes(idx, 0) = r * std::cos(theta);
            rule.nodes(idx, 1) = r * std::sin(theta);
            rule.weights[idx] = 2.0 * kPi * wr * r / n_ang;
            ++idx;
        }
    }
    return rule;
}

QuadratureRule sphere_product_rule(int L) {
    if (L < 1) throw config_error("sphere_product_rule: L must be >= 1");

    const QuadratureRule polar = gauss_legendre(L + 1);
    const int n_ang = 2 * L + 1;
    const int N = (L + 1) * n_ang;

    QuadratureRule rule;
    rule.domain = Domain::sphere();
    rule.nodes.resize(N, 3);
    rule.weights.resize(N);
    rule.exactness = 2 * L;

    int idx = 0;
    for (int j = 0; j <= L; ++j) {
        const double ct = polar.nodes(j, 0);
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int m = 0; m < n_ang; ++m) {
            const double phi = 2.0 * kPi * m / n_ang;
            rule.nodes(idx, 0) = st * std::cos(phi);
            rule.nodes(idx, 1) = st * std::sin(phi);
            rule.nodes(idx, 2) = ct;
            rule.weights[idx] = 2.0 * kPi * polar.weights[j] / n_ang;
            ++idx;
        }
    }
    return rule;
}

QuadratureRule load_spherical_design(const std::string& path, int t) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open spherical design file: " + path);

    std::vector<std::array<double, 3>> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        std::array<double, 3> p{};
        if (!(row >> p[0] >> p[1] >> p[2])) {
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": expected three coordinates");
        }
        double extra;
        if (row >> extra) {
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": expected exactly three coordinates");
        }
        const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        if (std::abs(norm - 1.0) > 1e-8) {
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": node norm deviates from 1 by more than 1e-8");
        }
        pts.push_back({p[0] / norm, p[1] / norm, p[2] / norm});
    }
    if (pts.empty()) throw parse_error(path + ": no nodes found");

    const int N = static_cast<int>(pts.size());
    QuadratureRule rule;
    rule.domain = Domain::sphere();
    rule.nodes.resize(N, 3);
    for (int j = 0; j < N; ++j) {
        rule.nodes(j, 0) = pts[j][0];
        rule.nodes(j, 1) = pts[j][1];
        rule.nodes(j, 2) = pts[j][2];
    }
    rule.weights = Eigen::VectorXd::Constant(N, 4.0 * kPi / N);
    rule.exactness = t;

    // Designs are equal-weight by definition; certify the claimed degree on
    // the spherical-harmonic moments.
    const Eigen::MatrixXd Y = real_spherical_harmonics(rule.nodes, t);
    const double V = 4.0 * kPi;
    double worst = 0.0;
    int worst_index = -1;
    for (int k = 0; k < Y.cols(); ++k) {
        const double mean = rule.weights.dot(Y.col(k)) / V;
        const double target = (k == 0) ? 1.0 / std::sqrt(V) : 0.0;
        const double dev = std::abs(mean - target);
        if (dev > worst) {
            worst = dev;
            worst_index = k;
        }
    }
    if (worst > 1e-8) {
        const int ell = static_cast<int>(std::floor(std::sqrt(double(worst_index))));
        const int m = worst_index - ell * ell - ell;
        std::ostringstream msg;
        msg << path << ": not a degree-" << t << " design; worst harmonic index "
            << worst_index << " (l=" << ell << ", m=" << m << ") has mean deviation "
            << worst;
        throw validation_error(msg.str());
    }
    return rule;
}

namespace {

// Chebyshev-Lobatto values cos(k*pi/n), k = 0..n.
Eigen::VectorXd lobatto_points(int n) {
    Eigen::VectorXd z(n + 1);
    for (int k = 0; k <= n; ++k) z[k] = std::cos(k * kPi / n);
    return z;
}

// Orthonormal Chebyshev values: T0 = 1, Tk = sqrt(2) cos(k acos t).
Eigen::MatrixXd chebyshev_table(const Eigen::VectorXd& z, int max_degree) {
    Eigen::MatrixXd T(max_degree + 1, z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double theta = std::acos(std::clamp(z[i], -1.0, 1.0));
        T(0, i) = 1.0;
        for (int k = 1; k <= max_degree; ++k)
            T(k, i) = std::numbers::sqrt2 * std::cos(k * theta);
    }
    return T;
}

struct CubeCandidate {
    std::vector<std::array<int, 3>> indices;
};

// Moment check of the product-Chebyshev basis up to total degree 2L via
// tensor contraction over the index grid.
double cube_moment_deviation(const CubeCandidate& cand, const Eigen::VectorXd& z,
                             const Eigen::VectorXd& w_grid_factor, int L) {
    const int n = L + 1;
    const int Q = 2 * L;
    const int g = n + 1;
    const Eigen::MatrixXd T = chebyshev_table(z, Q);

    // G[i][j][k] = weight of grid point (i,j,k), zero off the candidate set.
    std::vector<Eigen::MatrixXd> G(g, Eigen::MatrixXd::Zero(g, g));
    for (const auto& ind : cand.indices) {
        const double w = 4.0 / (double(n) * n * n) * w_grid_factor[ind[0]] *
                         w_grid_factor[ind[1]] * w_grid_factor[ind[2]];
        G[ind[0]](ind[1], ind[2]) += w;
    }

    // Contract axis by axis: M1[q1](j,k), M2[q1](q2,k), then full moments.
    std::vector<Eigen::MatrixXd> M1(Q + 1, Eigen::MatrixXd::Zero(g, g));
    for (int q1 = 0; q1 <= Q; ++q1)
        for (int i = 0; i < g; ++i) M1[q1] += T(q1, i) * G[i];

    double worst = 0.0;
    for (int q1 = 0; q1 <= Q; ++q1) {
        const Eigen::MatrixXd M2 = T.leftCols(g) * M1[q1];  // (Q+1) x g
        for (int q2 = 0; q1 + q2 <= Q; ++q2) {
            for (int q3 = 0; q1 + q2 + q3 <= Q; ++q3) {
                const double moment = T.row(q3).head(g).dot(M2.row(q2));
                const double target = (q1 == 0 && q2 == 0 && q3 == 0) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(moment - target));
            }
        }
    }
    return worst;
}

}  // namespace

QuadratureRule cube_rule(int L) {
    if (L < 1) throw config_error("cube_rule: L must be >= 1");

    const int n = L + 1;
    const Eigen::VectorXd z = lobatto_points(n);

    // Boundary factor 1/2 per coordinate sitting at an endpoint of the grid:
    // interior 1, face 1/2, edge 1/4, vertex 1/8 after taking the product.
    Eigen::VectorXd factor(n + 1);
    for (int k = 0; k <= n; ++k) factor[k] = (k == 0 || k == n) ? 0.5 : 1.0;

    // Candidate parity selections of the Lobatto grid; the moment validation
    // picks the right one.
    std::vector<CubeCandidate> candidates(2);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                if (i % 2 == j % 2 && j % 2 == k % 2)
                    candidates[0].indices.push_back({i, j, k});
                if ((i + j + k) % 2 == 0) candidates[1].indices.push_back({i, j, k});
            }

    for (const auto& cand : candidates) {
        if (cube_moment_deviation(cand, z, factor, L) > 1e-10) continue;

        const int N = static_cast<int>(cand.indices.size());
        QuadratureRule rule;
        rule.domain = Domain::cube();
        rule.nodes.resize(N, 3);
        rule.weights.resize(N);
        rule.exactness = 2 * L;
        for (int p = 0; p < N; ++p) {
            const auto& ind = cand.indices[p];
            rule.nodes(p, 0) = z[ind[0]];
            rule.nodes(p, 1) = z[ind[1]];
            rule.nodes(p, 2) = z[ind[2]];
            rule.weights[p] = 4.0 / (double(n) * n * n) * factor[ind[0]] *
                              factor[ind[1]] * factor[ind[2]];
        }
        return rule;
    }
    throw validation_error("cube_rule: no candidate node set passes the moment validation");
}

QuadratureRule union_disks_rule(const Domain& domain, int degree) {
    if (domain.kind() != DomainKind::UnionOfDisks)
        throw config_error("union_disks_rule: domain is not a union of disks");
    if (degree < 1) throw config_error("union_disks_rule: degree must be >= 1");

    const int Lsub = (degree + 1) / 2;
    const QuadratureRule base = disk_polar_rule(Lsub);
    const auto& disks = domain.disks();
    const Eigen::Index per = base.size();
    const Eigen::Index N = per * static_cast<Eigen::Index>(disks.size());

    QuadratureRule rule;
    rule.domain = domain;
    rule.nodes.resize(N, 2);
    rule.weights.resize(N);
    rule.exactness = degree;

    Eigen::Index idx = 0;
    for (const auto& d : disks) {
        for (Eigen::Index j = 0; j < per; ++j) {
            rule.nodes.row(idx) = d.center.transpose() + d.radius * base.nodes.row(j);
            rule.weights[idx] = d.radius * d.radius * base.weights[j];
            ++idx;
        }
    }
    return rule;
}

ExactnessReport validate_exactness(
    const QuadratureRule& rule, int count,
    const std::function<double(int, const Eigen::VectorXd&)>& evaluate,
    const std::function<double(int)>& moment) {
    ExactnessReport report;
    Eigen::VectorXd node(rule.nodes.cols());
    for (int i = 0; i < count; ++i) {
        double discrete = 0.0;
        for (Eigen::Index j = 0; j < rule.size(); ++j) {
            node = rule.nodes.row(j);
            discrete += rule.weights[j] * evaluate(i, node);
        }
        const double dev = std::abs(discrete - moment(i));
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_index = i;
        }
    }
    return report;
}

}  // namespace hyper
