#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "hyper/errors.hpp"
#include "hyper/noise.hpp"
#include "hyper/quadrature.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

void check_rule_invariants(const QuadratureRule& rule) {
    CHECK(rule.weights.minCoeff() > 0.0);
    const double V = rule.domain.volume();
    CHECK(std::abs(rule.volume() - V) <= 1e-10 * std::max(1.0, V));
    Eigen::VectorXd node(rule.nodes.cols());
    for (Eigen::Index j = 0; j < rule.size(); ++j) {
        node = rule.nodes.row(j);
        CHECK(rule.domain.contains(node));
    }
}

// Exactness property: 20 seeded random polynomials of degree <= exactness.
void check_exactness_property(const QuadratureRule& rule, uint64_t seed) {
    RngStream rng(seed, 7);
    Eigen::VectorXd node(rule.nodes.cols());
    for (int draw = 0; draw < 20; ++draw) {
        const auto poly = oracles::random_polynomial(rule.domain, rule.exactness, rng);
        double discrete = 0.0;
        for (Eigen::Index j = 0; j < rule.size(); ++j) {
            node = rule.nodes.row(j);
            discrete += rule.weights[j] * poly.eval(node);
        }
        CHECK(std::abs(discrete - poly.integral) <=
              1e-9 * (1.0 + std::abs(poly.integral)));
    }
}

}  // namespace

TEST_CASE("gauss_legendre small cases") {
    const auto r1 = gauss_legendre(1);
    CHECK(r1.size() == 1);
    CHECK(r1.nodes(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r1.exactness == 1);

    const auto r2 = gauss_legendre(2);
    CHECK(r2.nodes(0, 0) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.nodes(1, 0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(gauss_legendre(0), config_error);
}

TEST_CASE("gauss_legendre n=251 integrates monomials up to degree 501") {
    const auto rule = gauss_legendre(251);
    CHECK(rule.exactness == 501);
    check_rule_invariants(rule);

    for (int k = 0; k <= 501; ++k) {
        double discrete = 0.0;
        for (Eigen::Index j = 0; j < rule.size(); ++j)
            discrete += rule.weights[j] * std::pow(rule.nodes(j, 0), k);
        const double exact = oracles::interval_moment(k);
        CHECK(std::abs(discrete - exact) <= 1e-12 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("gauss_legendre exactness property") {
    check_exactness_property(gauss_legendre(12), 11);
    check_exactness_property(gauss_legendre(40), 12);
}

TEST_CASE("disk polar rule") {
    const auto rule = disk_polar_rule(16);
    CHECK(rule.size() == 561);  // (L+1)(2L+1)
    CHECK(rule.exactness == 32);
    check_rule_invariants(rule);
    CHECK(std::abs(rule.volume() - oracles::kPi) <= 1e-10);

    // x1^2 x2^2 has closed-form integral pi/24
    const auto r3 = disk_polar_rule(3);
    double discrete = 0.0;
    for (Eigen::Index j = 0; j < r3.size(); ++j)
        discrete += r3.weights[j] * r3.nodes(j, 0) * r3.nodes(j, 0) * r3.nodes(j, 1) *
                    r3.nodes(j, 1);
    CHECK(discrete == doctest::Approx(oracles::kPi / 24.0).epsilon(1e-12));

    check_exactness_property(r3, 3);
    check_exactness_property(disk_polar_rule(7), 21);
}

TEST_CASE("disk polar rule matches all polar moments up to degree 8 at L=4") {
    const auto rule = disk_polar_rule(4);
    std::vector<std::pair<int, int>> exps;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b) exps.emplace_back(a, b);

    const auto report = validate_exactness(
        rule, static_cast<int>(exps.size()),
        [&](int i, const Eigen::VectorXd& x) {
            return std::pow(x[0], exps[i].first) * std::pow(x[1], exps[i].second);
        },
        [&](int i) { return oracles::disk_moment(exps[i].first, exps[i].second); });
    CHECK(report.max_deviation < 1e-12);
}

TEST_CASE("validate_exactness flags a corrupted weight") {
    auto rule = gauss_legendre(5);
    const auto clean = validate_exactness(
        rule, 10,
        [&](int i, const Eigen::VectorXd& x) { return std::pow(x[0], i); },
        [&](int i) { return oracles::interval_moment(i); });
    CHECK(clean.max_deviation < 1e-12);

    rule.weights[2] += 1e-4;
    const auto corrupted = validate_exactness(
        rule, 10,
        [&](int i, const Eigen::VectorXd& x) { return std::pow(x[0], i); },
        [&](int i) { return oracles::interval_moment(i); });
    CHECK(corrupted.max_deviation > 1e-6);
    CHECK(corrupted.worst_index >= 0);
}

TEST_CASE("sphere product rule") {
    const auto tiny = sphere_product_rule(1);
    CHECK(tiny.size() == 6);
    CHECK(std::abs(tiny.volume() - 4.0 * oracles::kPi) <= 1e-10 * 4.0 * oracles::kPi);

    const auto rule = sphere_product_rule(15);
    check_rule_invariants(rule);

    // x3^2 integrates to 4pi/3 on the surface
    double discrete = 0.0;
    for (Eigen::Index j = 0; j < rule.size(); ++j)
        discrete += rule.weights[j] * rule.nodes(j, 2) * rule.nodes(j, 2);
    CHECK(discrete == doctest::Approx(4.0 * oracles::kPi / 3.0).epsilon(1e-12));

    check_exactness_property(sphere_product_rule(5), 23);
}

TEST_CASE("cube rule") {
    const auto rule = cube_rule(20);
    CHECK(rule.size() == 2662);  // about (L+2)^3/4
    CHECK(std::abs(rule.volume() - 1.0) <= 1e-10);
    check_rule_invariants(rule);

    check_exactness_property(cube_rule(2), 31);
    check_exactness_property(cube_rule(5), 32);

    // construction already validates all Chebyshev moments <= 2L; spot-check
    // one mixed moment by hand at L=3
    const auto r3 = cube_rule(3);
    double m = 0.0;
    for (Eigen::Index j = 0; j < r3.size(); ++j)
        m += r3.weights[j] * oracles::tilde_chebyshev(2, r3.nodes(j, 0)) *
             oracles::tilde_chebyshev(1, r3.nodes(j, 1)) *
             oracles::tilde_chebyshev(3, r3.nodes(j, 2));
    CHECK(std::abs(m) < 1e-12);
}

TEST_CASE("union of disks rule") {
    SUBCASE("single unit disk reduces to the polar rule") {
        const auto domain = Domain::union_of_disks({{{0.0, 0.0}, 1.0}});
        const auto composite = union_disks_rule(domain, 12);
        const auto direct = disk_polar_rule(6);
        REQUIRE(composite.size() == direct.size());
        CHECK((composite.nodes - direct.nodes).cwiseAbs().maxCoeff() == 0.0);
        CHECK((composite.weights - direct.weights).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("two disjoint unit disks have total weight 2 pi") {
        const auto domain =
            Domain::union_of_disks({{{-2.0, 0.0}, 1.0}, {{2.0, 0.0}, 1.0}});
        const auto rule = union_disks_rule(domain, 10);
        CHECK(std::abs(rule.volume() - 2.0 * oracles::kPi) <=
              1e-10 * 2.0 * oracles::kPi);
        check_rule_invariants(rule);
    }

    SUBCASE("random disjoint 3-disk configuration matches closed-form moments") {
        const auto domain = Domain::union_of_disks(
            {{{-3.0, 0.5}, 1.2}, {{1.5, 2.0}, 0.8}, {{2.5, -2.5}, 1.0}});
        const auto rule = union_disks_rule(domain, 10);
        check_rule_invariants(rule);

        std::vector<std::pair<int, int>> exps;
        for (int a = 0; a <= 10; ++a)
            for (int b = 0; a + b <= 10; ++b) exps.emplace_back(a, b);
        const auto report = validate_exactness(
            rule, static_cast<int>(exps.size()),
            [&](int i, const Eigen::VectorXd& x) {
                return std::pow(x[0], exps[i].first) * std::pow(x[1], exps[i].second);
            },
            [&](int i) {
                return oracles::union_moment(domain, exps[i].first, exps[i].second);
            });
        CHECK(report.max_deviation <= 1e-9 * (1.0 + domain.volume()));
        check_exactness_property(rule, 4);
    }

    SUBCASE("overlapping disks are rejected") {
        CHECK_THROWS_AS(Domain::union_of_disks({{{0.0, 0.0}, 1.0}, {{1.0, 0.0}, 1.0}}),
                        config_error);
    }
}

TEST_CASE("spherical design loader") {
    SUBCASE("octahedron vertices form a 1-design") {
        const char* path = "/tmp/hyper_octahedron.txt";
        {
            std::ofstream out(path);
            out << "# octahedron vertices\n";
            out << "1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n\n0 0 1\n0 0 -1\n";
        }
        const auto rule = load_spherical_design(path, 1);
        CHECK(rule.size() == 6);
        CHECK(std::abs(rule.volume() - 4.0 * oracles::kPi) <= 1e-12 * 4.0 * oracles::kPi);
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs(rule.nodes.col(c).mean()) < 1e-15);
    }

    SUBCASE("malformed rows raise parse errors") {
        const char* path = "/tmp/hyper_bad_design.txt";
        {
            std::ofstream out(path);
            out << "0 0\n";
        }
        CHECK_THROWS_AS(load_spherical_design(path, 1), parse_error);
        {
            std::ofstream out(path);
            out << "1 0 0 0\n";
        }
        CHECK_THROWS_AS(load_spherical_design(path, 1), parse_error);
        {
            std::ofstream out(path);
            out << "2 0 0\n";  // not a unit vector
        }
        CHECK_THROWS_AS(load_spherical_design(path, 1), parse_error);
        CHECK_THROWS_AS(load_spherical_design("/tmp/does_not_exist_42.txt", 1),
                        parse_error);
    }

    SUBCASE("claimed degree is validated") {
        const char* path = "/tmp/hyper_octahedron2.txt";
        {
            std::ofstream out(path);
            out << "1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n";
        }
        // octahedron is a 3-design but not a 4-design
        CHECK_NOTHROW(load_spherical_design(path, 3));
        CHECK_THROWS_AS(load_spherical_design(path, 4), validation_error);
    }

    SUBCASE("shipped degree-30 design file, if present") {
        const std::string path =
            std::string(HYPER_DATA_DIR) + "/spherical_designs/sd030_00482.txt";
        std::ifstream probe(path);
        if (!probe) return;  // fallback rules cover the sphere without it
        const auto rule = load_spherical_design(path, 30);
        CHECK(rule.size() == 482);
        check_rule_invariants(rule);
    }
}
