#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dwshell/gen.hpp"
#include "dwshell/harness.hpp"
#include "dwshell/orthogonality.hpp"
#include "dwshell/shell.hpp"

using namespace dwshell;

namespace {
CMatrix diag2(cplx a, cplx b) {
    CMatrix D(2);
    D(0, 0) = a;
    D(1, 1) = b;
    return D;
}
}  // namespace

TEST_CASE("hemisphere grid covers pole and equator exactly") {
    const HemisphereGrid g = HemisphereGrid::latlon(5, 8);
    REQUIRE(static_cast<int>(g.directions.size()) == 5 * 8);
    CHECK(g.mesh > 0.0);
    bool pole = false, equator = false;
    for (const Direction3& u : g.directions) {
        CHECK(std::abs(u.u1 * u.u1 + u.u2 * u.u2 + u.u3 * u.u3 - 1.0) < 1e-12);
        CHECK(u.u3 >= -1e-15);
        if (std::abs(u.u3 - 1.0) < 1e-15) pole = true;
        if (std::abs(u.u3) < 1e-15) equator = true;
    }
    CHECK(pole);
    CHECK(equator);
}

TEST_CASE("dv_support closed forms on a normal 2x2") {
    // DV of diag(1, -1) is the segment from (1,1) to (-1,1): r == 1.
    const CMatrix D = diag2(1.0, -1.0);
    CHECK(dv_support(D, {0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dv_support(D, {1.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(dv_support(D, {0.0, 1.0, 0.0})) < 1e-12);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(dv_support(D, {s, 0.0, s}) == doctest::Approx(2.0 * s).epsilon(1e-12));

    CHECK_THROWS_AS(dv_support(D, {1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("dv_support agrees between matrix and pencil paths") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 4, .seed = 101});
    const HermPencil pencil(A);
    const HemisphereGrid g = HemisphereGrid::latlon(7, 12);
    for (const Direction3& u : g.directions)
        CHECK(dv_support(A, u) == doctest::Approx(dv_support(pencil, u)).epsilon(1e-10));
}

TEST_CASE("shell samples satisfy the support inequality and r >= |mu|^2") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 3, .seed = 103});
    const HemisphereGrid g = HemisphereGrid::latlon(9, 16);
    const ShellCloud cloud = dv_upper_samples(A, g);
    CHECK(!cloud.empty());
    const double scale = 1.0 + std::pow(operator_norm(A), 2);
    for (const ShellPoint& p : cloud) {
        CHECK(p.u.u3 > 0.0);
        // sampled point achieves its own support value
        const double proj = p.u.u1 * p.mu.real() + p.u.u2 * p.mu.imag() + p.u.u3 * p.r;
        CHECK(std::abs(proj - p.h) <= 1e-9 * scale);
        CHECK(p.r >= std::norm(p.mu) - 1e-9 * scale);
        // dominated at every other sampled direction
        for (const Direction3& u : g.directions) {
            if (u.u3 <= 0.0) continue;
            const double q = u.u1 * p.mu.real() + u.u2 * p.mu.imag() + u.u3 * p.r;
            CHECK(q <= dv_support(A, u) + 1e-8 * scale);
        }
    }
}

TEST_CASE("shell symmetry defect vanishes for symmetric-spectrum normals") {
    const CMatrix A = generate({.cls = GenClass::SymmetricSpectrumNormal,
                                .n = 4,
                                .seed = 107,
                                .spectrum = {cplx(1.0, 0.5), cplx(-0.3, 1.2)}});
    const ShellDefect d = dv_ub_symmetry_defect(A, HemisphereGrid::latlon(31, 60));
    CHECK(d.defect <= 1e-10 * (1.0 + std::pow(operator_norm(A), 2)));
    CHECK(d.certified_bound >= d.defect);
}

TEST_CASE("shell symmetry defect of the example matrix") {
    const CMatrix A = example_matrix();
    const ShellDefect d = dv_ub_symmetry_defect(A, HemisphereGrid::latlon(61, 240));
    // max unit-direction defect 0.16135..., attained near (2,0,1)/sqrt(5)
    CHECK(d.defect >= 0.16);
    CHECK(d.defect <= 0.17);
    CHECK(std::abs(d.witness.u2) <= 0.05);
    const double ratio = d.witness.u1 / d.witness.u3;
    CHECK(ratio >= 1.5);
    CHECK(ratio <= 2.5);
}

TEST_CASE("shell defect detects sign asymmetry of diag(1, 0)") {
    const ShellDefect d = dv_ub_symmetry_defect(diag2(1.0, 0.0), HemisphereGrid::latlon(31, 60));
    // at the equator direction (1,0,0): h = 1 vs h(-1,0,0) = 0
    CHECK(d.defect >= 1.0 - 1e-9);
}

TEST_CASE("l_mu_max closed forms") {
    // diag(1,-1): fiber over mu = 0 is [0, 1] -> max 1; over mu = 1 it is {1}.
    const CMatrix D = diag2(1.0, -1.0);
    const FiberMax g0 = l_mu_max(D, 0.0);
    CHECK(g0.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_FALSE(g0.boundary_flag);
    const FiberMax g1 = l_mu_max(D, 0.99);
    CHECK(g1.value == doctest::Approx(1.0).epsilon(1e-4));

    CHECK_THROWS_AS(l_mu_max(D, cplx(5.0, 5.0)), std::domain_error);
}

TEST_CASE("l_mu_max on the Jordan block") {
    // For the 2x2 Jordan block, g(mu) = 1/2 + sqrt(1/4 - |mu|^2) on |mu| < 1/2.
    CMatrix J(2);
    J(0, 1) = 1.0;
    for (double x : {0.0, 0.2, 0.4}) {
        const FiberMax g = l_mu_max(J, x);
        CHECK(g.value == doctest::Approx(0.5 + std::sqrt(0.25 - x * x)).epsilon(1e-4));
    }
}

TEST_CASE("l_mu_max dominates sampled shell points near mu") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 3, .seed = 109});
    const ShellCloud cloud = dv_upper_samples(A, HemisphereGrid::latlon(15, 24));
    const double scale = 1.0 + std::pow(operator_norm(A), 2);
    int checked = 0;
    for (const ShellPoint& p : cloud) {
        if (p.u.u3 < 0.5) continue;  // stay well inside W(A)
        const FiberMax g = l_mu_max(A, p.mu);
        CHECK(g.value >= p.r - 1e-5 * scale);
        if (++checked >= 6) break;
    }
    CHECK(checked > 0);
}

TEST_CASE("shell CSV and JSON export schemas") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 2, .seed = 113});
    const HemisphereGrid g = HemisphereGrid::latlon(3, 8);
    const ShellCloud cloud = dv_upper_samples(A, g);
    const std::string csv = shell_csv(cloud);
    CHECK(csv.rfind("u1,u2,u3,h,mu_re,mu_im,r\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(cloud.size()) + 1);
    const std::string js = shell_json(cloud, g);
    CHECK(js.find("\"points\"") != std::string::npos);
    CHECK(js.find("\"n_phi\"") != std::string::npos);
}
