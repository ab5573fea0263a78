#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dwshell/gen.hpp"
#include "dwshell/harness.hpp"
#include "dwshell/orthogonality.hpp"
#include "dwshell/ranges.hpp"

using namespace dwshell;
using std::numbers::pi;

namespace {
CMatrix jordan2() {
    CMatrix J(2);
    J(0, 1) = 1.0;
    return J;
}
}  // namespace

TEST_CASE("nr_support closed forms") {
    const CMatrix I = CMatrix::identity(3);
    CHECK(nr_support(I, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nr_support(I, pi) == doctest::Approx(-1.0).epsilon(1e-12));

    // W of the Jordan block is the disk of radius 1/2 about the origin
    for (double theta : {0.0, 0.7, 2.0, 4.5})
        CHECK(nr_support(jordan2(), theta) == doctest::Approx(0.5).epsilon(1e-12));

    CMatrix D(2);
    D(0, 0) = 1.0;
    CHECK(nr_support(D, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(nr_support(D, pi)) < 1e-12);
}

TEST_CASE("nr_profile of a Hermitian matrix stays on the real axis") {
    CMatrix D(2);
    D(0, 0) = 1.0;
    D(1, 1) = -1.0;
    const NRProfile prof = nr_profile(D, 8);
    for (const cplx& p : prof.boundary) {
        CHECK(std::abs(p.imag()) < 1e-10);
        CHECK(p.real() <= 1.0 + 1e-10);
        CHECK(p.real() >= -1.0 - 1e-10);
    }
}

TEST_CASE("nr_profile invariants on a random matrix") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 4, .seed = 5});
    const double norm_a = operator_norm(A);
    const NRProfile prof = nr_profile(A, 90);
    for (size_t k = 0; k < prof.thetas.size(); ++k) {
        const double proj = std::cos(prof.thetas[k]) * prof.boundary[k].real() +
                            std::sin(prof.thetas[k]) * prof.boundary[k].imag();
        CHECK(proj >= prof.support[k] - 1e-9 * (1.0 + norm_a));
        // boundary points belong to W(A): dominated at every grid angle
        for (size_t j = 0; j < prof.thetas.size(); ++j) {
            const double p = std::cos(prof.thetas[j]) * prof.boundary[k].real() +
                             std::sin(prof.thetas[j]) * prof.boundary[k].imag();
            CHECK(p <= prof.support[j] + 1e-8 * (1.0 + norm_a));
        }
    }
}

TEST_CASE("example matrix has a circular numerical range") {
    const CMatrix A = example_matrix();
    const NRProfile prof = nr_profile(A, 720);
    double dev = 0.0;
    for (double h : prof.support) dev = std::max(dev, std::abs(h - prof.support[0]));
    CHECK(dev <= 1e-6);
    CHECK(nr_symmetry_defect(A, 720) <= 1e-6);
}

TEST_CASE("random 2x2 boundary points lie on the ellipse") {
    for (uint64_t trial = 0; trial < 10; ++trial) {
        const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 2, .seed = 17, .trial = trial});
        const EllipseParams ep = ellipse_params_2x2(A);
        const NRProfile prof = nr_profile(A, 360);
        for (const cplx& p : prof.boundary)
            CHECK(point_ellipse_distance(ep, p) <= 1e-8 * (1.0 + operator_norm(A)));
    }
}

TEST_CASE("nr_symmetry_defect closed forms") {
    CMatrix D(2);
    D(0, 0) = 1.0;
    D(1, 1) = -1.0;
    CHECK(nr_symmetry_defect(D, 360) <= 1e-12);

    CMatrix E(2);
    E(0, 0) = 1.0;
    CHECK(nr_symmetry_defect(E, 360) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(nr_symmetry_defect(D, 9), std::invalid_argument);
}

TEST_CASE("symmetry defect is invariant under negation and unitary conjugation") {
    for (uint64_t trial = 0; trial < 5; ++trial) {
        const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 3, .seed = 53, .trial = trial});
        const CMatrix U = generate({.cls = GenClass::Unitary, .n = 3, .seed = 59, .trial = trial});
        const double d = nr_symmetry_defect(A, 360);
        const double scale = 1e-9 * (1.0 + operator_norm(A));
        CHECK(std::abs(nr_symmetry_defect(cplx(-1.0) * A, 360) - d) <= scale);
        CHECK(std::abs(nr_symmetry_defect(U.adjoint() * A * U, 360) - d) <= scale);
    }
}

TEST_CASE("contains_zero closed forms") {
    CMatrix D(2);
    D(0, 0) = 1.0;
    D(1, 1) = 2.0;
    CHECK_FALSE(contains_zero(D, 360));
    CHECK(contains_zero(jordan2(), 360));
    CMatrix S(2);
    S(0, 0) = 1.0;
    S(1, 1) = -1.0;
    CHECK(contains_zero(S, 360));
}

TEST_CASE("support function covariance properties") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 4, .seed = 61});
    const double phi = 0.37, theta = 1.21;
    const cplx c(0.4, -1.1);
    CHECK(std::abs(nr_support(std::polar(1.0, phi) * A, theta) - nr_support(A, theta - phi)) <=
          1e-10);
    CHECK(std::abs(nr_support(A.shifted(c), theta) -
                   (nr_support(A, theta) + std::cos(theta) * c.real() +
                    std::sin(theta) * c.imag())) <= 1e-10);
    // positive homogeneity
    CHECK(std::abs(nr_support(2.5 * A, theta) - 2.5 * nr_support(A, theta)) <= 1e-10);
}

TEST_CASE("compress onto bases") {
    CMatrix D(2);
    D(0, 0) = 1.0;

    std::vector<std::vector<cplx>> full = {{1.0, 0.0}, {0.0, 1.0}};
    CHECK((compress(D, full) - D).max_abs() < 1e-14);

    std::vector<std::vector<cplx>> e1 = {{1.0, 0.0}};
    const CMatrix B = compress(D, e1);
    CHECK(B.dim() == 1);
    CHECK(std::abs(B(0, 0) - 1.0) < 1e-14);

    std::vector<std::vector<cplx>> bad = {{1.0, 1.0}};
    CHECK_THROWS_AS(compress(D, bad), std::invalid_argument);
}

TEST_CASE("compressed quadratic forms are quadratic forms of the original") {
    const CMatrix A = generate({.cls = GenClass::Ginibre, .n = 4, .seed = 67});
    const CMatrix U = generate({.cls = GenClass::Unitary, .n = 4, .seed = 71});
    std::vector<std::vector<cplx>> basis;
    for (int j = 0; j < 2; ++j) {
        std::vector<cplx> col(4);
        for (int i = 0; i < 4; ++i) col[i] = U(i, j);
        basis.push_back(col);
    }
    const CMatrix B = compress(A, basis);
    SplitMix64 rng(123);
    for (int t = 0; t < 10; ++t) {
        std::vector<cplx> x = {rng.next_complex_gaussian(), rng.next_complex_gaussian()};
        double nrm = std::sqrt(std::norm(x[0]) + std::norm(x[1]));
        for (cplx& z : x) z /= nrm;
        std::vector<cplx> y(4, 0.0);
        for (int i = 0; i < 4; ++i) y[i] = basis[0][i] * x[0] + basis[1][i] * x[1];
        CHECK(std::abs(B.quad_form(x) - A.quad_form(y)) < 1e-12);
    }
}

TEST_CASE("profile CSV has the documented schema") {
    const NRProfile prof = nr_profile(jordan2(), 8);
    const std::string csv = nr_profile_csv(prof);
    CHECK(csv.rfind("theta,h,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}
