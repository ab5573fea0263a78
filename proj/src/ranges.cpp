#include "dwshell/ranges.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dwshell/parallel.hpp"

namespace dwshell {

using std::numbers::pi;

double nr_support(const CMatrix& A, double theta) {
    const CartesianParts parts = cartesian_parts(A);
    const double c = std::cos(theta), s = std::sin(theta);
    const int n = A.dim();
    CMatrix H(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H(i, j) = c * parts.re(i, j) + s * parts.im(i, j);
    return herm_eigen_max(H);
}

NRProfile nr_profile(const CMatrix& A, int n_theta) {
    if (n_theta < 8) throw std::invalid_argument("nr_profile: n_theta must be >= 8");
    const CartesianParts parts = cartesian_parts(A);
    const int n = A.dim();
    NRProfile out;
    out.thetas.resize(n_theta);
    out.support.resize(n_theta);
    out.boundary.resize(n_theta);
    parallel_for(static_cast<size_t>(n_theta), [&](size_t k) {
        const double theta = 2.0 * pi * static_cast<double>(k) / n_theta;
        const double c = std::cos(theta), s = std::sin(theta);
        CMatrix H(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) H(i, j) = c * parts.re(i, j) + s * parts.im(i, j);
        const HermEigen eig = herm_eigen(H);
        std::vector<cplx> x(n);
        for (int i = 0; i < n; ++i) x[i] = eig.vectors(i, n - 1);
        out.thetas[k] = theta;
        out.support[k] = eig.values.back();
        out.boundary[k] = A.quad_form(x);
    });
    return out;
}

static std::vector<double> support_sweep(const HermPencil& pencil, int n_theta) {
    std::vector<double> h(n_theta);
    parallel_for(static_cast<size_t>(n_theta), [&](size_t k) {
        const double theta = 2.0 * pi * static_cast<double>(k) / n_theta;
        h[k] = pencil.support(std::cos(theta), std::sin(theta), 0.0);
    });
    return h;
}

double nr_symmetry_defect(const HermPencil& pencil, int n_theta) {
    if (n_theta < 8 || n_theta % 2 != 0)
        throw std::invalid_argument("nr_symmetry_defect: n_theta must be even and >= 8");
    const std::vector<double> h = support_sweep(pencil, n_theta);
    double defect = 0.0;
    const int half = n_theta / 2;
    for (int k = 0; k < half; ++k)
        defect = std::max(defect, std::abs(h[k] - h[k + half]));
    return defect;
}

double nr_symmetry_defect(const CMatrix& A, int n_theta) {
    return nr_symmetry_defect(HermPencil(A), n_theta);
}

double nr_min_support(const HermPencil& pencil, int n_theta) {
    const std::vector<double> h = support_sweep(pencil, n_theta);
    double m = h[0];
    for (double v : h) m = std::min(m, v);
    return m;
}

bool contains_zero(const CMatrix& A, int n_theta) {
    const double tau_zero = 1e-9 * (1.0 + operator_norm(A));
    return nr_min_support(HermPencil(A), n_theta) >= -tau_zero;
}

CMatrix compress(const CMatrix& A, const std::vector<std::vector<cplx>>& basis) {
    const int n = A.dim();
    const int k = static_cast<int>(basis.size());
    if (k == 0 || k > n) throw std::invalid_argument("compress: basis must have 1..n columns");
    for (const auto& col : basis)
        if (static_cast<int>(col.size()) != n)
            throw std::invalid_argument("compress: basis column length mismatch");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) {
            cplx dot = 0.0;
            for (int t = 0; t < n; ++t) dot += std::conj(basis[i][t]) * basis[j][t];
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expect) > 1e-10)
                throw std::invalid_argument("compress: basis columns are not orthonormal");
        }
    CMatrix B(k);
    for (int j = 0; j < k; ++j) {
        std::vector<cplx> Ab(n, 0.0);
        for (int r = 0; r < n; ++r)
            for (int t = 0; t < n; ++t) Ab[r] += A(r, t) * basis[j][t];
        for (int i = 0; i < k; ++i) {
            cplx dot = 0.0;
            for (int t = 0; t < n; ++t) dot += std::conj(basis[i][t]) * Ab[t];
            B(i, j) = dot;
        }
    }
    return B;
}

std::string nr_profile_csv(const NRProfile& profile) {
    std::ostringstream os;
    os.precision(9);
    os << "theta,h,re,im\n";
    for (size_t k = 0; k < profile.thetas.size(); ++k)
        os << profile.thetas[k] << ',' << profile.support[k] << ',' << profile.boundary[k].real()
           << ',' << profile.boundary[k].imag() << '\n';
    return os.str();
}

}  // namespace dwshell
