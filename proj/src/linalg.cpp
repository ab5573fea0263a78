#include "dwshell/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dwshell {

CartesianParts cartesian_parts(const CMatrix& A) {
    const CMatrix Ah = A.adjoint();
    const int n = A.dim();
    CMatrix re(n), im(n);
    const cplx half_over_i(0.0, -0.5);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            re(i, j) = 0.5 * (A(i, j) + Ah(i, j));
            im(i, j) = half_over_i * (A(i, j) - Ah(i, j));
        }
    return CartesianParts{std::move(re), std::move(im), Ah * A};
}

namespace detail {

std::vector<double> embed_hermitian(const CMatrix& H) {
    const int n = H.dim();
    const int m = 2 * n;
    std::vector<double> s(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = 0.5 * (H(i, j).real() + H(j, i).real());
            const double y = 0.5 * (H(i, j).imag() - H(j, i).imag());
            s[static_cast<size_t>(i) * m + j] = x;
            s[static_cast<size_t>(n + i) * m + n + j] = x;
            s[static_cast<size_t>(i) * m + n + j] = -y;
            s[static_cast<size_t>(n + i) * m + j] = y;
        }
    return s;
}

bool jacobi_sym(std::vector<double>& s, int m, std::vector<double>* vecs) {
    auto S = [&](int i, int j) -> double& { return s[static_cast<size_t>(i) * m + j]; };

    double fro = 0.0;
    for (double v : s) fro += v * v;
    fro = std::sqrt(fro);
    if (fro == 0.0) return true;
    const double target = 1e-13 * fro;
    const double skip = 0.1 * target / m;

    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) off += 2.0 * S(i, j) * S(i, j);
        if (std::sqrt(off) <= target) return true;

        for (int p = 0; p < m - 1; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const double apq = S(p, q);
                if (std::abs(apq) <= skip) continue;
                const double theta = (S(q, q) - S(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;

                const double app = S(p, p), aqq = S(q, q);
                S(p, p) = app - t * apq;
                S(q, q) = aqq + t * apq;
                S(p, q) = 0.0;
                S(q, p) = 0.0;
                for (int k = 0; k < m; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = S(k, p), akq = S(k, q);
                    S(k, p) = c * akp - sn * akq;
                    S(k, q) = sn * akp + c * akq;
                    S(p, k) = S(k, p);
                    S(q, k) = S(k, q);
                }
                if (vecs) {
                    for (int k = 0; k < m; ++k) {
                        double& vkp = (*vecs)[static_cast<size_t>(k) * m + p];
                        double& vkq = (*vecs)[static_cast<size_t>(k) * m + q];
                        const double a = vkp, b = vkq;
                        vkp = c * a - sn * b;
                        vkq = sn * a + c * b;
                    }
                }
            }
        }
    }
    double off = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) off += 2.0 * s[static_cast<size_t>(i) * m + j] *
                                               s[static_cast<size_t>(i) * m + j];
    return std::sqrt(off) <= target;
}

double sym_eigen_max(std::vector<double> s, int m) {
    if (!jacobi_sym(s, m, nullptr))
        throw std::runtime_error("jacobi_sym: no convergence within sweep cap");
    double best = s[0];
    for (int i = 1; i < m; ++i) best = std::max(best, s[static_cast<size_t>(i) * m + i]);
    return best;
}

}  // namespace detail

static void check_hermitian(const CMatrix& H) {
    const CMatrix D = H - H.adjoint();
    if (D.frobenius() > kHermCheckTol * (1.0 + H.frobenius()))
        throw std::invalid_argument("herm_eigen: input is not Hermitian within tolerance");
}

HermEigen herm_eigen(const CMatrix& H) {
    check_hermitian(H);
    const int n = H.dim();
    const int m = 2 * n;
    std::vector<double> s = detail::embed_hermitian(H);
    std::vector<double> vecs(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) vecs[static_cast<size_t>(i) * m + i] = 1.0;
    if (!detail::jacobi_sym(s, m, &vecs))
        throw std::runtime_error("herm_eigen: Jacobi iteration did not converge");

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return s[static_cast<size_t>(a) * m + a] < s[static_cast<size_t>(b) * m + b];
    });

    // Each eigenvalue of H appears twice in the embedded spectrum: the pair
    // (p;q) and (-q;p) both map to the complex eigenvector p+iq (up to phase).
    // Walk the sorted real eigenpairs and keep n directions that survive
    // orthogonalization against everything already accepted.
    HermEigen out;
    out.vectors = CMatrix(n);
    std::vector<std::vector<cplx>> accepted;
    for (int idx : order) {
        if (static_cast<int>(accepted.size()) == n) break;
        std::vector<cplx> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = cplx(vecs[static_cast<size_t>(i) * m + idx],
                        vecs[static_cast<size_t>(n + i) * m + idx]);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& w : accepted) {
                cplx proj = 0.0;
                for (int i = 0; i < n; ++i) proj += std::conj(w[i]) * v[i];
                for (int i = 0; i < n; ++i) v[i] -= proj * w[i];
            }
        }
        double nrm = 0.0;
        for (const cplx& z : v) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-3) continue;
        for (cplx& z : v) z /= nrm;
        out.values.push_back(s[static_cast<size_t>(idx) * m + idx]);
        accepted.push_back(std::move(v));
    }
    if (static_cast<int>(accepted.size()) != n)
        throw std::runtime_error("herm_eigen: eigenvector extraction failed");
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) out.vectors(i, k) = accepted[k][i];
    return out;
}

double herm_eigen_max(const CMatrix& H) {
    check_hermitian(H);
    return detail::sym_eigen_max(detail::embed_hermitian(H), 2 * H.dim());
}

double operator_norm(const CMatrix& A) {
    const CMatrix gram = A.adjoint() * A;
    return std::sqrt(std::max(0.0, herm_eigen_max(gram)));
}

std::pair<cplx, cplx> eig2x2(const CMatrix& A) {
    if (A.dim() != 2) throw std::invalid_argument("eig2x2: matrix must be 2x2");
    const cplx tr = A.trace();
    const cplx det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    const cplx sq = std::sqrt(tr * tr - 4.0 * det);
    return {0.5 * (tr - sq), 0.5 * (tr + sq)};
}

}  // namespace dwshell
