#include "dwshell/shell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "dwshell/parallel.hpp"
#include "dwshell/ranges.hpp"

namespace dwshell {

using std::numbers::pi;

HemisphereGrid HemisphereGrid::latlon(int n_phi, int n_theta) {
    if (n_phi < 2 || n_theta < 8 || n_theta % 2 != 0)
        throw std::invalid_argument("HemisphereGrid: need n_phi >= 2 and even n_theta >= 8");
    HemisphereGrid g;
    g.n_phi = n_phi;
    g.n_theta = n_theta;
    g.directions.reserve(static_cast<size_t>(n_phi) * n_theta);
    const double dphi = 0.5 * pi / (n_phi - 1);
    const double dtheta = 2.0 * pi / n_theta;
    for (int j = 0; j < n_phi; ++j) {
        const double phi = j * dphi;
        for (int k = 0; k < n_theta; ++k) {
            const double theta = k * dtheta;
            g.directions.push_back(
                {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)});
        }
    }
    g.mesh = std::hypot(dphi, dtheta);
    return g;
}

static Direction3 normalized(const Direction3& u) {
    const double n = std::sqrt(u.u1 * u.u1 + u.u2 * u.u2 + u.u3 * u.u3);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("dv_support: direction must be a unit vector");
    return {u.u1 / n, u.u2 / n, u.u3 / n};
}

double dv_support(const HermPencil& pencil, const Direction3& u) {
    const Direction3 v = normalized(u);
    return pencil.support(v.u1, v.u2, v.u3);
}

double dv_support(const CMatrix& A, const Direction3& u) {
    return dv_support(HermPencil(A), u);
}

ShellCloud dv_upper_samples(const CMatrix& A, const HemisphereGrid& grid) {
    const CartesianParts parts = cartesian_parts(A);
    const int n = A.dim();
    const size_t count = grid.directions.size();
    std::vector<ShellPoint> slots(count);
    std::vector<char> keep(count, 0);
    parallel_for(count, [&](size_t idx) {
        const Direction3& u = grid.directions[idx];
        if (u.u3 <= 0.0) return;
        CMatrix P(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                P(i, j) = u.u1 * parts.re(i, j) + u.u2 * parts.im(i, j) + u.u3 * parts.gram(i, j);
        const HermEigen eig = herm_eigen(P);
        std::vector<cplx> x(n);
        for (int i = 0; i < n; ++i) x[i] = eig.vectors(i, n - 1);
        ShellPoint pt;
        pt.mu = A.quad_form(x);
        pt.r = parts.gram.quad_form(x).real();
        pt.u = u;
        pt.h = eig.values.back();
        slots[idx] = pt;
        keep[idx] = 1;
    });
    ShellCloud cloud;
    cloud.reserve(count);
    for (size_t idx = 0; idx < count; ++idx)
        if (keep[idx]) cloud.push_back(slots[idx]);
    return cloud;
}

ShellDefect dv_ub_symmetry_defect(const HermPencil& pencil, const HemisphereGrid& grid) {
    const int nphi = grid.n_phi, nth = grid.n_theta;
    const size_t count = grid.directions.size();
    std::vector<double> h(count);
    parallel_for(count, [&](size_t idx) {
        const Direction3& u = grid.directions[idx];
        h[idx] = pencil.support(u.u1, u.u2, u.u3);
    });

    ShellDefect out;
    size_t best = 0;
    const int half = nth / 2;
    for (int j = 0; j < nphi; ++j)
        for (int k = 0; k < nth; ++k) {
            const size_t idx = static_cast<size_t>(j) * nth + k;
            const size_t mirror = static_cast<size_t>(j) * nth + (k + half) % nth;
            const double d = std::abs(h[idx] - h[mirror]);
            if (d > out.defect) {
                out.defect = d;
                best = idx;
            }
        }
    out.witness = grid.directions[best];

    // One local refinement pass around the worst cell.
    {
        const int j0 = static_cast<int>(best) / nth;
        const int k0 = static_cast<int>(best) % nth;
        const double dphi = 0.5 * pi / (nphi - 1);
        const double dtheta = 2.0 * pi / nth;
        const double phi0 = j0 * dphi, theta0 = k0 * dtheta;
        constexpr int kFine = 11;
        std::vector<double> d_fine(kFine * kFine);
        std::vector<Direction3> u_fine(kFine * kFine);
        parallel_for(static_cast<size_t>(kFine) * kFine, [&](size_t t) {
            const int a = static_cast<int>(t) / kFine, b = static_cast<int>(t) % kFine;
            const double phi =
                std::clamp(phi0 + (a - kFine / 2) * (2.0 * dphi / (kFine - 1)), 0.0, 0.5 * pi);
            const double theta = theta0 + (b - kFine / 2) * (2.0 * dtheta / (kFine - 1));
            const Direction3 u{std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta),
                               std::cos(phi)};
            u_fine[t] = u;
            d_fine[t] = std::abs(pencil.support(u.u1, u.u2, u.u3) -
                                 pencil.support(-u.u1, -u.u2, u.u3));
        });
        for (size_t t = 0; t < d_fine.size(); ++t)
            if (d_fine[t] > out.defect) {
                out.defect = d_fine[t];
                out.witness = u_fine[t];
            }
    }

    const double nx = std::max(pencil.support(1, 0, 0), pencil.support(-1, 0, 0));
    const double ny = std::max(pencil.support(0, 1, 0), pencil.support(0, -1, 0));
    const double ng = pencil.support(0, 0, 1);
    const double lipschitz = 2.0 * (nx + ny + ng);
    out.certified_bound = out.defect + lipschitz * grid.mesh;
    return out;
}

ShellDefect dv_ub_symmetry_defect(const CMatrix& A, const HemisphereGrid& grid) {
    return dv_ub_symmetry_defect(HermPencil(A), grid);
}

FiberMax l_mu_max(const CMatrix& A, cplx mu, const FiberConfig& cfg) {
    const HermPencil pencil(A);
    const double norm_a = std::sqrt(std::max(0.0, pencil.support(0, 0, 1)));
    const double tau_zero = 1e-9 * (1.0 + norm_a);

    // mu must be support-dominated at every sampled angle: mu in W(A).
    for (int k = 0; k < cfg.check_n_theta; ++k) {
        const double theta = 2.0 * pi * k / cfg.check_n_theta;
        const double h = pencil.support(std::cos(theta), std::sin(theta), 0.0);
        if (std::cos(theta) * mu.real() + std::sin(theta) * mu.imag() > h + tau_zero)
            throw std::domain_error("l_mu_max: mu lies outside W(A)");
    }

    const double box = cfg.box_scale * (1.0 + norm_a);
    auto objective = [&](double v1, double v2) {
        return pencil.support(v1, v2, 1.0) - v1 * mu.real() - v2 * mu.imag();
    };

    const int cn = cfg.coarse_n;
    std::vector<double> vals(static_cast<size_t>(cn) * cn);
    parallel_for(vals.size(), [&](size_t t) {
        const int i = static_cast<int>(t) / cn, j = static_cast<int>(t) % cn;
        const double v1 = -box + 2.0 * box * i / (cn - 1);
        const double v2 = -box + 2.0 * box * j / (cn - 1);
        vals[t] = objective(v1, v2);
    });
    size_t arg = 0;
    for (size_t t = 1; t < vals.size(); ++t)
        if (vals[t] < vals[arg]) arg = t;
    double v1 = -box + 2.0 * box * (static_cast<int>(arg) / cn) / (cn - 1);
    double v2 = -box + 2.0 * box * (static_cast<int>(arg) % cn) / (cn - 1);
    double f = vals[arg];

    double step = 2.0 * box / (cn - 1);
    static constexpr double kDir[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                          {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    while (step >= cfg.step_tol) {
        bool improved = false;
        for (const auto& d : kDir) {
            const double w1 = std::clamp(v1 + step * d[0], -box, box);
            const double w2 = std::clamp(v2 + step * d[1], -box, box);
            const double g = objective(w1, w2);
            if (g < f) {
                f = g;
                v1 = w1;
                v2 = w2;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }

    // A flat direction (e.g. a matrix with zero imaginary part) can park the
    // minimizer on the box boundary without the bound being active; slide
    // each such coordinate inward while the objective does not increase.
    const double flat_tol = 1e-12 * (1.0 + std::abs(f));
    for (int it = 0; it < 80; ++it) {
        bool moved = false;
        if (std::abs(v1) >= box * (1.0 - 1e-9) || std::abs(v1) > 1.0) {
            if (objective(0.5 * v1, v2) <= f + flat_tol) {
                v1 *= 0.5;
                f = std::min(f, objective(v1, v2));
                moved = true;
            }
        }
        if (std::abs(v2) >= box * (1.0 - 1e-9) || std::abs(v2) > 1.0) {
            if (objective(v1, 0.5 * v2) <= f + flat_tol) {
                v2 *= 0.5;
                f = std::min(f, objective(v1, v2));
                moved = true;
            }
        }
        if (!moved) break;
    }

    FiberMax out;
    out.value = f;
    out.boundary_flag = std::max(std::abs(v1), std::abs(v2)) >= box * (1.0 - 1e-9);
    return out;
}

std::string shell_csv(const ShellCloud& cloud) {
    std::ostringstream os;
    os.precision(9);
    os << "u1,u2,u3,h,mu_re,mu_im,r\n";
    for (const ShellPoint& p : cloud)
        os << p.u.u1 << ',' << p.u.u2 << ',' << p.u.u3 << ',' << p.h << ',' << p.mu.real() << ','
           << p.mu.imag() << ',' << p.r << '\n';
    return os.str();
}

std::string shell_json(const ShellCloud& cloud, const HemisphereGrid& grid) {
    nlohmann::json pts = nlohmann::json::array();
    for (const ShellPoint& p : cloud)
        pts.push_back({{"u", {p.u.u1, p.u.u2, p.u.u3}},
                       {"h", p.h},
                       {"mu", {p.mu.real(), p.mu.imag()}},
                       {"r", p.r}});
    nlohmann::json j;
    j["grid"] = {{"n_phi", grid.n_phi}, {"n_theta", grid.n_theta}, {"mesh", grid.mesh}};
    j["points"] = std::move(pts);
    return j.dump();
}

}  // namespace dwshell
