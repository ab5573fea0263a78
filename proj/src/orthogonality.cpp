#include "dwshell/orthogonality.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "dwshell/linalg.hpp"

namespace dwshell {

using std::numbers::pi;

ClassTag classify(const CMatrix& A) {
    const double scale = 1.0 + A.frobenius();
    const CMatrix Ah = A.adjoint();
    const double sa_res = (A - Ah).frobenius();
    if (sa_res <= 1e-10 * scale) return {MatrixClass::SelfAdjoint, sa_res};
    const CMatrix gram = Ah * A;
    const double uni_res = (gram - CMatrix::identity(A.dim())).frobenius();
    if (uni_res <= 1e-10) return {MatrixClass::Unitary, uni_res};
    const double normal_res = (gram - A * Ah).frobenius();
    if (normal_res <= 1e-10 * scale * scale) return {MatrixClass::Normal, normal_res};
    if (A.dim() == 2) return {MatrixClass::TwoByTwo, normal_res};
    return {MatrixClass::Generic, normal_res};
}

std::pair<double, double> norm_pm(const CMatrix& A, const CMatrix& B, cplx lambda) {
    check_same_dim(A, B, "norm_pm");
    return {operator_norm(A + lambda * B), operator_norm(A - lambda * B)};
}

namespace {

std::vector<double> log_radii(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = lo * std::pow(hi / lo, count == 1 ? 0.0 : static_cast<double>(i) / (count - 1));
    return out;
}

/// Best norm-gap witness over a polar lambda grid.
OrthWitness probe_best_witness(const CMatrix& A, const LambdaGrid& grid, double radius_scale) {
    const CMatrix I = CMatrix::identity(A.dim());
    OrthWitness best;
    double best_gap = -1.0;
    const std::vector<double> radii =
        log_radii(grid.radius_min * radius_scale, grid.radius_max * radius_scale, grid.n_radii);
    for (int a = 0; a < grid.n_angles; ++a) {
        const double ang = 2.0 * pi * a / grid.n_angles;
        for (double r : radii) {
            const cplx lam = r * cplx(std::cos(ang), std::sin(ang));
            const auto [np, nm] = norm_pm(A, I, lam);
            if (std::abs(np - nm) > best_gap) {
                best_gap = std::abs(np - nm);
                best = {lam, np, nm};
            }
        }
    }
    return best;
}

OrthWitness probe_direction(const CMatrix& A, double angle, double radius_scale) {
    const CMatrix I = CMatrix::identity(A.dim());
    OrthWitness best;
    double best_gap = -1.0;
    for (double r : log_radii(radius_scale, 1e3 * radius_scale, 12)) {
        const cplx lam = r * cplx(std::cos(angle), std::sin(angle));
        const auto [np, nm] = norm_pm(A, I, lam);
        if (std::abs(np - nm) > best_gap) {
            best_gap = std::abs(np - nm);
            best = {lam, np, nm};
        }
    }
    return best;
}

OrthVerdict selfadjoint_verdict(const CMatrix& A, const DeciderConfig& cfg, double norm_a) {
    const HermEigen eig = herm_eigen(A);
    const double lo = eig.values.front(), hi = eig.values.back();
    OrthVerdict v;
    v.method = "selfadjoint";
    v.defect = std::abs(hi + lo);
    v.tau_pass_scaled = cfg.tol_pass * (1.0 + norm_a);
    v.tau_fail_scaled = cfg.tol_fail * (1.0 + norm_a);
    if (v.defect <= 1e-10 * (1.0 + norm_a)) {
        v.kind = VerdictKind::RobertsCertified;
        v.bound = v.defect;
    } else {
        v.kind = VerdictKind::NotRoberts;
        const double lam = 0.5 * (lo + hi);
        const auto [np, nm] = norm_pm(A, CMatrix::identity(A.dim()), lam);
        v.witness = OrthWitness{lam, np, nm};
    }
    return v;
}

OrthVerdict nr_symmetry_verdict(const CMatrix& A, const DeciderConfig& cfg, double norm_a) {
    const HermPencil pencil(A);
    OrthVerdict v;
    v.method = "nr-symmetry";
    v.tau_pass_scaled = cfg.tol_pass * (1.0 + norm_a);
    v.tau_fail_scaled = cfg.tol_fail * (1.0 + norm_a);
    const int nth = cfg.n_theta;
    std::vector<double> h(nth);
    for (int k = 0; k < nth; ++k)
        h[k] = pencil.support(std::cos(2.0 * pi * k / nth), std::sin(2.0 * pi * k / nth), 0.0);
    int worst = 0;
    double defect = 0.0;
    for (int k = 0; k < nth / 2; ++k) {
        const double d = std::abs(h[k] - h[k + nth / 2]);
        if (d > defect) {
            defect = d;
            worst = k;
        }
    }
    v.defect = defect;
    if (defect <= v.tau_pass_scaled) {
        v.kind = VerdictKind::RobertsCertified;
        v.bound = defect;
    } else {
        v.kind = VerdictKind::NotRoberts;
        v.witness = probe_direction(A, 2.0 * pi * worst / nth, 1.0 + norm_a);
    }
    return v;
}

OrthVerdict trace_verdict(const CMatrix& A, const DeciderConfig& cfg, double norm_a) {
    OrthVerdict v;
    v.method = "trace";
    v.defect = std::abs(A.trace());
    v.tau_pass_scaled = cfg.tol_pass * (1.0 + norm_a);
    v.tau_fail_scaled = cfg.tol_fail * (1.0 + norm_a);
    if (v.defect <= 1e-10 * (1.0 + norm_a)) {
        v.kind = VerdictKind::RobertsCertified;
        v.bound = v.defect;
    } else {
        v.kind = VerdictKind::NotRoberts;
        v.witness = probe_best_witness(A, LambdaGrid{}, 1.0 + norm_a);
    }
    return v;
}

OrthVerdict shell_verdict(const CMatrix& A, const DeciderConfig& cfg, double norm_a) {
    const HermPencil pencil(A);
    const HemisphereGrid grid = HemisphereGrid::latlon(cfg.shell_n_phi, cfg.shell_n_theta);
    const ShellDefect sd = dv_ub_symmetry_defect(pencil, grid);
    const double scale = 1.0 + norm_a * norm_a;

    OrthVerdict v;
    v.method = "shell-sweep";
    v.defect = sd.defect;
    v.tau_pass_scaled = cfg.tol_pass * scale;
    v.tau_fail_scaled = cfg.tol_fail * scale;
    if (sd.defect <= v.tau_pass_scaled) {
        v.kind = VerdictKind::RobertsCertified;
        v.bound = sd.defect;
        return v;
    }
    if (sd.defect > v.tau_fail_scaled) {
        OrthWitness w;
        const Direction3& u = sd.witness;
        if (u.u3 > 1e-8) {
            const cplx lam(u.u1 / (2.0 * u.u3), u.u2 / (2.0 * u.u3));
            const auto [np, nm] = norm_pm(A, CMatrix::identity(A.dim()), lam);
            w = {lam, np, nm};
        } else {
            w = probe_direction(A, std::atan2(u.u2, u.u1), 1.0 + norm_a);
        }
        if (std::abs(w.norm_plus - w.norm_minus) <= cfg.tol_fail * (1.0 + norm_a))
            w = probe_best_witness(A, LambdaGrid{}, 1.0 + norm_a);
        if (std::abs(w.norm_plus - w.norm_minus) > cfg.tol_fail * (1.0 + norm_a)) {
            v.kind = VerdictKind::NotRoberts;
            v.witness = w;
            return v;
        }
    }
    v.kind = VerdictKind::Inconclusive;
    return v;
}

}  // namespace

OrthVerdict roberts_to_identity(const CMatrix& A, const DeciderConfig& cfg) {
    if (!A.all_finite())
        throw std::invalid_argument("roberts_to_identity: non-finite matrix entry");
    const double norm_a = operator_norm(A);
    if (cfg.force_shell) return shell_verdict(A, cfg, norm_a);
    switch (classify(A).cls) {
        case MatrixClass::SelfAdjoint:
            return selfadjoint_verdict(A, cfg, norm_a);
        case MatrixClass::Unitary:
        case MatrixClass::Normal:
            return nr_symmetry_verdict(A, cfg, norm_a);
        case MatrixClass::TwoByTwo:
            return trace_verdict(A, cfg, norm_a);
        case MatrixClass::Generic:
            break;
    }
    return shell_verdict(A, cfg, norm_a);
}

std::optional<OrthWitness> roberts_refute_pair(const CMatrix& A, const CMatrix& B,
                                               const LambdaGrid& grid, double tol_fail) {
    check_same_dim(A, B, "roberts_refute_pair");
    const double na = operator_norm(A), nb = operator_norm(B);
    const double tau = tol_fail * (1.0 + na + nb);
    const double radius_scale = (1.0 + na) / (1.0 + nb);
    const std::vector<double> radii =
        log_radii(grid.radius_min * radius_scale, grid.radius_max * radius_scale, grid.n_radii);
    for (int a = 0; a < grid.n_angles; ++a) {
        const double ang = 2.0 * pi * a / grid.n_angles;
        for (double r : radii) {
            const cplx lam = r * cplx(std::cos(ang), std::sin(ang));
            const auto [np, nm] = norm_pm(A, B, lam);
            if (std::abs(np - nm) > tau) return OrthWitness{lam, np, nm};
        }
    }
    return std::nullopt;
}

bool bj_to_identity(const CMatrix& A, int n_theta) {
    const CMatrix gram = A.adjoint() * A;
    const HermEigen eig = herm_eigen(gram);
    const int n = A.dim();
    const double top = eig.values.back();
    const double cluster_tol = 1e-10 * (1.0 + top);
    std::vector<std::vector<cplx>> basis;
    for (int k = 0; k < n; ++k) {
        if (eig.values[k] < top - cluster_tol) continue;
        std::vector<cplx> col(n);
        for (int i = 0; i < n; ++i) col[i] = eig.vectors(i, k);
        basis.push_back(std::move(col));
    }
    return contains_zero(compress(A, basis), n_theta);
}

bool bj_pair(const CMatrix& A, const CMatrix& B, const LambdaGrid& grid, double tol_fail) {
    check_same_dim(A, B, "bj_pair");
    const double na = operator_norm(A), nb = operator_norm(B);
    const double radius_scale = (1.0 + na) / (1.0 + nb);

    auto norm_at = [&](double re, double im) { return operator_norm(A + cplx(re, im) * B); };

    double best = na;  // lambda = 0
    double b_re = 0.0, b_im = 0.0;
    const std::vector<double> radii =
        log_radii(grid.radius_min * radius_scale, grid.radius_max * radius_scale, grid.n_radii);
    for (int a = 0; a < grid.n_angles; ++a) {
        const double ang = 2.0 * pi * a / grid.n_angles;
        for (double r : radii) {
            const double v = norm_at(r * std::cos(ang), r * std::sin(ang));
            if (v < best) {
                best = v;
                b_re = r * std::cos(ang);
                b_im = r * std::sin(ang);
            }
        }
    }
    // local compass refinement around the grid minimizer
    double step = std::max(1e-3, std::hypot(b_re, b_im)) * 0.5;
    while (step > 1e-6 * radius_scale) {
        bool improved = false;
        static constexpr double kDir[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& d : kDir) {
            const double v = norm_at(b_re + step * d[0], b_im + step * d[1]);
            if (v < best) {
                best = v;
                b_re += step * d[0];
                b_im += step * d[1];
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best >= na - tol_fail * (1.0 + na);
}

double center_selfadjoint(const CMatrix& A) {
    if (classify(A).cls != MatrixClass::SelfAdjoint)
        throw std::invalid_argument("center_selfadjoint: input must be self-adjoint");
    const HermEigen eig = herm_eigen(A);
    return 0.5 * (eig.values.front() + eig.values.back());
}

bool single_lambda_check(const CMatrix& A, double lambda0) {
    if (classify(A).cls != MatrixClass::SelfAdjoint)
        throw std::invalid_argument("single_lambda_check: input must be self-adjoint");
    if (lambda0 == 0.0) throw std::invalid_argument("single_lambda_check: lambda0 must be nonzero");
    const auto [np, nm] = norm_pm(A, CMatrix::identity(A.dim()), lambda0);
    return std::abs(np - nm) <= 1e-10 * (1.0 + operator_norm(A) + std::abs(lambda0));
}

EllipseParams ellipse_params_2x2(const CMatrix& A) {
    if (A.dim() != 2) throw std::invalid_argument("ellipse_params_2x2: matrix must be 2x2");
    const auto [alpha, beta] = eig2x2(A);
    const double tr_gram = (A.adjoint() * A).trace().real();
    double m2 = tr_gram - std::norm(alpha) - std::norm(beta);
    if (m2 < -1e-12) throw std::runtime_error("ellipse_params_2x2: negative minor axis");
    m2 = std::max(0.0, m2);
    return EllipseParams{0.5 * A.trace(), {alpha, beta}, std::sqrt(m2)};
}

DwAxis dw_axis_2x2(const CMatrix& A) {
    if (A.dim() != 2) throw std::invalid_argument("dw_axis_2x2: matrix must be 2x2");
    const CMatrix gram = A.adjoint() * A;
    const double half_tr = 0.5 * gram.trace().real();
    const CMatrix centered = gram.shifted(-half_tr);
    return DwAxis{0.5 * A.trace(), half_tr, operator_norm(centered)};
}

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::RobertsCertified: return "RobertsCertified";
        case VerdictKind::NotRoberts: return "NotRoberts";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string verdict_json(const OrthVerdict& v) {
    nlohmann::json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["method"] = v.method;
    j["bound"] = v.bound;
    j["defect"] = v.defect;
    if (v.witness) {
        j["witness"] = {{"lambda", {v.witness->lambda.real(), v.witness->lambda.imag()}},
                        {"norm_plus", v.witness->norm_plus},
                        {"norm_minus", v.witness->norm_minus}};
    }
    j["tolerances"] = {{"tau_pass", v.tau_pass_scaled}, {"tau_fail", v.tau_fail_scaled}};
    return j.dump();
}

}  // namespace dwshell
