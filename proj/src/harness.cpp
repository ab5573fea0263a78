#include "dwshell/harness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dwshell/linalg.hpp"

namespace dwshell {

using std::numbers::pi;

CMatrix example_matrix() {
    CMatrix A(4);
    A(0, 2) = 2.0;
    A(0, 3) = 1.0;
    A(1, 1) = 1.0;
    A(2, 3) = -1.0;
    A(3, 3) = 1.0;
    return A;
}

DeciderConfig batch_config() {
    DeciderConfig cfg;
    cfg.n_theta = 360;
    cfg.shell_n_phi = 31;
    cfg.shell_n_theta = 120;
    return cfg;
}

namespace {

void record(SuiteResult& r, bool pass, uint64_t trial, const std::string& what) {
    ++r.total;
    if (pass) {
        ++r.passed;
    } else {
        std::ostringstream os;
        os << "trial " << trial << ": " << what;
        r.failures.push_back(os.str());
    }
}

bool decided(VerdictKind k) { return k != VerdictKind::Inconclusive; }

}  // namespace

SuiteResult run_chain(int trials, uint64_t seed) {
    SuiteResult r{.name = "chain"};
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.cls = GenClass::OrthogonalPair,
                     .n = 4 + t % 3,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t)};
        const auto [A, B] = generate_pair(spec);
        const double scale = 1.0 + operator_norm(A) + operator_norm(B);
        const auto witness = roberts_refute_pair(A, B, LambdaGrid{}, 1e-9);
        bool ok = !witness.has_value();
        std::string what;
        if (!ok) {
            what = "refutation witness found for an a*b=0 pair, gap " +
                   std::to_string(std::abs(witness->norm_plus - witness->norm_minus) / scale);
        } else if (!bj_pair(A, B)) {
            ok = false;
            what = "A not Birkhoff-James orthogonal to B";
        } else if (!bj_pair(B, A)) {
            ok = false;
            what = "B not Birkhoff-James orthogonal to A";
        }
        record(r, ok, spec.trial, what);
    }
    return r;
}

SuiteResult run_twobytwo(int trials, uint64_t seed) {
    SuiteResult r{.name = "twobytwo"};
    DeciderConfig shell_cfg = batch_config();
    shell_cfg.force_shell = true;
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.cls = (t % 5 < 4) ? GenClass::Ginibre : GenClass::TraceZero2x2,
                     .n = 2,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t)};
        const CMatrix A = generate(spec);
        const OrthVerdict fast = roberts_to_identity(A, batch_config());
        const OrthVerdict shell = roberts_to_identity(A, shell_cfg);
        const bool agree =
            decided(fast.kind) && decided(shell.kind) && fast.kind == shell.kind;
        record(r, agree, spec.trial,
               std::string("trace path ") + verdict_kind_name(fast.kind) + " vs shell sweep " +
                   verdict_kind_name(shell.kind));
    }
    return r;
}

SuiteResult run_normal(int trials, uint64_t seed) {
    SuiteResult r{.name = "normal"};
    DeciderConfig shell_cfg = batch_config();
    shell_cfg.force_shell = true;
    for (int t = 0; t < trials; ++t) {
        const int n = 3 + t % 3;
        const bool symmetric = t % 2 == 0;
        SplitMix64 rng = SplitMix64::substream(seed ^ 0xA5A5A5A5ULL, static_cast<uint64_t>(t));
        std::vector<cplx> half(n / 2);
        for (cplx& s : half) s = rng.next_complex_gaussian() + rng.next_complex_gaussian();

        GenSpec spec{.cls = GenClass::SymmetricSpectrumNormal,
                     .n = n,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t),
                     .spectrum = half};
        CMatrix A = generate(spec);
        if (!symmetric) {
            // push the largest-modulus eigenvalue radially outward by 0.3:
            // the spectrum (hence the numerical range) loses its symmetry
            std::vector<cplx> full;
            for (const cplx& s : half) {
                full.push_back(s);
                full.push_back(-s);
            }
            while (static_cast<int>(full.size()) < n) full.push_back(0.0);
            size_t arg = 0;
            for (size_t i = 1; i < full.size(); ++i)
                if (std::abs(full[i]) > std::abs(full[arg])) arg = i;
            if (std::abs(full[arg]) < 1e-6)
                full[arg] += 0.5;
            else
                full[arg] += 0.3 * full[arg] / std::abs(full[arg]);
            GenSpec pspec{.cls = GenClass::NormalWithSpectrum,
                          .n = n,
                          .seed = seed,
                          .trial = static_cast<uint64_t>(t),
                          .spectrum = full};
            A = generate(pspec);
        }
        const OrthVerdict v = roberts_to_identity(A, shell_cfg);
        const VerdictKind expect =
            symmetric ? VerdictKind::RobertsCertified : VerdictKind::NotRoberts;
        record(r, v.kind == expect, static_cast<uint64_t>(t),
               std::string("expected ") + verdict_kind_name(expect) + ", got " +
                   verdict_kind_name(v.kind) + " (defect " + std::to_string(v.defect) + ")");
    }
    return r;
}

SuiteResult run_selfadjoint(int trials, uint64_t seed) {
    SuiteResult r{.name = "selfadjoint"};
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.cls = GenClass::Hermitian,
                     .n = 3 + t % 4,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t)};
        const CMatrix A = generate(spec);
        const HermEigen eig = herm_eigen(A);
        const bool spectrum_symmetric =
            std::abs(eig.values.front() + eig.values.back()) <= 1e-10 * (1.0 + operator_norm(A));
        const OrthVerdict v = roberts_to_identity(A);
        bool ok = (v.kind == VerdictKind::RobertsCertified) == spectrum_symmetric;
        std::string what = "spectral criterion disagrees with verdict";
        if (ok) {
            const double lam = center_selfadjoint(A);
            const OrthVerdict vc = roberts_to_identity(A.shifted(-lam));
            ok = vc.kind == VerdictKind::RobertsCertified;
            what = "recentred matrix not Roberts-certified";
        }
        record(r, ok, spec.trial, what);
    }
    return r;
}

SuiteResult run_oracle(int trials, uint64_t seed) {
    SuiteResult r{.name = "oracle"};
    DeciderConfig shell_cfg = batch_config();
    shell_cfg.force_shell = true;
    int inconclusive = 0;
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.cls = GenClass::Ginibre,
                     .n = 4,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t)};
        const CMatrix A = generate(spec);
        const OrthVerdict v = roberts_to_identity(A, shell_cfg);
        if (!decided(v.kind)) {
            ++inconclusive;
            ++r.total;
            ++r.passed;  // counted separately against the 2% budget below
            continue;
        }
        // independent brute-force oracle: polar lambda grid of direct norm
        // comparisons
        const double norm_a = operator_norm(A);
        const CMatrix I = CMatrix::identity(4);
        bool oracle_not_roberts = false;
        for (int a = 0; a < 24 && !oracle_not_roberts; ++a) {
            for (int k = 0; k < 20; ++k) {
                const double radius =
                    1e-2 * std::pow(1e4, k / 19.0) * (1.0 + norm_a);
                const cplx lam =
                    radius * cplx(std::cos(2.0 * pi * a / 24), std::sin(2.0 * pi * a / 24));
                const auto [np, nm] = norm_pm(A, I, lam);
                if (std::abs(np - nm) > kTolFail * (1.0 + norm_a)) {
                    oracle_not_roberts = true;
                    break;
                }
            }
        }
        const VerdictKind oracle_kind =
            oracle_not_roberts ? VerdictKind::NotRoberts : VerdictKind::RobertsCertified;
        record(r, v.kind == oracle_kind, spec.trial,
               std::string("shell sweep ") + verdict_kind_name(v.kind) + " vs oracle " +
                   verdict_kind_name(oracle_kind));
    }
    if (inconclusive > std::max(1, trials / 50)) {
        r.failures.push_back("inconclusive rate above 2%: " + std::to_string(inconclusive) + "/" +
                             std::to_string(trials));
        --r.passed;
    }
    return r;
}

double point_ellipse_distance(const EllipseParams& ep, cplx p) {
    const cplx focal = 0.5 * (ep.foci.second - ep.foci.first);
    const double b = 0.5 * ep.minor_axis;
    const double a = std::sqrt(b * b + std::norm(focal));
    const double psi = std::abs(focal) > 1e-15 ? std::arg(focal) : 0.0;
    const cplx z = (p - ep.center) * std::polar(1.0, -psi);
    const double x = z.real(), y = z.imag();
    if (b <= 1e-13 * (1.0 + a)) {
        const double dx = std::max(0.0, std::abs(x) - a);
        return std::hypot(dx, y);
    }
    auto dist_at = [&](double t) { return std::hypot(x - a * std::cos(t), y - b * std::sin(t)); };
    constexpr int kCoarse = 720;
    double best_t = 0.0, best = dist_at(0.0);
    for (int k = 1; k < kCoarse; ++k) {
        const double t = 2.0 * pi * k / kCoarse;
        const double d = dist_at(t);
        if (d < best) {
            best = d;
            best_t = t;
        }
    }
    double lo = best_t - 2.0 * pi / kCoarse, hi = best_t + 2.0 * pi / kCoarse;
    for (int it = 0; it < 100; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (dist_at(m1) < dist_at(m2))
            hi = m2;
        else
            lo = m1;
    }
    return dist_at(0.5 * (lo + hi));
}

SuiteResult run_ellipse(int trials, uint64_t seed) {
    SuiteResult r{.name = "ellipse"};
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.cls = GenClass::Ginibre,
                     .n = 2,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t)};
        const CMatrix A = generate(spec);
        const EllipseParams ep = ellipse_params_2x2(A);
        const NRProfile prof = nr_profile(A, 360);
        double worst = 0.0;
        for (const cplx& p : prof.boundary)
            worst = std::max(worst, point_ellipse_distance(ep, p));
        const double tol = 1e-8 * (1.0 + operator_norm(A));
        record(r, worst <= tol, spec.trial,
               "boundary-to-ellipse distance " + std::to_string(worst));
    }
    return r;
}

SuiteResult run_dwaxis(int trials, uint64_t seed) {
    SuiteResult r{.name = "dwaxis"};
    const HemisphereGrid grid = HemisphereGrid::latlon(31, 120);
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.cls = GenClass::Ginibre,
                     .n = 2,
                     .seed = seed,
                     .trial = static_cast<uint64_t>(t)};
        const CMatrix A = generate(spec);
        const DwAxis axis = dw_axis_2x2(A);
        const ShellCloud cloud = dv_upper_samples(A, grid);
        bool ok = true;
        std::string what;
        double max_r = -1.0;
        for (const ShellPoint& p : cloud) {
            max_r = std::max(max_r, p.r);
            if (std::abs(p.r - axis.center_r) > axis.axis_halflength + 1e-10) {
                ok = false;
                what = "sample height outside the vertical axis bound";
                break;
            }
        }
        if (ok && std::abs(max_r - (axis.center_r + axis.axis_halflength)) > 1e-6) {
            ok = false;
            what = "top extreme not attained by sampled directions";
        }
        if (ok) {
            const double bottom = -dv_support(A, Direction3{0.0, 0.0, -1.0});
            if (std::abs(bottom - (axis.center_r - axis.axis_halflength)) > 1e-6) {
                ok = false;
                what = "bottom extreme mismatch at direction (0,0,-1)";
            }
        }
        record(r, ok, spec.trial, what);
    }
    return r;
}

SuiteResult run_invariance(int trials, uint64_t seed) {
    SuiteResult r{.name = "invariance"};
    const DeciderConfig cfg = batch_config();
    // grid-aligned rotation angle: 7 steps of the 120-point shell equator,
    // 21 steps of the 360-point range sweep
    const double theta = 2.0 * pi * 7.0 / 120.0;
    for (int t = 0; t < trials; ++t) {
        GenSpec spec{.seed = seed, .trial = static_cast<uint64_t>(t)};
        switch (t % 5) {
            case 0: spec.cls = GenClass::Ginibre; spec.n = 3; break;
            case 1: spec.cls = GenClass::Ginibre; spec.n = 4; break;
            case 2: spec.cls = GenClass::Hermitian; spec.n = 4; break;
            case 3: {
                spec.cls = GenClass::SymmetricSpectrumNormal;
                spec.n = 4;
                SplitMix64 rng = SplitMix64::substream(seed ^ 0x5C5C5CULL, spec.trial);
                spec.spectrum = {rng.next_complex_gaussian(), rng.next_complex_gaussian()};
                break;
            }
            case 4: spec.cls = GenClass::TraceZero2x2; spec.n = 2; break;
        }
        const CMatrix A = generate(spec);
        const VerdictKind base = roberts_to_identity(A, cfg).kind;

        GenSpec uspec{.cls = GenClass::Unitary, .n = spec.n, .seed = seed ^ 0xBEEFULL,
                      .trial = spec.trial};
        const CMatrix U = generate(uspec);
        const CMatrix variants[] = {U.adjoint() * A * U, std::polar(1.0, theta) * A, 3.0 * A};
        bool ok = true;
        std::string what;
        for (const CMatrix& V : variants) {
            const VerdictKind k = roberts_to_identity(V, cfg).kind;
            if (k != base) {
                ok = false;
                what = std::string("verdict changed under a symmetry: ") +
                       verdict_kind_name(base) + " -> " + verdict_kind_name(k);
                break;
            }
        }
        if (ok && base == VerdictKind::RobertsCertified) {
            const double d = nr_symmetry_defect(A, cfg.n_theta);
            if (d > 3.0 * kTolPass * (1.0 + operator_norm(A))) {
                ok = false;
                what = "Roberts-certified matrix with asymmetric numerical range";
            }
        }
        record(r, ok, spec.trial, what);
    }
    return r;
}

SuiteResult run_evenness(int trials, uint64_t seed) {
    SuiteResult r{.name = "evenness"};
    FiberConfig fcfg;
    fcfg.coarse_n = 21;
    for (int t = 0; t < trials; ++t) {
        CMatrix A(2);
        cplx axis_dir;  // direction of a diameter of W(A) through 0
        double axis_len = 0.0;
        if (t % 2 == 0) {
            const int n = 3 + t % 2;
            SplitMix64 rng = SplitMix64::substream(seed ^ 0x77ULL, static_cast<uint64_t>(t));
            std::vector<cplx> half = {rng.next_complex_gaussian() + 0.5};
            GenSpec spec{.cls = GenClass::SymmetricSpectrumNormal,
                         .n = n,
                         .seed = seed,
                         .trial = static_cast<uint64_t>(t),
                         .spectrum = half};
            A = generate(spec);
            axis_dir = half[0] / std::abs(half[0]);
            axis_len = std::abs(half[0]);
        } else {
            GenSpec spec{.cls = GenClass::TraceZero2x2,
                         .n = 2,
                         .seed = seed,
                         .trial = static_cast<uint64_t>(t)};
            A = generate(spec);
            const EllipseParams ep = ellipse_params_2x2(A);
            const cplx focal = 0.5 * (ep.foci.second - ep.foci.first);
            const double b = 0.5 * ep.minor_axis;
            axis_len = std::sqrt(b * b + std::norm(focal));
            axis_dir = std::abs(focal) > 1e-12 ? focal / std::abs(focal) : cplx(1.0);
        }
        const double norm_a = operator_norm(A);
        const double scale = 1.0 + norm_a * norm_a;

        bool ok = true;
        std::string what;
        constexpr int kPoints = 21;
        std::vector<double> g(kPoints);
        std::vector<bool> flagged(kPoints, false);
        for (int j = 0; j < kPoints; ++j) {
            const double x = 0.9 * (2.0 * j / (kPoints - 1) - 1.0);
            const FiberMax fm = l_mu_max(A, x * axis_len * axis_dir, fcfg);
            g[j] = fm.value;
            flagged[j] = fm.boundary_flag;
        }
        for (int j = 0; j < kPoints / 2; ++j) {
            if (flagged[j] || flagged[kPoints - 1 - j]) continue;
            if (std::abs(g[j] - g[kPoints - 1 - j]) > 1e-5 * scale) {
                ok = false;
                what = "fiber maximum not even at offset " + std::to_string(j);
                break;
            }
        }
        record(r, ok, static_cast<uint64_t>(t), what);
    }
    return r;
}

SuiteResult run_suite_by_name(const std::string& name, int trials, uint64_t seed) {
    if (name == "chain") return run_chain(trials, seed);
    if (name == "twobytwo") return run_twobytwo(trials, seed);
    if (name == "normal") return run_normal(trials, seed);
    if (name == "selfadjoint") return run_selfadjoint(trials, seed);
    if (name == "oracle") return run_oracle(trials, seed);
    if (name == "ellipse") return run_ellipse(trials, seed);
    if (name == "dwaxis") return run_dwaxis(trials, seed);
    if (name == "invariance") return run_invariance(trials, seed);
    if (name == "evenness") return run_evenness(trials, seed);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
    return {"chain",   "twobytwo", "normal",     "selfadjoint", "oracle",
            "ellipse", "dwaxis",   "invariance", "evenness"};
}

}  // namespace dwshell
