#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwshell/harness.hpp"
#include "dwshell/linalg.hpp"
#include "dwshell/orthogonality.hpp"
#include "dwshell/ranges.hpp"
#include "dwshell/shell.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitFailure = 4;

int verdict_exit(dwshell::VerdictKind k) {
    switch (k) {
        case dwshell::VerdictKind::RobertsCertified: return kExitTrue;
        case dwshell::VerdictKind::NotRoberts: return kExitFalse;
        case dwshell::VerdictKind::Inconclusive: return kExitInconclusive;
    }
    return kExitFailure;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace dwshell;

    CLI::App app{"Numerical ranges, Davis-Wielandt shells and Roberts orthogonality deciders"};
    app.require_subcommand(1);

    DeciderConfig cfg;
    uint64_t seed = 0;
    std::string out_dir = ".";
    bool json_output = false;
    app.add_option("--ntheta", cfg.n_theta, "numerical-range sweep size");
    app.add_option("--nphi", cfg.shell_n_phi, "hemisphere latitude count");
    app.add_option("--shell-ntheta", cfg.shell_n_theta, "hemisphere longitude count");
    app.add_option("--tol-pass", cfg.tol_pass, "certification tolerance multiplier");
    app.add_option("--tol-fail", cfg.tol_fail, "refutation tolerance multiplier");
    app.add_option("--seed", seed, "PRNG seed");
    app.add_option("--out", out_dir, "output directory for exports");
    app.add_flag("--json", json_output, "machine-readable output");
    app.add_flag("--force-shell", cfg.force_shell, "bypass class fast paths");

    LambdaGrid lgrid;
    std::vector<double> lambda_radii;
    app.add_option("--lambda-radii", lambda_radii,
                   "log-spaced radius list for pair grids (min max count)");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "emit a random matrix as JSON");
    std::string gen_class = "ginibre";
    int gen_n = 4;
    uint64_t gen_trial = 0;
    int gen_split = 0;
    std::vector<double> gen_spectrum;  // flat re,im pairs
    std::string gen_out;
    gen_cmd->add_option("--class", gen_class, "generator class")->required();
    gen_cmd->add_option("--n", gen_n, "dimension");
    gen_cmd->add_option("--trial", gen_trial, "substream index");
    gen_cmd->add_option("--split-k", gen_split, "orthogonal_pair block split");
    gen_cmd->add_option("--spectrum", gen_spectrum, "spectrum as flat re im pairs");
    gen_cmd->add_option("--file", gen_out, "output file (pair: prefix)");

    // check
    auto* check_cmd = app.add_subcommand("check", "run an orthogonality decider");
    std::string check_target;
    std::vector<std::string> check_files;
    bool check_bj = false;
    check_cmd->add_option("target", check_target, "identity|pair")->required();
    check_cmd->add_option("files", check_files, "matrix JSON file(s)")->required();
    check_cmd->add_flag("--bj", check_bj, "Birkhoff-James instead of Roberts");

    // repro-example
    auto* repro_cmd = app.add_subcommand("repro-example", "reproduce the embedded 4x4 example");

    // export
    auto* export_cmd = app.add_subcommand("export", "export range/shell point clouds");
    std::string export_kind;
    std::string export_file;
    export_cmd->add_option("kind", export_kind, "nr|shell")->required();
    export_cmd->add_option("file", export_file, "matrix JSON file")->required();

    // proptest
    auto* prop_cmd = app.add_subcommand("proptest", "run a property battery");
    std::string prop_suite;
    int prop_trials = 100;
    prop_cmd->add_option("suite", prop_suite, "suite name")->required();
    prop_cmd->add_option("--trials", prop_trials, "trial count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (cfg.tol_pass >= cfg.tol_fail) {
            std::cerr << "--tol-pass must be strictly below --tol-fail\n";
            return kExitUsage;
        }
        if (lambda_radii.size() == 3) {
            lgrid.radius_min = lambda_radii[0];
            lgrid.radius_max = lambda_radii[1];
            lgrid.n_radii = static_cast<int>(lambda_radii[2]);
        } else if (!lambda_radii.empty()) {
            std::cerr << "--lambda-radii expects: min max count\n";
            return kExitUsage;
        }

        if (*gen_cmd) {
            GenSpec spec;
            spec.cls = gen_class_from_name(gen_class);
            spec.n = gen_n;
            spec.seed = seed;
            spec.trial = gen_trial;
            spec.split_k = gen_split;
            if (gen_spectrum.size() % 2 != 0) {
                std::cerr << "--spectrum expects re im pairs\n";
                return kExitUsage;
            }
            for (size_t i = 0; i + 1 < gen_spectrum.size(); i += 2)
                spec.spectrum.emplace_back(gen_spectrum[i], gen_spectrum[i + 1]);

            nlohmann::json meta = {{"class", gen_class_name(spec.cls)},
                                   {"n", spec.n},
                                   {"seed", spec.seed},
                                   {"trial", spec.trial}};
            if (spec.cls == GenClass::OrthogonalPair) {
                if (gen_out.empty()) {
                    std::cerr << "orthogonal_pair needs --file PREFIX\n";
                    return kExitUsage;
                }
                const auto [A, B] = generate_pair(spec);
                auto with_meta = [&](const CMatrix& M) {
                    nlohmann::json j = nlohmann::json::parse(matrix_to_json_text(M));
                    j["spec"] = meta;
                    return j.dump();
                };
                write_file(gen_out + "_a.json", with_meta(A));
                write_file(gen_out + "_b.json", with_meta(B));
                return kExitTrue;
            }
            const CMatrix A = generate(spec);
            nlohmann::json j = nlohmann::json::parse(matrix_to_json_text(A));
            j["spec"] = meta;
            if (gen_out.empty())
                std::cout << j.dump() << "\n";
            else
                write_file(gen_out, j.dump());
            return kExitTrue;
        }

        if (*check_cmd) {
            if (check_target == "identity") {
                if (check_files.size() != 1) {
                    std::cerr << "check identity expects one matrix file\n";
                    return kExitUsage;
                }
                const CMatrix A = matrix_from_json_file(check_files[0]);
                if (check_bj) {
                    const bool ortho = bj_to_identity(A, cfg.n_theta);
                    std::cout << (ortho ? "bj-orthogonal" : "not-bj-orthogonal") << "\n";
                    return ortho ? kExitTrue : kExitFalse;
                }
                const OrthVerdict v = roberts_to_identity(A, cfg);
                std::cout << verdict_json(v) << "\n";
                return verdict_exit(v.kind);
            }
            if (check_target == "pair") {
                if (check_files.size() != 2) {
                    std::cerr << "check pair expects two matrix files\n";
                    return kExitUsage;
                }
                const CMatrix A = matrix_from_json_file(check_files[0]);
                const CMatrix B = matrix_from_json_file(check_files[1]);
                if (check_bj) {
                    const bool ortho = bj_pair(A, B, lgrid, cfg.tol_fail);
                    std::cout << (ortho ? "bj-orthogonal" : "not-bj-orthogonal") << "\n";
                    return ortho ? kExitTrue : kExitFalse;
                }
                const auto witness = roberts_refute_pair(A, B, lgrid, cfg.tol_fail);
                nlohmann::json j;
                j["refuted"] = witness.has_value();
                if (witness)
                    j["witness"] = {{"lambda", {witness->lambda.real(), witness->lambda.imag()}},
                                    {"norm_plus", witness->norm_plus},
                                    {"norm_minus", witness->norm_minus}};
                else
                    j["note"] = "no witness on the sampled grid; not a certificate";
                std::cout << j.dump() << "\n";
                return witness ? kExitFalse : kExitTrue;
            }
            std::cerr << "unknown check target: " << check_target << "\n";
            return kExitUsage;
        }

        if (*repro_cmd) {
            const CMatrix A = example_matrix();
            const CMatrix I = CMatrix::identity(4);
            const auto [np, nm] = norm_pm(A, I, 1.0);
            std::printf("||A+I|| = %.4f\n||A-I|| = %.4f\n", np, nm);
            const bool norms_ok =
                std::abs(np - 2.6918) <= 5e-4 && std::abs(nm - 2.7578) <= 5e-4;
            const double nr_defect = nr_symmetry_defect(A, cfg.n_theta);
            std::printf("numerical-range symmetry defect = %.3e\n", nr_defect);
            const OrthVerdict v = roberts_to_identity(A, cfg);
            std::printf("verdict: %s (method %s, defect %.6f)\n", verdict_kind_name(v.kind),
                        v.method.c_str(), v.defect);
            if (v.witness)
                std::printf("witness: lambda = %.6f%+.6fi, norms %.4f / %.4f\n",
                            v.witness->lambda.real(), v.witness->lambda.imag(),
                            v.witness->norm_plus, v.witness->norm_minus);
            if (!norms_ok || v.kind != VerdictKind::NotRoberts) {
                std::fprintf(stderr, "reproduction failed\n");
                return kExitFailure;
            }
            return kExitTrue;
        }

        if (*export_cmd) {
            const CMatrix A = matrix_from_json_file(export_file);
            std::filesystem::create_directories(out_dir);
            if (export_kind == "nr") {
                const NRProfile prof = nr_profile(A, cfg.n_theta);
                write_file(out_dir + "/nr.csv", nr_profile_csv(prof));
                std::cout << "wrote " << out_dir << "/nr.csv (" << prof.thetas.size()
                          << " rows)\n";
                return kExitTrue;
            }
            if (export_kind == "shell") {
                const HemisphereGrid grid =
                    HemisphereGrid::latlon(cfg.shell_n_phi, cfg.shell_n_theta);
                const ShellCloud cloud = dv_upper_samples(A, grid);
                const ShellDefect sd = dv_ub_symmetry_defect(A, grid);
                write_file(out_dir + "/shell.csv", shell_csv(cloud));
                write_file(out_dir + "/shell.json", shell_json(cloud, grid));
                std::printf("wrote %s/shell.csv and shell.json (%zu points)\n", out_dir.c_str(),
                            cloud.size());
                std::printf("symmetry defect = %.6f (certified bound %.6f) at u = (%.4f, %.4f, %.4f)\n",
                            sd.defect, sd.certified_bound, sd.witness.u1, sd.witness.u2,
                            sd.witness.u3);
                return kExitTrue;
            }
            std::cerr << "unknown export kind: " << export_kind << "\n";
            return kExitUsage;
        }

        if (*prop_cmd) {
            const SuiteResult r = run_suite_by_name(prop_suite, prop_trials, seed);
            std::printf("%s: %d/%d passed\n", r.name.c_str(), r.passed, r.total);
            for (const std::string& f : r.failures) std::printf("  FAIL %s\n", f.c_str());
            if (!r.failures.empty())
                std::printf("replay: --seed %llu\n", static_cast<unsigned long long>(seed));
            return r.ok() ? kExitTrue : kExitFalse;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
