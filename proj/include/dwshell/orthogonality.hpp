#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dwshell/cmatrix.hpp"
#include "dwshell/ranges.hpp"
#include "dwshell/shell.hpp"

namespace dwshell {

inline constexpr double kTolPass = 1e-8;
inline constexpr double kTolFail = 1e-6;

enum class VerdictKind { RobertsCertified, NotRoberts, Inconclusive };

enum class MatrixClass { SelfAdjoint, Unitary, Normal, TwoByTwo, Generic };

struct ClassTag {
    MatrixClass cls = MatrixClass::Generic;
    double residual = 0.0;  // detection residual of the winning class
};

struct OrthWitness {
    cplx lambda;
    double norm_plus = 0.0;
    double norm_minus = 0.0;
};

/// Three-valued certified decision on A being Roberts orthogonal to I.
struct OrthVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    double bound = 0.0;   // certified sup of the swept squared-norm gaps (RobertsCertified)
    double defect = 0.0;  // deciding defect (class criterion residual or shell defect)
    std::optional<OrthWitness> witness;  // present iff NotRoberts
    std::string method;   // "selfadjoint" | "nr-symmetry" | "trace" | "shell-sweep"
    double tau_pass_scaled = 0.0;
    double tau_fail_scaled = 0.0;
};

struct DeciderConfig {
    double tol_pass = kTolPass;
    double tol_fail = kTolFail;
    int n_theta = kDefaultNTheta;          // numerical-range sweeps
    int shell_n_phi = kDefaultNPhi;        // hemisphere grid
    int shell_n_theta = kDefaultShellNTheta;
    bool force_shell = false;
};

struct LambdaGrid {
    int n_angles = 24;
    int n_radii = 20;
    double radius_min = 1e-2;  // scaled by (1 + norms)
    double radius_max = 1e2;
};

ClassTag classify(const CMatrix& A);

OrthVerdict roberts_to_identity(const CMatrix& A, const DeciderConfig& cfg = {});

/// (||A + lambda B||, ||A - lambda B||).
std::pair<double, double> norm_pm(const CMatrix& A, const CMatrix& B, cplx lambda);

/// First lambda on the polar grid violating the norm equality, if any.
/// Absence of a witness is NOT a certificate of Roberts orthogonality.
std::optional<OrthWitness> roberts_refute_pair(const CMatrix& A, const CMatrix& B,
                                               const LambdaGrid& grid = {},
                                               double tol_fail = kTolFail);

/// A perp_B I iff (0, ||A||^2) lies in DV(A): compress A onto the top
/// eigenspace of A*A and test zero containment of its numerical range.
bool bj_to_identity(const CMatrix& A, int n_theta = kDefaultNTheta);

/// Numerical Birkhoff-James test over a polar lambda grid with local
/// refinement; not a certificate.
bool bj_pair(const CMatrix& A, const CMatrix& B, const LambdaGrid& grid = {},
             double tol_fail = kTolFail);

/// Midpoint of the spectrum; A - lambda*I is Roberts orthogonal to I.
double center_selfadjoint(const CMatrix& A);

/// Self-adjoint single-shift criterion: equality at one real lambda0 != 0
/// already forces Roberts orthogonality to I.
bool single_lambda_check(const CMatrix& A, double lambda0);

struct EllipseParams {
    cplx center;
    std::pair<cplx, cplx> foci;
    double minor_axis = 0.0;  // full minor axis length
};

EllipseParams ellipse_params_2x2(const CMatrix& A);

struct DwAxis {
    cplx center_mu;
    double center_r = 0.0;
    double axis_halflength = 0.0;
};

DwAxis dw_axis_2x2(const CMatrix& A);

std::string verdict_json(const OrthVerdict& v);
const char* verdict_kind_name(VerdictKind k);

}  // namespace dwshell
