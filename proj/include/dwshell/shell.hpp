#pragma once

#include <string>
#include <vector>

#include "dwshell/cmatrix.hpp"
#include "dwshell/pencil.hpp"

namespace dwshell {

inline constexpr int kDefaultNPhi = 91;
inline constexpr int kDefaultShellNTheta = 360;

struct Direction3 {
    double u1 = 0.0, u2 = 0.0, u3 = 1.0;
};

/// A supported point of the Davis-Wielandt shell upper boundary:
/// mu = <A x, x>, r = <A*A x, x> for a top eigenvector x of the pencil
/// with normal u, h the support value.
struct ShellPoint {
    cplx mu;
    double r = 0.0;
    Direction3 u;
    double h = 0.0;
};

using ShellCloud = std::vector<ShellPoint>;

/// Latitude-longitude product grid over the closed upper hemisphere,
/// pole phi=0 and equator phi=pi/2 included exactly.
struct HemisphereGrid {
    int n_phi = 0;
    int n_theta = 0;
    std::vector<Direction3> directions;  // row-major (phi index, theta index)
    double mesh = 0.0;

    static HemisphereGrid latlon(int n_phi = kDefaultNPhi, int n_theta = kDefaultShellNTheta);
};

double dv_support(const CMatrix& A, const Direction3& u);
double dv_support(const HermPencil& pencil, const Direction3& u);

ShellCloud dv_upper_samples(const CMatrix& A, const HemisphereGrid& grid);

struct ShellDefect {
    double defect = 0.0;          // max grid |h(u1,u2,u3) - h(-u1,-u2,u3)|
    double certified_bound = 0.0; // defect + L * mesh
    Direction3 witness;
};

/// Reflection-symmetry defect of the shell upper boundary; zero iff
/// DV_ub(A) = DV_ub(-A) on the sampled directions.
ShellDefect dv_ub_symmetry_defect(const CMatrix& A, const HemisphereGrid& grid);
ShellDefect dv_ub_symmetry_defect(const HermPencil& pencil, const HemisphereGrid& grid);

struct FiberConfig {
    double box_scale = 1e3;   // search box |v|_inf <= box_scale * (1+||A||)
    int coarse_n = 41;
    double step_tol = 1e-6;
    int check_n_theta = 360;  // membership check grid for mu in W(A)
};

struct FiberMax {
    double value = 0.0;
    bool boundary_flag = false;  // search-box boundary hit: possible overestimate
};

/// Concave upper envelope of the shell evaluated at mu: the conjugate
/// formula inf_v [ lambda_max(v1 ReA + v2 ImA + A*A) - v1 Re(mu) - v2 Im(mu) ].
/// Exact max of the fiber L_mu for mu in the relative interior of W(A).
FiberMax l_mu_max(const CMatrix& A, cplx mu, const FiberConfig& cfg = {});

std::string shell_csv(const ShellCloud& cloud);
std::string shell_json(const ShellCloud& cloud, const HemisphereGrid& grid);

}  // namespace dwshell
