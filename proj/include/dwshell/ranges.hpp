#pragma once

#include <string>
#include <vector>

#include "dwshell/cmatrix.hpp"
#include "dwshell/pencil.hpp"

namespace dwshell {

inline constexpr int kDefaultNTheta = 720;

/// Sampled support function and boundary of the numerical range W(A).
struct NRProfile {
    std::vector<double> thetas;    // uniform grid in [0, 2pi)
    std::vector<double> support;   // h(theta) = lambda_max(Re(e^{-i theta} A))
    std::vector<cplx> boundary;    // <A x, x> for a top eigenvector x
};

double nr_support(const CMatrix& A, double theta);

NRProfile nr_profile(const CMatrix& A, int n_theta = kDefaultNTheta);

/// max_theta |h(theta) - h(theta+pi)| over an even grid; 0 iff the sampled
/// support function is centrally symmetric.
double nr_symmetry_defect(const CMatrix& A, int n_theta = kDefaultNTheta);

/// 0 in W(A) iff the support function is nonnegative everywhere (up to
/// tau_zero = 1e-9 * (1+||A||)).
bool contains_zero(const CMatrix& A, int n_theta = kDefaultNTheta);

/// Compression B_ij = <A b_j, b_i> onto orthonormal columns; W(B) subset W(A).
CMatrix compress(const CMatrix& A, const std::vector<std::vector<cplx>>& basis);

/// Sweep variants reusing a prebuilt pencil (hot paths).
double nr_symmetry_defect(const HermPencil& pencil, int n_theta);
double nr_min_support(const HermPencil& pencil, int n_theta);

std::string nr_profile_csv(const NRProfile& profile);

}  // namespace dwshell
