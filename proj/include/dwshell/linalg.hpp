#pragma once

#include <utility>
#include <vector>

#include "dwshell/cmatrix.hpp"

namespace dwshell {

inline constexpr double kEigResidualTol = 1e-11;
inline constexpr double kHermCheckTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and
/// orthonormal eigenvectors (columns of `vectors`).
struct HermEigen {
    std::vector<double> values;
    CMatrix vectors;
};

struct CartesianParts {
    CMatrix re;    // (A+A*)/2
    CMatrix im;    // (A-A*)/2i
    CMatrix gram;  // A*A
};

CartesianParts cartesian_parts(const CMatrix& A);

/// Hermitian eigensolver. The n x n Hermitian matrix X+iY is embedded into
/// the 2n x 2n real symmetric matrix [[X,-Y],[Y,X]] and diagonalized by
/// cyclic Jacobi rotations; complex eigenpairs are recovered from the
/// doubled real spectrum.
HermEigen herm_eigen(const CMatrix& H);

/// Largest eigenvalue only (no eigenvectors accumulated).
double herm_eigen_max(const CMatrix& H);

/// Operator (spectral) norm: sqrt of the top eigenvalue of A*A.
double operator_norm(const CMatrix& A);

/// Eigenvalues of a 2x2 matrix from the characteristic quadratic.
std::pair<cplx, cplx> eig2x2(const CMatrix& A);

namespace detail {

/// Cyclic Jacobi on a real symmetric m x m matrix stored row-major in `s`.
/// On return the diagonal of `s` holds the eigenvalues (unsorted). If
/// `vecs` is non-null it accumulates the rotations (columns = eigenvectors).
/// Returns false if the off-diagonal norm target was not reached within
/// the sweep cap.
bool jacobi_sym(std::vector<double>& s, int m, std::vector<double>* vecs);

/// Embed the Hermitian H = X+iY into [[X,-Y],[Y,X]] (2n x 2n, row-major).
std::vector<double> embed_hermitian(const CMatrix& H);

/// Largest eigenvalue of the embedded real symmetric matrix.
double sym_eigen_max(std::vector<double> s, int m);

}  // namespace detail

}  // namespace dwshell
