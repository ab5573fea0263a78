#pragma once

#include "dwshell/cmatrix.hpp"
#include "dwshell/linalg.hpp"

namespace dwshell {

/// Hermitian pencil u1*Re(A) + u2*Im(A) + u3*A*A with the three coefficient
/// matrices pre-embedded as real symmetric 2n x 2n blocks, so a direction
/// sweep costs one real Jacobi eigenvalue pass per direction.
class HermPencil {
public:
    explicit HermPencil(const CMatrix& A);

    int embedded_dim() const { return m_; }
    const CartesianParts& parts() const { return parts_; }

    /// lambda_max(u1*ReA + u2*ImA + u3*Gram); homogeneous degree 1 in u.
    double support(double u1, double u2, double u3) const;

private:
    int m_;
    CartesianParts parts_;
    std::vector<double> sx_, sy_, sg_;
};

}  // namespace dwshell
