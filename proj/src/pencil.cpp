#include "dwshell/pencil.hpp"

namespace dwshell {

HermPencil::HermPencil(const CMatrix& A) : parts_(cartesian_parts(A)) {
    m_ = 2 * A.dim();
    sx_ = detail::embed_hermitian(parts_.re);
    sy_ = detail::embed_hermitian(parts_.im);
    sg_ = detail::embed_hermitian(parts_.gram);
}

double HermPencil::support(double u1, double u2, double u3) const {
    std::vector<double> s(sx_.size());
    for (size_t k = 0; k < s.size(); ++k) s[k] = u1 * sx_[k] + u2 * sy_[k] + u3 * sg_[k];
    return detail::sym_eigen_max(std::move(s), m_);
}

}  // namespace dwshell
