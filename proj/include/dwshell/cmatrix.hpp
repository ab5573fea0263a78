#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwshell {

using cplx = std::complex<double>;

/// Dense complex square matrix, row-major storage.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n <= 0) throw std::invalid_argument("CMatrix: dimension must be positive");
    }
    CMatrix(int n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
        if (n <= 0 || a_.size() != static_cast<size_t>(n) * n)
            throw std::invalid_argument("CMatrix: entry count does not match dimension");
    }

    static CMatrix identity(int n);
    static CMatrix zero(int n) { return CMatrix(n); }

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<cplx>& data() const { return a_; }

    CMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double frobenius() const;
    bool all_finite() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx c);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx c, CMatrix a) { return a *= c; }
    friend CMatrix operator*(CMatrix a, cplx c) { return a *= c; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    /// A + lambda*I in place.
    CMatrix shifted(cplx lambda) const;

    /// Quadratic form <A x, x> for a unit (or any) vector x of length n.
    cplx quad_form(const std::vector<cplx>& x) const;

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

void check_same_dim(const CMatrix& a, const CMatrix& b, const char* op);

/// Parse the matrix JSON format {"n": k, "entries": [[[re,im],...],...]}.
/// Rejects ragged rows, wrong counts and non-finite values.
CMatrix matrix_from_json_text(const std::string& text);
CMatrix matrix_from_json_file(const std::string& path);
std::string matrix_to_json_text(const CMatrix& A);

}  // namespace dwshell
