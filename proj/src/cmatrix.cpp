#include "dwshell/cmatrix.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dwshell {

CMatrix CMatrix::identity(int n) {
    CMatrix I(n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

CMatrix CMatrix::adjoint() const {
    CMatrix B(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) B(j, i) = std::conj((*this)(i, j));
    return B;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::frobenius() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

bool CMatrix::all_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    check_same_dim(*this, o, "operator+");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    check_same_dim(*this, o, "operator-");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx c) {
    for (cplx& z : a_) z *= c;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b, "operator*");
    const int n = a.dim();
    CMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CMatrix CMatrix::shifted(cplx lambda) const {
    CMatrix B = *this;
    for (int i = 0; i < n_; ++i) B(i, i) += lambda;
    return B;
}

cplx CMatrix::quad_form(const std::vector<cplx>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("quad_form: vector length mismatch");
    cplx s = 0.0;
    for (int i = 0; i < n_; ++i) {
        cplx row = 0.0;
        for (int j = 0; j < n_; ++j) row += (*this)(i, j) * x[j];
        s += std::conj(x[i]) * row;
    }
    return s;
}

void check_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw std::invalid_argument(os.str());
    }
}

CMatrix matrix_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matrix JSON parse error: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("matrix JSON: missing integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n <= 0) throw std::invalid_argument("matrix JSON: n must be positive");
    if (!j.contains("entries") || !j["entries"].is_array() ||
        static_cast<int>(j["entries"].size()) != n)
        throw std::invalid_argument("matrix JSON: \"entries\" must be an array of n rows");
    CMatrix A(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j["entries"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix JSON: ragged row " + std::to_string(i));
        for (int k = 0; k < n; ++k) {
            const auto& cell = row[k];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                throw std::invalid_argument("matrix JSON: entry (" + std::to_string(i) + "," +
                                            std::to_string(k) + ") must be [re,im]");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw std::invalid_argument("matrix JSON: non-finite entry (" + std::to_string(i) +
                                            "," + std::to_string(k) + ")");
            A(i, k) = cplx(re, im);
        }
    }
    return A;
}

CMatrix matrix_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json_text(buf.str());
}

std::string matrix_to_json_text(const CMatrix& A) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < A.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < A.dim(); ++k)
            row.push_back({A(i, k).real(), A(i, k).imag()});
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["n"] = A.dim();
    j["entries"] = std::move(rows);
    return j.dump();
}

}  // namespace dwshell
