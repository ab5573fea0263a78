#include "dwshell/gen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dwshell {

double SplitMix64::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

cplx SplitMix64::next_complex_gaussian() {
    return cplx(next_gaussian(), next_gaussian()) / std::sqrt(2.0);
}

SplitMix64 SplitMix64::substream(uint64_t seed, uint64_t trial) {
    SplitMix64 mixer(seed ^ (trial * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL));
    return SplitMix64(mixer.next_u64());
}

namespace {

CMatrix ginibre(SplitMix64& rng, int n) {
    CMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.next_complex_gaussian();
    return A;
}

/// Haar-ish unitary: Gram-Schmidt of a Ginibre sample with the phase
/// convention that the triangular factor has positive diagonal.
CMatrix haar_unitary(SplitMix64& rng, int n) {
    const CMatrix G = ginibre(rng, n);
    std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) cols[j][i] = G(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (int p = 0; p < j; ++p) {
                cplx proj = 0.0;
                for (int i = 0; i < n; ++i) proj += std::conj(cols[p][i]) * cols[j][i];
                for (int i = 0; i < n; ++i) cols[j][i] -= proj * cols[p][i];
            }
        double nrm = 0.0;
        for (const cplx& z : cols[j]) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        // r_jj = <q_j, g_j>; rotate so it lands on the positive real axis
        cplx diag = 0.0;
        for (int i = 0; i < n; ++i) diag += std::conj(cols[j][i]) * G(i, j);
        const cplx phase = std::abs(diag) > 0.0 ? diag / std::abs(diag) : cplx(1.0);
        for (cplx& z : cols[j]) z *= std::conj(phase) / nrm;
    }
    CMatrix U(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) U(i, j) = cols[j][i];
    return U;
}

CMatrix normal_from_spectrum(SplitMix64& rng, const std::vector<cplx>& spectrum) {
    const int n = static_cast<int>(spectrum.size());
    const CMatrix U = haar_unitary(rng, n);
    CMatrix D(n);
    for (int i = 0; i < n; ++i) D(i, i) = spectrum[i];
    return U * D * U.adjoint();
}

std::vector<cplx> mirrored_spectrum(const std::vector<cplx>& half, int n) {
    std::vector<cplx> spec;
    for (const cplx& s : half) {
        spec.push_back(s);
        spec.push_back(-s);
    }
    while (static_cast<int>(spec.size()) < n) spec.push_back(0.0);
    if (static_cast<int>(spec.size()) != n)
        throw std::invalid_argument("generate: symmetric spectrum does not fit dimension");
    return spec;
}

}  // namespace

CMatrix generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate: dimension must be >= 1");
    SplitMix64 rng = SplitMix64::substream(spec.seed, spec.trial);
    switch (spec.cls) {
        case GenClass::Ginibre:
            return ginibre(rng, spec.n);
        case GenClass::Hermitian: {
            const CMatrix G = ginibre(rng, spec.n);
            CMatrix H = G + G.adjoint();
            H *= 0.5;
            return H;
        }
        case GenClass::Unitary:
            return haar_unitary(rng, spec.n);
        case GenClass::NormalWithSpectrum:
            if (static_cast<int>(spec.spectrum.size()) != spec.n)
                throw std::invalid_argument("generate: spectrum size must equal n");
            return normal_from_spectrum(rng, spec.spectrum);
        case GenClass::TraceZero2x2: {
            if (spec.n != 2) throw std::invalid_argument("generate: trace_zero_2x2 needs n = 2");
            CMatrix A = ginibre(rng, 2);
            const cplx shift = 0.5 * A.trace();
            A(0, 0) -= shift;
            A(1, 1) -= shift;
            return A;
        }
        case GenClass::SymmetricSpectrumNormal: {
            if (2 * static_cast<int>(spec.spectrum.size()) > spec.n + 1)
                throw std::invalid_argument("generate: too many spectrum values for n");
            return normal_from_spectrum(rng, mirrored_spectrum(spec.spectrum, spec.n));
        }
        case GenClass::OrthogonalPair:
            throw std::invalid_argument("generate: orthogonal_pair produces a pair, use generate_pair");
    }
    throw std::invalid_argument("generate: unknown class");
}

std::pair<CMatrix, CMatrix> generate_pair(const GenSpec& spec) {
    if (spec.cls != GenClass::OrthogonalPair)
        throw std::invalid_argument("generate_pair: spec class must be orthogonal_pair");
    const int n = spec.n;
    if (n < 2) throw std::invalid_argument("generate_pair: dimension must be >= 2");
    const int k = spec.split_k > 0 ? spec.split_k : n / 2;
    if (k >= n) throw std::invalid_argument("generate_pair: split must leave both blocks nonempty");
    SplitMix64 rng = SplitMix64::substream(spec.seed, spec.trial);

    // Column spaces confined to complementary coordinate blocks, then one
    // shared unitary conjugation; A*B stays zero to rounding.
    CMatrix A(n), B(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.next_complex_gaussian();
    for (int i = k; i < n; ++i)
        for (int j = 0; j < n; ++j) B(i, j) = rng.next_complex_gaussian();
    const CMatrix U = haar_unitary(rng, n);
    return {U * A * U.adjoint(), U * B * U.adjoint()};
}

GenClass gen_class_from_name(const std::string& name) {
    if (name == "ginibre") return GenClass::Ginibre;
    if (name == "hermitian") return GenClass::Hermitian;
    if (name == "unitary") return GenClass::Unitary;
    if (name == "normal_with_spectrum") return GenClass::NormalWithSpectrum;
    if (name == "trace_zero_2x2") return GenClass::TraceZero2x2;
    if (name == "symmetric_spectrum_normal") return GenClass::SymmetricSpectrumNormal;
    if (name == "orthogonal_pair") return GenClass::OrthogonalPair;
    throw std::invalid_argument("unknown generator class: " + name);
}

const char* gen_class_name(GenClass cls) {
    switch (cls) {
        case GenClass::Ginibre: return "ginibre";
        case GenClass::Hermitian: return "hermitian";
        case GenClass::Unitary: return "unitary";
        case GenClass::NormalWithSpectrum: return "normal_with_spectrum";
        case GenClass::TraceZero2x2: return "trace_zero_2x2";
        case GenClass::SymmetricSpectrumNormal: return "symmetric_spectrum_normal";
        case GenClass::OrthogonalPair: return "orthogonal_pair";
    }
    return "?";
}

}  // namespace dwshell
