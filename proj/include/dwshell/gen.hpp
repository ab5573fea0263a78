#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dwshell/cmatrix.hpp"

namespace dwshell {

/// SplitMix64: the documented PRNG for every matrix generator, so streams
/// can be reproduced from (seed, trial) in any language. Gaussian variates
/// come from the Marsaglia polar method.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_gaussian();
    cplx next_complex_gaussian();  // standard complex Gaussian, E|z|^2 = 1

    /// Independent substream for one trial of a batch run.
    static SplitMix64 substream(uint64_t seed, uint64_t trial);

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class GenClass {
    Ginibre,
    Hermitian,
    Unitary,
    NormalWithSpectrum,
    TraceZero2x2,
    SymmetricSpectrumNormal,
    OrthogonalPair,
};

struct GenSpec {
    GenClass cls = GenClass::Ginibre;
    int n = 2;
    uint64_t seed = 0;
    uint64_t trial = 0;                // substream index for batch harnesses
    std::vector<cplx> spectrum;        // NormalWithSpectrum: full; SymmetricSpectrumNormal: half
    int split_k = 0;                   // OrthogonalPair: rank split (0 = n/2)
};

CMatrix generate(const GenSpec& spec);

/// OrthogonalPair only: (A, B) with A*B = 0 up to rounding.
std::pair<CMatrix, CMatrix> generate_pair(const GenSpec& spec);

GenClass gen_class_from_name(const std::string& name);
const char* gen_class_name(GenClass cls);

}  // namespace dwshell
