#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "zpmono/field.hpp"

namespace zpmono {

using cdouble = std::complex<double>;

// Character-transform coefficients. amp[z] corresponds to the character
// chi_z, z in Z_{p-1}. Functions on Z_p* are passed as length-(p-1)
// sequences with f[x-1] holding the value at residue x.
struct Spectrum {
    std::int64_t p = 0;
    std::vector<cdouble> amp;
};

// amp[z] = sum_{x in Z_p*} f(x) conj(chi_z(x)), by direct summation.
Spectrum forward(const PrimeContext& ctx, std::span<const cdouble> f);

// Same contract as forward, via discrete-log relabeling and a chirp-z
// (Bluestein) DFT of length p-1; agrees with forward to 1e-8 per
// coefficient.
Spectrum fast_forward(const PrimeContext& ctx, std::span<const cdouble> f);

// f(x) = (1/(p-1)) sum_z amp[z] chi_z(x). Uses the chirp-z path.
std::vector<cdouble> inverse(const PrimeContext& ctx, const Spectrum& s);
// Direct-summation inverse, kept as the slow reference.
std::vector<cdouble> inverse_naive(const PrimeContext& ctx, const Spectrum& s);

// sum_{x in Z_p*} f(x) conj(g(x)). Also evaluates the spectral side
// (1/(p-1)) sum_z f~(z) conj(g~(z)) and throws std::runtime_error if the
// two disagree beyond 1e-9 relative.
cdouble inner_product(const PrimeContext& ctx, std::span<const cdouble> f,
                      std::span<const cdouble> g);

// DFT of arbitrary length via Bluestein's algorithm.
// sign = -1: X[k] = sum_t in[t] e^{-2 pi i k t / n} (forward convention).
std::vector<cdouble> chirp_z_dft(std::span<const cdouble> in, int sign);

}  // namespace zpmono
