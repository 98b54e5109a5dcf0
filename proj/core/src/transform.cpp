#include "zpmono/transform.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zpmono {

namespace {

void check_length(const PrimeContext& ctx, std::size_t got) {
    if (got != static_cast<std::size_t>(ctx.order())) {
        throw std::invalid_argument("sequence length " + std::to_string(got) +
                                    " does not match p-1 = " + std::to_string(ctx.order()));
    }
}

// In-place radix-2 FFT, n a power of two. sign = -1 forward, +1 backward
// (unscaled).
void fft_pow2(std::vector<cdouble>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cdouble wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                cdouble u = a[i + k];
                cdouble v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

std::vector<cdouble> chirp_z_dft(std::span<const cdouble> in, int sign) {
    const std::int64_t n = static_cast<std::int64_t>(in.size());
    if (n == 0) return {};
    if (n == 1) return {in[0]};

    // Chirp c[t] = e^{sign * i pi t^2 / n}; t^2 is reduced mod 2n since the
    // phase has period 2n.
    std::vector<cdouble> chirp(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t t2 = (t * t) % (2 * n);
        chirp[static_cast<std::size_t>(t)] =
            std::polar(1.0, sign * std::numbers::pi * static_cast<double>(t2) / static_cast<double>(n));
    }

    std::size_t m = std::bit_ceil(static_cast<std::size_t>(2 * n - 1));
    std::vector<cdouble> a(m, cdouble{});
    std::vector<cdouble> b(m, cdouble{});
    for (std::int64_t t = 0; t < n; ++t) {
        a[static_cast<std::size_t>(t)] = in[static_cast<std::size_t>(t)] * chirp[static_cast<std::size_t>(t)];
        b[static_cast<std::size_t>(t)] = std::conj(chirp[static_cast<std::size_t>(t)]);
    }
    for (std::int64_t t = 1; t < n; ++t) {
        b[m - static_cast<std::size_t>(t)] = b[static_cast<std::size_t>(t)];
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double scale = 1.0 / static_cast<double>(m);

    std::vector<cdouble> out(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = chirp[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)] * scale;
    }
    return out;
}

Spectrum forward(const PrimeContext& ctx, std::span<const cdouble> f) {
    check_length(ctx, f.size());
    const std::int64_t n = ctx.order();
    // Relabel through x = g^t, then amp[z] = sum_t h[t] e^{-2 pi i z t / n}.
    std::vector<cdouble> h(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        h[static_cast<std::size_t>(t)] = f[static_cast<std::size_t>(ctx.pow_g(t) - 1)];
    }
    std::vector<cdouble> roots(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m) {
        roots[static_cast<std::size_t>(m)] =
            std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
    }
    Spectrum s;
    s.p = ctx.p();
    s.amp.assign(static_cast<std::size_t>(n), cdouble{});
    for (std::int64_t z = 0; z < n; ++z) {
        cdouble acc{};
        for (std::int64_t t = 0; t < n; ++t) {
            acc += h[static_cast<std::size_t>(t)] * roots[static_cast<std::size_t>(z * t % n)];
        }
        s.amp[static_cast<std::size_t>(z)] = acc;
    }
    return s;
}

Spectrum fast_forward(const PrimeContext& ctx, std::span<const cdouble> f) {
    check_length(ctx, f.size());
    const std::int64_t n = ctx.order();
    std::vector<cdouble> h(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        h[static_cast<std::size_t>(t)] = f[static_cast<std::size_t>(ctx.pow_g(t) - 1)];
    }
    Spectrum s;
    s.p = ctx.p();
    s.amp = chirp_z_dft(h, -1);
    return s;
}

std::vector<cdouble> inverse(const PrimeContext& ctx, const Spectrum& s) {
    check_length(ctx, s.amp.size());
    const std::int64_t n = ctx.order();
    auto h = chirp_z_dft(s.amp, +1);
    std::vector<cdouble> f(static_cast<std::size_t>(n));
    const double scale = 1.0 / static_cast<double>(n);
    for (std::int64_t t = 0; t < n; ++t) {
        f[static_cast<std::size_t>(ctx.pow_g(t) - 1)] = h[static_cast<std::size_t>(t)] * scale;
    }
    return f;
}

std::vector<cdouble> inverse_naive(const PrimeContext& ctx, const Spectrum& s) {
    check_length(ctx, s.amp.size());
    const std::int64_t n = ctx.order();
    std::vector<cdouble> f(static_cast<std::size_t>(n));
    for (std::int64_t x = 1; x <= n; ++x) {
        cdouble acc{};
        for (std::int64_t z = 0; z < n; ++z) {
            acc += s.amp[static_cast<std::size_t>(z)] * ctx.char_value(z, x);
        }
        f[static_cast<std::size_t>(x - 1)] = acc / static_cast<double>(n);
    }
    return f;
}

cdouble inner_product(const PrimeContext& ctx, std::span<const cdouble> f,
                      std::span<const cdouble> g) {
    check_length(ctx, f.size());
    check_length(ctx, g.size());
    cdouble direct{};
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        direct += f[i] * std::conj(g[i]);
        mass += std::abs(f[i]) * std::abs(g[i]);
    }
    const Spectrum fs = fast_forward(ctx, f);
    const Spectrum gs = fast_forward(ctx, g);
    cdouble spectral{};
    for (std::size_t z = 0; z < fs.amp.size(); ++z) {
        spectral += fs.amp[z] * std::conj(gs.amp[z]);
    }
    spectral /= static_cast<double>(ctx.order());
    if (std::abs(direct - spectral) > 1e-9 * (1.0 + mass)) {
        throw std::runtime_error("inner-product identity violated beyond tolerance");
    }
    return direct;
}

}  // namespace zpmono
