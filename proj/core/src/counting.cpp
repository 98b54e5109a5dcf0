#include "zpmono/counting.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zpmono/parallel.hpp"

namespace zpmono {

namespace {

void check_ambient(const PrimeContext& ctx, const ZpSubset& s, const char* name) {
    if (s.p() != ctx.p()) {
        throw std::invalid_argument(std::string(name) + ": ambient modulus mismatch");
    }
}

// Fiber Y_x = {y in Z_p : wx + y x^{-1} in A1} = {x(a - wx) : a in A1};
// the map a -> x(a - wx) is a bijection A1 -> Y_x.
std::vector<std::int64_t> phi_fiber(const PrimeContext& ctx, const ZpSubset& a1,
                                    Omega w, std::int64_t x,
                                    const std::vector<std::int64_t>& a1_elems) {
    const std::int64_t p = ctx.p();
    const std::int64_t wx = omega_sign(w) > 0 ? x : ctx.neg(x);
    std::vector<std::int64_t> fiber;
    fiber.reserve(a1_elems.size());
    for (std::int64_t a : a1_elems) {
        fiber.push_back(x * ctx.sub(a, wx) % p);
    }
    return fiber;
}

}  // namespace

std::vector<std::int64_t> f_values(const PrimeContext& ctx, const ZpSubset& a1,
                                   const ZpSubset& a2, Omega w, bool y_over_full_zp) {
    check_ambient(ctx, a1, "A1");
    check_ambient(ctx, a2, "A2");
    const std::int64_t p = ctx.p();
    std::vector<std::int64_t> f(static_cast<std::size_t>(p - 1), 0);
    parallel_chunks(p - 1, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            const std::int64_t x = i + 1;
            const std::int64_t wx = omega_sign(w) > 0 ? x : ctx.neg(x);
            std::int64_t cnt = 0;
            std::int64_t xy = y_over_full_zp ? 0 : x % p;
            for (std::int64_t y = y_over_full_zp ? 0 : 1; y < p; ++y) {
                if (a1.contains(ctx.add(wx, y)) && a2.contains(xy)) ++cnt;
                xy += x;
                if (xy >= p) xy -= p;
            }
            f[static_cast<std::size_t>(i)] = cnt;
        }
    });
    return f;
}

std::int64_t sigma(const PrimeContext& ctx, const ZpSubset& a1, const ZpSubset& a2, Omega w) {
    const auto f = f_values(ctx, a1, a2, w);
    const std::int64_t s = std::accumulate(f.begin(), f.end(), std::int64_t{0});
    // z = 0 transform coefficient is the plain sum in doubles.
    double amp0 = 0.0;
    for (std::int64_t v : f) amp0 += static_cast<double>(v);
    if (std::abs(amp0 - static_cast<double>(s)) > 1e-6) {
        throw std::runtime_error("sigma vs transform coefficient 0 mismatch");
    }
    return s;
}

std::int64_t sigma_via_lambda(const PrimeContext& ctx, const ZpSubset& a1,
                              const ZpSubset& a2, Omega w) {
    check_ambient(ctx, a1, "A1");
    check_ambient(ctx, a2, "A2");
    const std::int64_t p = ctx.p();
    std::int64_t total = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        const std::int64_t x2 = x * x % p;
        const std::int64_t wmod = omega_sign(w) > 0 ? 1 : p - 1;
        for (std::int64_t lam = 1; lam < p; ++lam) {
            if (a1.contains(x * ctx.add(wmod, lam) % p) && a2.contains(lam * x2 % p)) {
                ++total;
            }
        }
    }
    return total;
}

SigmaTilde sigma_tilde(const PrimeContext& ctx, const ZpSubset& a1, const ZpSubset& a2,
                       const ZpSubset& a3, Omega w) {
    check_ambient(ctx, a1, "A1");
    check_ambient(ctx, a2, "A2");
    check_ambient(ctx, a3, "A3");
    const std::int64_t p = ctx.p();
    const auto f = f_values(ctx, a1, a2, w);
    SigmaTilde result;
    for (std::int64_t x = 1; x < p; ++x) {
        if (!a3.contains(x)) continue;
        const std::int64_t fx = f[static_cast<std::size_t>(x - 1)];
        result.count += fx;
        if (fx > 0 && !result.witness) {
            const std::int64_t wx = omega_sign(w) > 0 ? x : ctx.neg(x);
            for (std::int64_t y = 1; y < p; ++y) {
                if (a1.contains(ctx.add(wx, y)) && a2.contains(x * y % p)) {
                    result.witness = {x, y};
                    break;
                }
            }
        }
    }
    return result;
}

std::int64_t PhiMatrix::total() const {
    std::int64_t s = 0;
    for (std::int32_t v : vals_) s += v;
    return s;
}

std::int64_t PhiMatrix::square_total() const {
    std::int64_t s = 0;
    for (std::int32_t v : vals_) s += static_cast<std::int64_t>(v) * v;
    return s;
}

PhiMatrix phi_matrix(const PrimeContext& ctx, const ZpSubset& a1, Omega w) {
    check_ambient(ctx, a1, "A1");
    const std::int64_t p = ctx.p();
    if (p > PhiMatrix::kMaxDenseModulus) {
        throw std::length_error("dense phi matrix capped at p <= " +
                                std::to_string(PhiMatrix::kMaxDenseModulus));
    }
    PhiMatrix m(p);
    const auto elems = a1.elements();
    for (std::int64_t x = 1; x < p; ++x) {
        const auto fiber = phi_fiber(ctx, a1, w, x, elems);
        for (std::int64_t y1 : fiber) {
            for (std::int64_t y2 : fiber) {
                ++m.at(y1, y2);
            }
        }
    }
    return m;
}

SecondMoment second_moment(const PrimeContext& ctx, const ZpSubset& a1,
                           const ZpSubset& a2, Omega w) {
    check_ambient(ctx, a1, "A1");
    check_ambient(ctx, a2, "A2");
    const std::int64_t p = ctx.p();
    SecondMoment sm;
    const auto f = f_values(ctx, a1, a2, w);
    for (std::int64_t v : f) sm.sigma2 += v * v;
    // sum_{y1,y2 in A2} phi(y1,y2) = sum_x |Y_x cap A2|^2 without the
    // dense matrix, so this works past the matrix cap too.
    const auto elems = a1.elements();
    for (std::int64_t x = 1; x < p; ++x) {
        const auto fiber = phi_fiber(ctx, a1, w, x, elems);
        std::int64_t hit = 0;
        for (std::int64_t y : fiber) {
            if (a2.contains(y)) ++hit;
        }
        sm.sigma2_prime += hit * hit;
    }
    sm.sigma2_dprime = a2.contains(0) ? a1.card() * a1.card() : 0;
    sm.decomposition_holds = (sm.sigma2 == sm.sigma2_prime + sm.sigma2_dprime);
    return sm;
}

std::int64_t quadruple_count(const PrimeContext& ctx, const ZpSubset& a1, Omega w) {
    check_ambient(ctx, a1, "A1");
    const std::int64_t p = ctx.p();
    if (p <= PhiMatrix::kMaxDenseModulus) {
        return phi_matrix(ctx, a1, w).square_total();
    }
    // Streaming route: sum_{y1,y2} phi^2 = sum_{x1,x2} |Y_{x1} cap Y_{x2}|^2,
    // with fibers held as bitsets.
    const auto elems = a1.elements();
    const std::size_t words = static_cast<std::size_t>((p + 63) / 64);
    std::vector<std::vector<std::uint64_t>> fibers(static_cast<std::size_t>(p - 1));
    for (std::int64_t x = 1; x < p; ++x) {
        auto& bits = fibers[static_cast<std::size_t>(x - 1)];
        bits.assign(words, 0);
        for (std::int64_t y : phi_fiber(ctx, a1, w, x, elems)) {
            bits[static_cast<std::size_t>(y >> 6)] |= std::uint64_t{1} << (y & 63);
        }
    }
    std::vector<std::int64_t> partial(static_cast<std::size_t>(p - 1), 0);
    parallel_chunks(p - 1, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            const auto& bi = fibers[static_cast<std::size_t>(i)];
            std::int64_t acc = 0;
            for (std::int64_t j = 0; j < p - 1; ++j) {
                const auto& bj = fibers[static_cast<std::size_t>(j)];
                std::int64_t inter = 0;
                for (std::size_t k = 0; k < words; ++k) {
                    inter += std::popcount(bi[k] & bj[k]);
                }
                acc += inter * inter;
            }
            partial[static_cast<std::size_t>(i)] = acc;
        }
    });
    return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

CenteredPhiCheck centered_phi_second_moment(const PrimeContext& ctx, const ZpSubset& a1, Omega w) {
    const std::int64_t p = ctx.p();
    const PhiMatrix m = phi_matrix(ctx, a1, w);
    const std::int64_t c = a1.card() * a1.card();
    CenteredPhiCheck chk;
    // (phi - c/p)^2 summed over y1, y2, scaled by p^2: sum (p*phi - c)^2.
    for (std::int64_t y1 = 0; y1 < p; ++y1) {
        for (std::int64_t y2 = 0; y2 < p; ++y2) {
            const __int128 d = static_cast<__int128>(p) * m.at(y1, y2) - c;
            chk.lhs_scaled += d * d;
        }
    }
    chk.rhs_scaled = static_cast<__int128>(10) * p * c * p * p;
    chk.holds = chk.lhs_scaled <= chk.rhs_scaled;
    return chk;
}

ZpSubset circ_set(const PrimeContext& ctx, const ZpSubset& a, const ZpSubset& b) {
    check_ambient(ctx, a, "A");
    check_ambient(ctx, b, "B");
    const std::int64_t p = ctx.p();
    ZpSubset out(p);
    for (std::int64_t x : a.elements()) {
        const std::int64_t x2 = x * x % p;
        for (std::int64_t y : b.elements()) {
            out.insert(ctx.add(x2, x * y % p));
        }
    }
    return out;
}

ZpSubset star_set(const PrimeContext& ctx, const ZpSubset& a, const ZpSubset& b) {
    check_ambient(ctx, a, "A");
    check_ambient(ctx, b, "B");
    const std::int64_t p = ctx.p();
    ZpSubset out(p);
    for (std::int64_t x : a.elements()) {
        for (std::int64_t y : b.elements()) {
            out.insert(ctx.add(x * y % p, x));
        }
    }
    return out;
}

TripleCount count_equation_triples(const PrimeContext& ctx, const ZpSubset& a1,
                                   const ZpSubset& a2, const ZpSubset& a3) {
    check_ambient(ctx, a1, "A1");
    check_ambient(ctx, a2, "A2");
    check_ambient(ctx, a3, "A3");
    const std::int64_t p = ctx.p();
    TripleCount result;
    for (std::int64_t x1 : a1.elements()) {
        const std::int64_t sq = x1 * x1 % p;
        for (std::int64_t x2 : a2.elements()) {
            const std::int64_t x3 = ctx.neg(ctx.add(sq, x1 * x2 % p));
            if (a3.contains(x3)) {
                ++result.count;
                if (!result.witness) result.witness = {{x1, x2, x3}};
            }
        }
    }
    return result;
}

}  // namespace zpmono
