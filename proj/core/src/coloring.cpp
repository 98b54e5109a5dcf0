#include "zpmono/coloring.hpp"

#include <stdexcept>

namespace zpmono {

bool Coloring::valid() const {
    if (k < 1) return false;
    for (int c : assign) {
        if (c < 1 || c > k) return false;
    }
    return true;
}

Coloring random_coloring(std::int64_t domain_size, int k, std::uint64_t seed) {
    if (k < 1 || domain_size < 1) throw std::invalid_argument("bad coloring parameters");
    std::mt19937_64 rng(seed);
    Coloring c;
    c.k = k;
    c.assign.resize(static_cast<std::size_t>(domain_size));
    for (auto& v : c.assign) {
        v = static_cast<int>(rng() % static_cast<std::uint64_t>(k)) + 1;
    }
    return c;
}

std::optional<MonoPair> find_mono_triple(const PrimeContext& ctx, const Coloring& c,
                                         bool strict) {
    const std::int64_t p = ctx.p();
    for (std::int64_t x = 1; x < p; ++x) {
        const int col = c.color_of(x);
        for (std::int64_t y = 1; y < p; ++y) {
            const std::int64_t s = ctx.add(x, y);
            if (s == 0) continue;
            const std::int64_t pr = ctx.mul(x, y);
            if (strict && (x == y || s == pr)) continue;
            if (c.color_of(s) == col && c.color_of(pr) == col) {
                return MonoPair{x, y, col};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<std::int64_t, 3>> find_mono_schur(std::int64_t n, const Coloring& c) {
    if (n < 2) throw std::invalid_argument("segment length must be >= 2");
    for (std::int64_t x = 1; x <= n; ++x) {
        for (std::int64_t y = 1; y <= n; ++y) {
            const std::int64_t z = x + y;
            if (z > n) break;
            if (c.color_of(x) == c.color_of(y) && c.color_of(y) == c.color_of(z)) {
                return std::array<std::int64_t, 3>{x, y, z};
            }
        }
    }
    return std::nullopt;
}

std::optional<MonoPair> find_mono_quadruple(const PrimeContext& ctx, const Coloring& c,
                                            bool strict) {
    const std::int64_t p = ctx.p();
    for (std::int64_t x = 1; x < p; ++x) {
        const int col = c.color_of(x);
        for (std::int64_t y = 1; y < p; ++y) {
            if (c.color_of(y) != col) continue;
            const std::int64_t s = ctx.add(x, y);
            if (s == 0) continue;
            const std::int64_t pr = ctx.mul(x, y);
            if (strict && (x == y || s == pr)) continue;
            if (c.color_of(s) == col && c.color_of(pr) == col) {
                return MonoPair{x, y, col};
            }
        }
    }
    return std::nullopt;
}

std::int64_t count_mono_quadruples(const PrimeContext& ctx, const Coloring& c) {
    const std::int64_t p = ctx.p();
    std::int64_t count = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        const int col = c.color_of(x);
        for (std::int64_t y = 1; y < p; ++y) {
            if (c.color_of(y) != col) continue;
            const std::int64_t s = ctx.add(x, y);
            if (s == 0) continue;
            if (c.color_of(s) == col && c.color_of(ctx.mul(x, y)) == col) ++count;
        }
    }
    return count;
}

DensityIncrement density_increment(const PrimeContext& ctx, const ZpSubset& a) {
    const std::int64_t p = ctx.p();
    DensityIncrement out{0, 1, ZpSubset(p), ZpSubset(p)};
    std::int64_t best_shift = -1;
    for (std::int64_t n = 0; n < p; ++n) {
        std::int64_t meet = 0;
        for (std::int64_t x = 0; x < p; ++x) {
            if (a.contains(x) && a.contains(ctx.sub(x, n))) ++meet;
        }
        if (meet > best_shift) {
            best_shift = meet;
            out.n = n;
        }
    }
    // |A cap (A+n)| counts x with x in A and x - n in A; build the meet
    // as the set of such x.
    for (std::int64_t x = 0; x < p; ++x) {
        if (a.contains(x) && a.contains(ctx.sub(x, out.n))) out.shifted_meet.insert(x);
    }
    std::int64_t best_dil = -1;
    for (std::int64_t lam = 1; lam < p; ++lam) {
        std::int64_t meet = 0;
        for (std::int64_t x = 0; x < p; ++x) {
            if (a.contains(x) && a.contains(lam * x % p)) ++meet;
        }
        if (meet > best_dil) {
            best_dil = meet;
            out.lambda = lam;
        }
    }
    for (std::int64_t x = 0; x < p; ++x) {
        if (a.contains(x) && a.contains(out.lambda * x % p)) out.dilated_meet.insert(x);
    }
    return out;
}

AdversarialResult adversarial_search(const PrimeContext& ctx, int k, std::int64_t budget,
                                     std::uint64_t seed) {
    if (k < 2 || budget < 1) throw std::invalid_argument("need k >= 2 and budget >= 1");
    const std::int64_t p = ctx.p();
    std::mt19937_64 rng(seed);
    auto fresh = [&] {
        Coloring c;
        c.k = k;
        c.assign.resize(static_cast<std::size_t>(p));
        for (auto& v : c.assign) v = static_cast<int>(rng() % static_cast<std::uint64_t>(k)) + 1;
        return c;
    };

    Coloring current = fresh();
    std::int64_t current_count = count_mono_quadruples(ctx, current);
    AdversarialResult best{current, current_count};
    std::int64_t evaluations = 1;
    std::int64_t stall = 0;
    constexpr std::int64_t kRestartAfter = 200;

    while (evaluations < budget && best.mono_count > 0) {
        if (stall >= kRestartAfter) {
            current = fresh();
            current_count = count_mono_quadruples(ctx, current);
            ++evaluations;
            stall = 0;
            if (current_count < best.mono_count) best = {current, current_count};
            continue;
        }
        const std::int64_t x = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
        const int old_color = current.assign[static_cast<std::size_t>(x)];
        int new_color = static_cast<int>(rng() % static_cast<std::uint64_t>(k)) + 1;
        if (new_color == old_color) new_color = new_color % k + 1;
        current.assign[static_cast<std::size_t>(x)] = new_color;
        const std::int64_t cand = count_mono_quadruples(ctx, current);
        ++evaluations;
        if (cand <= current_count) {
            stall = cand < current_count ? 0 : stall + 1;
            current_count = cand;
            if (cand < best.mono_count) best = {current, cand};
        } else {
            current.assign[static_cast<std::size_t>(x)] = old_color;
            ++stall;
        }
    }
    return best;
}

}  // namespace zpmono
