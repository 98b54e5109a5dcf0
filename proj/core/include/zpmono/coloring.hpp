#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "zpmono/field.hpp"

namespace zpmono {

// k-coloring of either Z_p (elements 0..p-1; the color of 0 is carried but
// ignored by the searches) or an initial segment {1..N} (assign[0] unused).
struct Coloring {
    int k = 1;
    std::vector<int> assign;  // element -> color in 1..k

    int color_of(std::int64_t x) const { return assign[static_cast<std::size_t>(x)]; }
    bool valid() const;
};

Coloring random_coloring(std::int64_t domain_size, int k, std::uint64_t seed);

struct MonoPair {
    std::int64_t x = 0;
    std::int64_t y = 0;
    int color = 0;
};

// First (x, y) in ascending (x, y) order with x, x+y, xy all nonzero and
// color(x) = color(x+y) = color(xy). strict additionally rules out x = y
// and x + y = xy coincidences.
std::optional<MonoPair> find_mono_triple(const PrimeContext& ctx, const Coloring& c,
                                         bool strict = false);

// Monochromatic x + y = z inside {1..N}; none is an honest exhaustion
// result, finite segments need not contain one.
std::optional<std::array<std::int64_t, 3>> find_mono_schur(std::int64_t n, const Coloring& c);

// x, y, x+y, xy all the same color (the open-question pattern).
std::optional<MonoPair> find_mono_quadruple(const PrimeContext& ctx, const Coloring& c,
                                            bool strict = false);

// Exact number of pairs (x, y) in (Z_p*)^2 with x, y, x+y, xy nonzero and
// monochromatic.
std::int64_t count_mono_quadruples(const PrimeContext& ctx, const Coloring& c);

struct DensityIncrement {
    std::int64_t n = 0;       // shift maximizing |A cap (A+n)|
    std::int64_t lambda = 1;  // dilation in Z_p* maximizing |A cap lambda A|
    ZpSubset shifted_meet;
    ZpSubset dilated_meet;
};

DensityIncrement density_increment(const PrimeContext& ctx, const ZpSubset& a);

struct AdversarialResult {
    Coloring best;
    std::int64_t mono_count = 0;
};

// Seeded local search (random restarts + single-element recolorings)
// minimizing the monochromatic-quadruple count. Deterministic in seed.
AdversarialResult adversarial_search(const PrimeContext& ctx, int k, std::int64_t budget,
                                     std::uint64_t seed);

}  // namespace zpmono
