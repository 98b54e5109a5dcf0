#include <doctest.h>

#include <random>

#include "zpmono/coloring.hpp"
#include "zpmono/set_spec.hpp"

using namespace zpmono;

namespace {

Coloring constant_coloring(std::int64_t n, int k) {
    Coloring c;
    c.k = k;
    c.assign.assign(static_cast<std::size_t>(n), 1);
    return c;
}

// Independent rescans used to confirm "none" answers.
bool rescan_triple(const PrimeContext& ctx, const Coloring& c) {
    const std::int64_t p = ctx.p();
    for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = 1; y < p; ++y) {
            const std::int64_t s = (x + y) % p;
            if (s == 0) continue;
            if (c.color_of(x) == c.color_of(s) && c.color_of(x) == c.color_of(x * y % p)) return true;
        }
    }
    return false;
}

bool rescan_quadruple(const PrimeContext& ctx, const Coloring& c) {
    const std::int64_t p = ctx.p();
    for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = 1; y < p; ++y) {
            const std::int64_t s = (x + y) % p;
            if (s == 0) continue;
            const int col = c.color_of(x);
            if (c.color_of(y) == col && c.color_of(s) == col && c.color_of(x * y % p) == col) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

TEST_CASE("mono triple search") {
    SUBCASE("single color at p=7") {
        PrimeContext ctx(7);
        const auto hit = find_mono_triple(ctx, constant_coloring(7, 1));
        REQUIRE(hit.has_value());
        CHECK(hit->x == 1);
        CHECK(hit->y == 1);
        CHECK(hit->color == 1);
    }
    SUBCASE("quadratic residuosity coloring at p=5") {
        PrimeContext ctx(5);
        Coloring c;
        c.k = 2;
        c.assign = {2, 1, 2, 2, 1};  // QR {1,4} color 1, rest color 2
        const auto hit = find_mono_triple(ctx, c);
        if (hit) {
            const int col = hit->color;
            CHECK(c.color_of(hit->x) == col);
            CHECK(c.color_of((hit->x + hit->y) % 5) == col);
            CHECK(c.color_of(hit->x * hit->y % 5) == col);
        }
        CHECK(hit.has_value() == rescan_triple(ctx, c));
    }
    SUBCASE("none answers are confirmed by rescan") {
        for (std::int64_t p : {5, 7, 11, 31}) {
            PrimeContext ctx(p);
            std::mt19937_64 rng(static_cast<std::uint64_t>(p));
            for (int i = 0; i < 5; ++i) {
                const Coloring c = random_coloring(p, 2 + static_cast<int>(rng() % 6), rng());
                CHECK(find_mono_triple(ctx, c).has_value() == rescan_triple(ctx, c));
            }
        }
    }
}

TEST_CASE("schur search") {
    SUBCASE("single color, N=2") {
        const auto hit = find_mono_schur(2, constant_coloring(3, 1));
        REQUIRE(hit.has_value());
        CHECK(*hit == std::array<std::int64_t, 3>{1, 1, 2});
    }
    SUBCASE("the {1,4}/{2,3} coloring of 1..4 has no triple") {
        Coloring c;
        c.k = 2;
        c.assign = {0, 1, 2, 2, 1};  // index 0 unused
        CHECK_FALSE(find_mono_schur(4, c).has_value());
    }
    SUBCASE("every 4-coloring of 1..45 has one (S(4) = 44)") {
        std::mt19937_64 rng(45);
        for (int i = 0; i < 10; ++i) {
            const Coloring c = random_coloring(46, 4, rng());
            const auto hit = find_mono_schur(45, c);
            REQUIRE(hit.has_value());
            const auto [x, y, z] = *hit;
            CHECK(x + y == z);
            CHECK(c.color_of(x) == c.color_of(y));
            CHECK(c.color_of(y) == c.color_of(z));
        }
    }
    SUBCASE("degenerate segment rejected") {
        CHECK_THROWS_AS(find_mono_schur(1, constant_coloring(2, 1)), std::invalid_argument);
    }
}

TEST_CASE("mono quadruple search") {
    SUBCASE("single color at p=7") {
        PrimeContext ctx(7);
        const auto hit = find_mono_quadruple(ctx, constant_coloring(7, 1));
        REQUIRE(hit.has_value());
        CHECK(hit->x == 1);
        CHECK(hit->y == 1);
    }
    SUBCASE("no quadruple inside the non-residue class") {
        // QNR * QNR is a residue, so the pattern cannot close inside the class.
        for (std::int64_t p : {7, 11, 23}) {
            PrimeContext ctx(p);
            const ZpSubset qnr = special_set(ctx, SpecialSet::qnr);
            for (std::int64_t x : qnr.elements()) {
                for (std::int64_t y : qnr.elements()) {
                    CHECK_FALSE(qnr.contains(ctx.mul(x, y)));
                }
            }
        }
    }
    SUBCASE("random 2-colorings at p=31 agree with the rescan") {
        PrimeContext ctx(31);
        std::mt19937_64 rng(31);
        for (int i = 0; i < 10; ++i) {
            const Coloring c = random_coloring(31, 2, rng());
            CHECK(find_mono_quadruple(ctx, c).has_value() == rescan_quadruple(ctx, c));
        }
    }
    SUBCASE("injective coloring of the units kills every quadruple") {
        PrimeContext ctx(31);
        Coloring c;
        c.k = 31;
        c.assign.resize(31);
        for (int i = 0; i < 31; ++i) c.assign[static_cast<std::size_t>(i)] = i + 1;
        CHECK(count_mono_quadruples(ctx, c) == 0);
        CHECK_FALSE(find_mono_quadruple(ctx, c).has_value());
    }
}

TEST_CASE("density increment") {
    SUBCASE("full set") {
        PrimeContext ctx(11);
        const DensityIncrement di = density_increment(ctx, ZpSubset::full(11));
        CHECK(di.n == 0);
        CHECK(di.shifted_meet.card() == 11);
    }
    SUBCASE("singleton") {
        PrimeContext ctx(11);
        const DensityIncrement di = density_increment(ctx, ZpSubset::of(11, {4}));
        CHECK(di.n == 0);
        CHECK(di.shifted_meet.card() == 1);
    }
    SUBCASE("quadratic residues at p=23 against the exhaustive scan") {
        PrimeContext ctx(23);
        const ZpSubset a = special_set(ctx, SpecialSet::qr);
        const DensityIncrement di = density_increment(ctx, a);
        std::int64_t best_shift = -1, best_n = -1;
        for (std::int64_t n = 0; n < 23; ++n) {
            const std::int64_t meet = a.intersect(a.shift(n)).card();
            if (meet > best_shift) { best_shift = meet; best_n = n; }
        }
        CHECK(di.n == best_n);
        CHECK(di.shifted_meet == a.intersect(a.shift(di.n)));
        CHECK(di.shifted_meet.card() == best_shift);
        std::int64_t best_dil = -1, best_lam = -1;
        for (std::int64_t lam = 1; lam < 23; ++lam) {
            const std::int64_t meet = a.intersect(a.dilate(lam)).card();
            if (meet > best_dil) { best_dil = meet; best_lam = lam; }
        }
        CHECK(di.lambda == best_lam);
        CHECK(di.dilated_meet.card() == best_dil);
        // Averaging lower bounds.
        CHECK(di.shifted_meet.card() * 23 >= a.card() * a.card());
        const ZpSubset ap = a.without_zero();
        CHECK(di.dilated_meet.without_zero().card() * 22 >= ap.card() * ap.card());
    }
}

TEST_CASE("adversarial search") {
    PrimeContext ctx(31);
    SUBCASE("deterministic in the seed") {
        const AdversarialResult a = adversarial_search(ctx, 2, 500, 77);
        const AdversarialResult b = adversarial_search(ctx, 2, 500, 77);
        CHECK(a.mono_count == b.mono_count);
        CHECK(a.best.assign == b.best.assign);
        CHECK(a.mono_count == count_mono_quadruples(ctx, a.best));
    }
    SUBCASE("budget 1 is the seeded random coloring's exact count") {
        const AdversarialResult a = adversarial_search(ctx, 2, 1, 5);
        std::mt19937_64 rng(5);
        Coloring c;
        c.k = 2;
        c.assign.resize(31);
        for (auto& v : c.assign) v = static_cast<int>(rng() % 2) + 1;
        CHECK(a.best.assign == c.assign);
        CHECK(a.mono_count == count_mono_quadruples(ctx, c));
    }
    SUBCASE("bad parameters rejected") {
        CHECK_THROWS_AS(adversarial_search(ctx, 1, 10, 0), std::invalid_argument);
        CHECK_THROWS_AS(adversarial_search(ctx, 2, 0, 0), std::invalid_argument);
    }
    SUBCASE("longer budgets never do worse") {
        const AdversarialResult a = adversarial_search(ctx, 2, 50, 123);
        const AdversarialResult b = adversarial_search(ctx, 2, 2000, 123);
        CHECK(b.mono_count <= a.mono_count);
    }
}
