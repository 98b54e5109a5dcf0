#include <doctest.h>

#include <cmath>
#include <random>

#include "zpmono/bounds.hpp"
#include "zpmono/set_spec.hpp"
#include "zpmono/sweeps.hpp"

using namespace zpmono;

TEST_CASE("two-set verification") {
    SUBCASE("full sets at p=23") {
        PrimeContext ctx(23);
        const VerificationReport r =
            verify_two_set(ctx, ZpSubset::full(23), ZpSubset::full(23), Omega::plus);
        CHECK(r.condition_met);
        CHECK(r.measured == doctest::Approx(22.0 * 22.0));
        CHECK(r.outcome == Outcome::pass);
    }
    SUBCASE("hypothesis not met") {
        PrimeContext ctx(101);
        const VerificationReport r = verify_two_set(ctx, random_subset(101, 0.1, 1).without_zero(),
                                                    random_subset(101, 0.1, 2).without_zero(),
                                                    Omega::minus);
        CHECK_FALSE(r.condition_met);
        CHECK(r.outcome == Outcome::not_applicable);
    }
    SUBCASE("random pairs above the threshold pass") {
        PrimeContext ctx(101);
        std::mt19937_64 rng(42);
        for (int i = 0; i < 10; ++i) {
            auto [a1, a2] = sweeps::random_pair_meeting_20p(101, rng());
            const VerificationReport r = verify_two_set(ctx, a1, a2, Omega::plus);
            CHECK(r.condition_met);
            CHECK(r.outcome == Outcome::pass);
        }
    }
}

TEST_CASE("main-theorem verification") {
    PrimeContext ctx(2003);
    SUBCASE("full sets") {
        const ZpSubset full = ZpSubset::full(2003);
        const VerificationReport r = verify_main(ctx, full, full, full, Omega::plus);
        CHECK(r.condition_met);
        CHECK(r.outcome == Outcome::pass);
        REQUIRE(r.witness.size() == 2);
    }
    SUBCASE("empty A3 fails the hypothesis") {
        const VerificationReport r = verify_main(ctx, ZpSubset::full(2003), ZpSubset::full(2003),
                                                 ZpSubset::empty(2003), Omega::plus);
        CHECK_FALSE(r.condition_met);
        CHECK(r.outcome == Outcome::not_applicable);
    }
}

TEST_CASE("subgroup verification") {
    PrimeContext ctx(23);
    SUBCASE("non-subgroup rejected") {
        CHECK_THROWS_AS(verify_subgroup(ctx, ZpSubset::of(23, {1, 5}), ZpSubset::full(23),
                                        ZpSubset::full(23)),
                        std::invalid_argument);
    }
    SUBCASE("small p cannot meet the hypothesis, search still reported") {
        const VerificationReport r = verify_subgroup(ctx, subgroup(ctx, 11), ZpSubset::full(23),
                                                     ZpSubset::full(23));
        CHECK_FALSE(r.condition_met);
        CHECK(r.outcome == Outcome::not_applicable);
        CHECK(r.measured > 0);  // witnesses exist informally
    }
}

TEST_CASE("circ corollary") {
    SUBCASE("tiny sets give a vacuous bound") {
        PrimeContext ctx(101);
        const VerificationReport r =
            verify_circ_corollary(ctx, ZpSubset::of(101, {1}), ZpSubset::of(101, {2}));
        CHECK(r.bound < 0.0);
        CHECK(r.outcome == Outcome::pass);
    }
    SUBCASE("empty input rejected") {
        PrimeContext ctx(101);
        CHECK_THROWS_AS(verify_circ_corollary(ctx, ZpSubset::empty(101), ZpSubset::full(101)),
                        std::invalid_argument);
    }
    SUBCASE("random pairs at p=499") {
        PrimeContext ctx(499);
        std::mt19937_64 rng(9);
        for (int i = 0; i < 10; ++i) {
            ZpSubset a = random_subset(499, 0.3 + 0.7 * canonical_double(rng), rng());
            ZpSubset b = random_subset(499, 0.3 + 0.7 * canonical_double(rng), rng());
            if (a.card() == 0 || b.card() == 0) continue;
            CHECK(verify_circ_corollary(ctx, a, b).outcome == Outcome::pass);
        }
    }
}

TEST_CASE("johnsen sums") {
    PrimeContext ctx(101);
    SUBCASE("single nonprincipal character sums to zero") {
        const JohnsenResult jr = johnsen_sum(ctx, {7}, {3});
        CHECK(std::abs(jr.value) < 1e-9);
        CHECK(jr.report.outcome == Outcome::pass);
        // m = 1 character, m0 = 0 principal: (m - m0 + 1) sqrt(p) + m0 + 1.
        CHECK(jr.report.bound == doctest::Approx(2.0 * std::sqrt(101.0) + 1.0));
    }
    SUBCASE("character and its conjugate") {
        const std::int64_t z = 13;
        const JohnsenResult jr = johnsen_sum(ctx, {z, ctx.order() - z}, {0, 1});
        CHECK(std::abs(jr.value) <= 3.0 * std::sqrt(101.0) + 1.0);
        CHECK(jr.report.outcome == Outcome::pass);
    }
    SUBCASE("duplicate shifts rejected") {
        CHECK_THROWS_AS(johnsen_sum(ctx, {1, 2}, {5, 5}), std::invalid_argument);
    }
    SUBCASE("all-principal rejected") {
        CHECK_THROWS_AS(johnsen_sum(ctx, {0, 0}, {1, 2}), std::invalid_argument);
    }
    SUBCASE("identical characters: bound scales linearly in m") {
        for (int m = 2; m <= 4; ++m) {
            std::vector<std::int64_t> chars(static_cast<std::size_t>(m), 7);
            std::vector<std::int64_t> shifts;
            for (int i = 0; i < m; ++i) shifts.push_back(i);
            const JohnsenResult jr = johnsen_sum(ctx, chars, shifts);
            CHECK(jr.report.bound ==
                  doctest::Approx((m + 1) * std::sqrt(101.0) + 1.0));
            CHECK(jr.report.outcome == Outcome::pass);
        }
    }
}

TEST_CASE("basis of order two") {
    PrimeContext ctx(23);
    SUBCASE("full group covers") {
        const VerificationReport r = basis_order_two(ctx, ZpSubset::units(23));
        CHECK(r.outcome == Outcome::pass);
        CHECK(r.measured == doctest::Approx(22.0));
    }
    SUBCASE("trivial subgroup fails") {
        const VerificationReport r = basis_order_two(ctx, subgroup(ctx, 1));
        CHECK(r.outcome == Outcome::fail);
        CHECK(r.measured == doctest::Approx(1.0));  // R+R = {2}
    }
    SUBCASE("non-subgroup rejected") {
        CHECK_THROWS_AS(basis_order_two(ctx, ZpSubset::of(23, {2, 3})), std::invalid_argument);
    }
}

TEST_CASE("spectral tail bound") {
    SUBCASE("empty A1 is informational") {
        PrimeContext ctx(101);
        const VerificationReport r = max_nonzero_spectrum_bound(ctx, ZpSubset::empty(101),
                                                                ZpSubset::full(101), Omega::plus);
        CHECK_FALSE(r.condition_met);
        CHECK(r.outcome == Outcome::not_applicable);
        CHECK(r.measured == doctest::Approx(0.0));
    }
    SUBCASE("dense halves at p=101") {
        PrimeContext ctx(101);
        auto [a1, a2] = sweeps::random_pair_meeting_20p(101, 5);
        const VerificationReport r = max_nonzero_spectrum_bound(ctx, a1, a2, Omega::plus);
        CHECK(r.condition_met);
        CHECK(r.outcome == Outcome::pass);
    }
    SUBCASE("quadratic residues at p=499") {
        PrimeContext ctx(499);
        const ZpSubset qr = special_set(ctx, SpecialSet::qr);
        const VerificationReport r = max_nonzero_spectrum_bound(ctx, qr, qr, Omega::minus);
        CHECK(r.condition_met);
        CHECK(r.outcome == Outcome::pass);
    }
}

TEST_CASE("reports") {
    PrimeContext ctx(23);
    const ZpSubset full = ZpSubset::full(23);
    VerificationReport r = verify_two_set(ctx, full, full, Omega::plus);
    r.seed = 1234;
    SUBCASE("JSON round-trip is the identity") {
        const auto j = r.to_json();
        CHECK(VerificationReport::from_json(j) == r);
        CHECK(VerificationReport::from_json(nlohmann::ordered_json::parse(j.dump())) == r);
    }
    SUBCASE("same inputs give byte-identical serialization") {
        VerificationReport again = verify_two_set(ctx, full, full, Omega::plus);
        again.seed = 1234;
        CHECK(r.to_json().dump() == again.to_json().dump());
    }
    SUBCASE("CSV has the scalar fields") {
        CHECK(VerificationReport::csv_header() ==
              "claim_id,p,condition_met,measured,bound,pass,witness,seed");
        CHECK(r.csv_row().starts_with("two_set,23,true,484,"));
    }
}
