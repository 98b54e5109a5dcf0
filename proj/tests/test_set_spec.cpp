#include <doctest.h>

#include "zpmono/set_spec.hpp"

using namespace zpmono;

TEST_CASE("set spec parsing") {
    PrimeContext ctx7(7);
    PrimeContext ctx23(23);

    CHECK(parse_set_spec(ctx7, "empty").card() == 0);
    CHECK(parse_set_spec(ctx7, "full").card() == 7);
    CHECK(parse_set_spec(ctx7, "list:1,2,4").elements() == std::vector<std::int64_t>{1, 2, 4});
    CHECK(parse_set_spec(ctx7, "qr").elements() == std::vector<std::int64_t>{1, 2, 4});
    CHECK(parse_set_spec(ctx7, "qnr").elements() == std::vector<std::int64_t>{3, 5, 6});
    CHECK(parse_set_spec(ctx7, "subgroup:d=3").elements() == std::vector<std::int64_t>{1, 2, 4});
    CHECK(parse_set_spec(ctx7, "interval:2..5").elements() ==
          std::vector<std::int64_t>{2, 3, 4, 5});
    PrimeContext ctx11(11);
    CHECK(parse_set_spec(ctx11, "odd_half").elements() == std::vector<std::int64_t>{1, 3, 5});

    SUBCASE("hex mask is little-endian by bit") {
        // 0x16 = 0b10110 -> elements {1, 2, 4}
        CHECK(parse_set_spec(ctx7, "hex:16").elements() == std::vector<std::int64_t>{1, 2, 4});
    }
    SUBCASE("random is deterministic in the seed") {
        const ZpSubset a = parse_set_spec(ctx23, "random:density=0.5,seed=42");
        const ZpSubset b = parse_set_spec(ctx23, "random:density=0.5,seed=42");
        CHECK(a == b);
        CHECK(a == random_subset(23, 0.5, 42));
        CHECK(parse_set_spec(ctx23, "random:density=0.5,seed=43") != a);
    }
    SUBCASE("malformed specs carry a position") {
        CHECK_THROWS_AS(parse_set_spec(ctx7, "list:1,,2"), SetSpecError);
        CHECK_THROWS_AS(parse_set_spec(ctx7, "nope"), SetSpecError);
        CHECK_THROWS_AS(parse_set_spec(ctx7, "random:density=0.5"), SetSpecError);
        CHECK_THROWS_AS(parse_set_spec(ctx7, "hex:zz"), SetSpecError);
        CHECK_THROWS_WITH(parse_set_spec(ctx7, "list:1,9"), doctest::Contains("out of range"));
        try {
            parse_set_spec(ctx7, "list:1,9");
        } catch (const SetSpecError& e) {
            CHECK(e.pos == 7);
        }
    }
}
