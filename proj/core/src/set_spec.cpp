#include "zpmono/set_spec.hpp"

#include <charconv>

namespace zpmono {

double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ZpSubset random_subset(std::int64_t p, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0, 1]");
    std::mt19937_64 rng(seed);
    ZpSubset s(p);
    for (std::int64_t x = 0; x < p; ++x) {
        if (canonical_double(rng) < density) s.insert(x);
    }
    return s;
}

namespace {

std::int64_t parse_int(const std::string& spec, std::size_t begin, std::size_t end) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + begin, spec.data() + end, v);
    if (ec != std::errc{} || ptr != spec.data() + end) {
        throw SetSpecError("expected an integer", begin);
    }
    return v;
}

double parse_double(const std::string& spec, std::size_t begin, std::size_t end) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(spec.data() + begin, spec.data() + end, v);
    if (ec != std::errc{} || ptr != spec.data() + end) {
        throw SetSpecError("expected a number", begin);
    }
    return v;
}

std::int64_t parse_element(const PrimeContext& ctx, const std::string& spec,
                           std::size_t begin, std::size_t end) {
    const std::int64_t v = parse_int(spec, begin, end);
    if (v < 0 || v >= ctx.p()) {
        throw SetSpecError("element " + std::to_string(v) + " out of range for p=" +
                               std::to_string(ctx.p()),
                           begin);
    }
    return v;
}

}  // namespace

ZpSubset parse_set_spec(const PrimeContext& ctx, const std::string& spec) {
    const std::int64_t p = ctx.p();
    if (spec == "empty") return ZpSubset::empty(p);
    if (spec == "full") return ZpSubset::full(p);
    if (spec == "qr") return special_set(ctx, SpecialSet::qr);
    if (spec == "qnr") return special_set(ctx, SpecialSet::qnr);
    if (spec == "odd_half") return special_set(ctx, SpecialSet::odd_half);

    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        throw SetSpecError("unknown set spec '" + spec + "'", 0);
    }
    const std::string head = spec.substr(0, colon);
    const std::size_t body = colon + 1;

    if (head == "list") {
        ZpSubset s(p);
        std::size_t at = body;
        while (at < spec.size()) {
            std::size_t comma = spec.find(',', at);
            if (comma == std::string::npos) comma = spec.size();
            if (comma == at) throw SetSpecError("empty list entry", at);
            s.insert(parse_element(ctx, spec, at, comma));
            at = comma + 1;
        }
        if (spec.size() == body) throw SetSpecError("empty list", body);
        return s;
    }
    if (head == "hex") {
        if (spec.size() == body) throw SetSpecError("empty hex mask", body);
        ZpSubset s(p);
        // Little-endian by bit: the last hex digit holds elements 0..3.
        std::int64_t bit = 0;
        for (std::size_t i = spec.size(); i-- > body;) {
            const char c = spec[i];
            int digit;
            if (c >= '0' && c <= '9') digit = c - '0';
            else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
            else throw SetSpecError("invalid hex digit", i);
            for (int b = 0; b < 4; ++b, ++bit) {
                if (!(digit & (1 << b))) continue;
                if (bit >= p) throw SetSpecError("hex mask has bits >= p", i);
                s.insert(bit);
            }
        }
        return s;
    }
    if (head == "random") {
        const std::string dkey = "density=";
        if (spec.compare(body, dkey.size(), dkey) != 0) {
            throw SetSpecError("expected 'density='", body);
        }
        const std::size_t dval = body + dkey.size();
        const std::size_t comma = spec.find(',', dval);
        if (comma == std::string::npos) throw SetSpecError("expected ',seed='", dval);
        const double density = parse_double(spec, dval, comma);
        const std::string skey = "seed=";
        if (spec.compare(comma + 1, skey.size(), skey) != 0) {
            throw SetSpecError("expected 'seed='", comma + 1);
        }
        const std::int64_t seed = parse_int(spec, comma + 1 + skey.size(), spec.size());
        if (density < 0.0 || density > 1.0) {
            throw SetSpecError("density must be in [0, 1]", dval);
        }
        return random_subset(p, density, static_cast<std::uint64_t>(seed));
    }
    if (head == "subgroup") {
        const std::string dkey = "d=";
        if (spec.compare(body, dkey.size(), dkey) != 0) {
            throw SetSpecError("expected 'd='", body);
        }
        return subgroup(ctx, parse_int(spec, body + dkey.size(), spec.size()));
    }
    if (head == "interval") {
        const std::size_t dots = spec.find("..", body);
        if (dots == std::string::npos) throw SetSpecError("expected '<a>..<b>'", body);
        const std::int64_t a = parse_element(ctx, spec, body, dots);
        const std::int64_t b = parse_element(ctx, spec, dots + 2, spec.size());
        if (b < a) throw SetSpecError("interval bounds out of order", body);
        ZpSubset s(p);
        for (std::int64_t x = a; x <= b; ++x) s.insert(x);
        return s;
    }
    throw SetSpecError("unknown set spec kind '" + head + "'", 0);
}

}  // namespace zpmono
