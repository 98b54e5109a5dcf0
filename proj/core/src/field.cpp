#include "zpmono/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zpmono {

std::int64_t smallest_factor(std::int64_t n) {
    if (n < 4) return 0;
    if (n % 2 == 0) return 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return d;
    }
    return 0;
}

bool is_prime(std::int64_t n) {
    return n >= 2 && smallest_factor(n) == 0;
}

std::int64_t next_prime_at_least(std::int64_t n) {
    if (n <= 2) return 2;
    std::int64_t c = n | 1;
    while (!is_prime(c)) c += 2;
    return c;
}

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::int64_t q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found (p not prime?)");
}

}  // namespace

PrimeContext::PrimeContext(std::int64_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    if (std::int64_t d = smallest_factor(p); d != 0) {
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " is composite: divisible by " + std::to_string(d));
    }
    if (p > kMaxModulus) {
        throw std::length_error("modulus " + std::to_string(p) +
                                " exceeds table capacity " + std::to_string(kMaxModulus));
    }
    g_ = smallest_primitive_root(p);
    ind_.assign(static_cast<std::size_t>(p), 0);
    pow_.assign(static_cast<std::size_t>(p - 1), 0);
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < p - 1; ++t) {
        pow_[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(x);
        ind_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(t);
        x = x * g_ % p;
    }
}

std::complex<double> PrimeContext::char_value(std::int64_t z, std::int64_t x) const {
    if (x == 0) return {0.0, 0.0};
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>(z % (p_ - 1)) *
                         static_cast<double>(ind(x)) / static_cast<double>(p_ - 1);
    return std::polar(1.0, angle);
}

ZpSubset ZpSubset::full(std::int64_t p) {
    ZpSubset s(p);
    for (std::int64_t x = 0; x < p; ++x) s.insert(x);
    return s;
}

ZpSubset ZpSubset::units(std::int64_t p) {
    ZpSubset s(p);
    for (std::int64_t x = 1; x < p; ++x) s.insert(x);
    return s;
}

ZpSubset ZpSubset::of(std::int64_t p, const std::vector<std::int64_t>& elems) {
    ZpSubset s(p);
    for (std::int64_t x : elems) {
        if (x < 0 || x >= p) throw std::out_of_range("element " + std::to_string(x) + " not in Z_" + std::to_string(p));
        s.insert(x);
    }
    return s;
}

std::vector<std::int64_t> ZpSubset::elements() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(card_));
    for (std::int64_t x = 0; x < p_; ++x) {
        if (mask_[static_cast<std::size_t>(x)]) out.push_back(x);
    }
    return out;
}

ZpSubset ZpSubset::intersect(const ZpSubset& other) const {
    if (other.p_ != p_) throw std::invalid_argument("ambient modulus mismatch");
    ZpSubset s(p_);
    for (std::int64_t x = 0; x < p_; ++x) {
        if (contains(x) && other.contains(x)) s.insert(x);
    }
    return s;
}

ZpSubset ZpSubset::complement_in_units() const {
    ZpSubset s(p_);
    for (std::int64_t x = 1; x < p_; ++x) {
        if (!contains(x)) s.insert(x);
    }
    return s;
}

ZpSubset ZpSubset::dilate(std::int64_t c) const {
    ZpSubset s(p_);
    for (std::int64_t x = 0; x < p_; ++x) {
        if (contains(x)) s.insert(c * x % p_);
    }
    return s;
}

ZpSubset ZpSubset::shift(std::int64_t n) const {
    ZpSubset s(p_);
    for (std::int64_t x = 0; x < p_; ++x) {
        if (contains(x)) s.insert((x + n) % p_);
    }
    return s;
}

ZpSubset ZpSubset::without_zero() const {
    ZpSubset s = *this;
    s.erase(0);
    return s;
}

std::string ZpSubset::describe() const {
    return "card=" + std::to_string(card_) + "/" + std::to_string(p_);
}

ZpSubset subgroup(const PrimeContext& ctx, std::int64_t d) {
    const std::int64_t n = ctx.order();
    if (d <= 0 || n % d != 0) {
        throw std::invalid_argument("order " + std::to_string(d) + " does not divide " + std::to_string(n));
    }
    ZpSubset s(ctx.p());
    const std::int64_t step = n / d;
    for (std::int64_t k = 0; k < d; ++k) s.insert(ctx.pow_g(k * step % n));
    return s;
}

bool is_multiplicative_subgroup(const PrimeContext& ctx, const ZpSubset& r) {
    if (r.p() != ctx.p() || r.card() == 0 || r.contains(0) || !r.contains(1)) return false;
    if (ctx.order() % r.card() != 0) return false;
    const auto elems = r.elements();
    for (std::int64_t a : elems) {
        for (std::int64_t b : elems) {
            if (!r.contains(ctx.mul(a, b))) return false;
        }
    }
    return true;
}

ZpSubset special_set(const PrimeContext& ctx, SpecialSet kind) {
    const std::int64_t p = ctx.p();
    switch (kind) {
        case SpecialSet::qr: {
            if (p < 3) throw std::invalid_argument("qr needs an odd prime");
            ZpSubset s(p);
            for (std::int64_t x = 1; x < p; ++x) s.insert(x * x % p);
            return s;
        }
        case SpecialSet::qnr: {
            if (p < 3) throw std::invalid_argument("qnr needs an odd prime");
            return special_set(ctx, SpecialSet::qr).complement_in_units();
        }
        case SpecialSet::odd_half: {
            if (p < 5) throw std::invalid_argument("odd_half needs p >= 5");
            ZpSubset s(p);
            for (std::int64_t k = 0; k <= (p - 3) / 4; ++k) s.insert(2 * k + 1);
            return s;
        }
    }
    throw std::invalid_argument("unsupported special set kind");
}

}  // namespace zpmono
