#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zpmono {

// Multiplicative structure of Z_p* for a desk-scale prime p.
//
// Holds the smallest positive primitive root g together with fully
// materialized discrete-log (ind) and power tables, so every character
// evaluation downstream is a pair of table lookups. Immutable after
// construction and safe to share across threads.
class PrimeContext {
public:
    // Largest modulus we materialize tables for (two int32 tables of size p).
    static constexpr std::int64_t kMaxModulus = 1 << 24;

    // Throws std::invalid_argument with a composite witness if p is not
    // prime, std::length_error if p exceeds kMaxModulus.
    explicit PrimeContext(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t g() const { return g_; }
    // Order of the multiplicative group, p - 1.
    std::int64_t order() const { return p_ - 1; }

    // Discrete log to base g: ind(g^t) = t. Requires x in Z_p*.
    std::int64_t ind(std::int64_t x) const { return ind_[x]; }
    // pow_g(t) = g^t mod p for 0 <= t < p - 1.
    std::int64_t pow_g(std::int64_t t) const { return pow_[t]; }

    std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p_; }
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t d = a - b;
        return d < 0 ? d + p_ : d;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    // Multiplicative inverse, x in Z_p*.
    std::int64_t inv(std::int64_t x) const {
        std::int64_t t = ind_[x];
        return t == 0 ? 1 : pow_[p_ - 1 - t];
    }

    // chi_z(x) = e^{2 pi i z ind(x) / (p-1)} for x in Z_p*, and 0 at x = 0
    // (for every z, including the principal character).
    std::complex<double> char_value(std::int64_t z, std::int64_t x) const;

private:
    std::int64_t p_;
    std::int64_t g_;
    std::vector<std::int32_t> ind_;
    std::vector<std::int32_t> pow_;
};

// Returns the smallest divisor of n in [2, n), or 0 if n is prime.
std::int64_t smallest_factor(std::int64_t n);
bool is_prime(std::int64_t n);
// Smallest prime >= n (n >= 2).
std::int64_t next_prime_at_least(std::int64_t n);

// Subset of Z_p as a membership mask with cached cardinality.
class ZpSubset {
public:
    explicit ZpSubset(std::int64_t p) : p_(p), mask_(static_cast<std::size_t>(p), 0) {}

    static ZpSubset empty(std::int64_t p) { return ZpSubset(p); }
    static ZpSubset full(std::int64_t p);
    // All of Z_p* (0 excluded).
    static ZpSubset units(std::int64_t p);
    static ZpSubset of(std::int64_t p, const std::vector<std::int64_t>& elems);

    std::int64_t p() const { return p_; }
    std::int64_t card() const { return card_; }
    bool contains(std::int64_t x) const { return mask_[static_cast<std::size_t>(x)] != 0; }

    void insert(std::int64_t x) {
        auto& m = mask_[static_cast<std::size_t>(x)];
        if (!m) { m = 1; ++card_; }
    }
    void erase(std::int64_t x) {
        auto& m = mask_[static_cast<std::size_t>(x)];
        if (m) { m = 0; --card_; }
    }

    std::vector<std::int64_t> elements() const;
    ZpSubset intersect(const ZpSubset& other) const;
    ZpSubset complement_in_units() const;
    // {c*a mod p : a in this}, c in Z_p*.
    ZpSubset dilate(std::int64_t c) const;
    // {a + n mod p : a in this}.
    ZpSubset shift(std::int64_t n) const;
    // Drops 0 if present (A' = A \cap Z_p*).
    ZpSubset without_zero() const;

    bool operator==(const ZpSubset& other) const = default;

    // Compact descriptor for reports, e.g. "card=12/23".
    std::string describe() const;

private:
    std::int64_t p_;
    std::vector<std::uint8_t> mask_;
    std::int64_t card_ = 0;
};

// The unique multiplicative subgroup of order d, d | p-1.
ZpSubset subgroup(const PrimeContext& ctx, std::int64_t d);
bool is_multiplicative_subgroup(const PrimeContext& ctx, const ZpSubset& r);

enum class SpecialSet { qr, qnr, odd_half };

// qr/qnr: quadratic (non-)residues in Z_p*; odd_half: {2k+1 : 0 <= k <= (p-3)/4}.
ZpSubset special_set(const PrimeContext& ctx, SpecialSet kind);

}  // namespace zpmono
