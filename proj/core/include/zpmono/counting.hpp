#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zpmono/field.hpp"

namespace zpmono {

enum class Omega : int { plus = +1, minus = -1 };

inline std::int64_t omega_sign(Omega w) { return static_cast<std::int64_t>(w); }

// f(x) = #{y in Z_p* : wx + y in A1, xy in A2}, returned as exact integers
// with f[x-1] holding the value at residue x. With y_over_full_zp the
// inner variable ranges over all of Z_p instead (exploratory widening).
std::vector<std::int64_t> f_values(const PrimeContext& ctx, const ZpSubset& a1,
                                   const ZpSubset& a2, Omega w,
                                   bool y_over_full_zp = false);

// sigma = sum_x f(x). Cross-checks against the z = 0 transform coefficient
// of f and throws std::runtime_error if they disagree beyond 1e-6.
std::int64_t sigma(const PrimeContext& ctx, const ZpSubset& a1, const ZpSubset& a2, Omega w);

// Second counting route via the substitution y = lambda x: counts pairs
// (x, lambda) in (Z_p*)^2 with x(w + lambda) in A1 and lambda x^2 in A2.
std::int64_t sigma_via_lambda(const PrimeContext& ctx, const ZpSubset& a1,
                              const ZpSubset& a2, Omega w);

struct SigmaTilde {
    std::int64_t count = 0;
    // Lowest-(x, y) solution with x in A3, wx + y in A1, xy in A2.
    std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

SigmaTilde sigma_tilde(const PrimeContext& ctx, const ZpSubset& a1, const ZpSubset& a2,
                       const ZpSubset& a3, Omega w);

// Dense table of phi(y1, y2) = #{x in Z_p* : wx + y1 x^{-1} in A1 and
// wx + y2 x^{-1} in A1}, y1, y2 ranging over all of Z_p.
class PhiMatrix {
public:
    // Largest p for which the dense p x p table is materialized.
    static constexpr std::int64_t kMaxDenseModulus = 4096;

    PhiMatrix(std::int64_t p) : p_(p), vals_(static_cast<std::size_t>(p * p), 0) {}

    std::int64_t p() const { return p_; }
    std::int64_t at(std::int64_t y1, std::int64_t y2) const {
        return vals_[static_cast<std::size_t>(y1 * p_ + y2)];
    }
    std::int32_t& at(std::int64_t y1, std::int64_t y2) {
        return vals_[static_cast<std::size_t>(y1 * p_ + y2)];
    }
    // sum over all entries; equals (p-1)|A1|^2.
    std::int64_t total() const;
    // sum of squared entries.
    std::int64_t square_total() const;

private:
    std::int64_t p_;
    std::vector<std::int32_t> vals_;
};

// Throws std::length_error for p > PhiMatrix::kMaxDenseModulus.
PhiMatrix phi_matrix(const PrimeContext& ctx, const ZpSubset& a1, Omega w);

struct SecondMoment {
    std::int64_t sigma2 = 0;         // sum_x f(x)^2
    std::int64_t sigma2_prime = 0;   // sum_{y1,y2 in A2} phi(y1,y2)
    std::int64_t sigma2_dprime = 0;  // A2(0) |A1|^2
    // Whether sigma2 == sigma2_prime + sigma2_dprime held exactly. Can be
    // false only when 0 is in A2; surfaced rather than absorbed.
    bool decomposition_holds = false;
};

SecondMoment second_moment(const PrimeContext& ctx, const ZpSubset& a1,
                           const ZpSubset& a2, Omega w);

// sum_{y1,y2} phi(y1,y2)^2 = number of quadruples (x1,x2,y1,y2) solving
// the four-membership system. Streams over x-pair intersections when p
// exceeds the dense-matrix cap.
std::int64_t quadruple_count(const PrimeContext& ctx, const ZpSubset& a1, Omega w);

struct CenteredPhiCheck {
    // Both sides of sum_{y1,y2} (phi - |A1|^2/p)^2 <= 10 p |A1|^2, scaled
    // by p^2 so the comparison is exact in integers.
    __int128 lhs_scaled = 0;
    __int128 rhs_scaled = 0;
    bool holds = false;
};

CenteredPhiCheck centered_phi_second_moment(const PrimeContext& ctx, const ZpSubset& a1, Omega w);

// {a^2 + ab mod p : a in A, b in B}.
ZpSubset circ_set(const PrimeContext& ctx, const ZpSubset& a, const ZpSubset& b);
// {ab + a mod p : a in A, b in B}.
ZpSubset star_set(const PrimeContext& ctx, const ZpSubset& a, const ZpSubset& b);

struct TripleCount {
    std::int64_t count = 0;
    // Lexicographically least (a1, a2, a3) with a1^2 + a1 a2 + a3 = 0.
    std::optional<std::array<std::int64_t, 3>> witness;
};

TripleCount count_equation_triples(const PrimeContext& ctx, const ZpSubset& a1,
                                   const ZpSubset& a2, const ZpSubset& a3);

}  // namespace zpmono
