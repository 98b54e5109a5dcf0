#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zpmono/counting.hpp"
#include "zpmono/field.hpp"
#include "zpmono/report.hpp"

namespace zpmono {

// Hypothesis check with a 1-ulp safety margin on the threshold side, so a
// borderline floating-point comparison never passes spuriously.
bool hypothesis_holds(double lhs, double threshold);

// |A1||A2| >= 20p  =>  sigma > 0 and |sigma - |A1||A2|| <= sqrt(19 p |A1||A2|).
VerificationReport verify_two_set(const PrimeContext& ctx, const ZpSubset& a1,
                                  const ZpSubset& a2, Omega w);

// |A1||A2||A3| >= 40 p^{5/2}  =>  sigma~ > 0 and
// sigma~ >= |A1||A2||A3|/p - 6 (|A1||A2||A3|)^{1/2} p^{1/4}.
VerificationReport verify_main(const PrimeContext& ctx, const ZpSubset& a1,
                               const ZpSubset& a2, const ZpSubset& a3, Omega w);

enum class LogBase { natural, two };

// |R|^2 |A1||A2| >= 25 p^3 log^2 p  =>  solutions with x in R for both
// inclusion patterns (x+y in A1 and y-x in A1). The log base is a
// parameter; the report records the hypothesis under both bases.
VerificationReport verify_subgroup(const PrimeContext& ctx, const ZpSubset& r,
                                   const ZpSubset& a1, const ZpSubset& a2,
                                   LogBase base = LogBase::natural);

// |A o B| >= (p-1) - 40 p^{5/2} / (|A||B|), unconditionally.
VerificationReport verify_circ_corollary(const PrimeContext& ctx, const ZpSubset& a,
                                         const ZpSubset& b);

struct JohnsenResult {
    std::complex<double> value;
    VerificationReport report;
};

// sum_{x in Z_p} prod_i chi_{z_i}(x + b_i), checked against
// (m - m0 + 1) sqrt(p) + m0 + 1 where m0 counts principal characters.
// Rejects duplicate shifts and all-principal inputs.
JohnsenResult johnsen_sum(const PrimeContext& ctx, const std::vector<std::int64_t>& chars,
                          const std::vector<std::int64_t>& shifts);

// Whether R + R covers Z_p*; condition tracks |R| >= 3 p^{3/4} log^{1/2} p.
VerificationReport basis_order_two(const PrimeContext& ctx, const ZpSubset& r,
                                   LogBase base = LogBase::natural);

// max_{z != 0} |f~(z)| <= 5 sqrt(p) (|A1||A2|)^{1/2} under |A1||A2| >= 20p.
VerificationReport max_nonzero_spectrum_bound(const PrimeContext& ctx, const ZpSubset& a1,
                                              const ZpSubset& a2, Omega w);

}  // namespace zpmono
