#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zpmono/field.hpp"
#include "zpmono/report.hpp"

namespace zpmono::sweeps {

struct SweepResult {
    std::vector<VerificationReport> reports;
    bool all_pass = true;  // no report with outcome == fail
};

nlohmann::ordered_json to_json(const SweepResult& r);

// Seeded random (A1, A2) with |A1||A2| >= 20p; the instance seed is
// recorded in every report.
SweepResult two_set(const std::vector<std::int64_t>& ps, int pairs_per_p, std::uint64_t seed);

// Random triples at density ~0.97 meeting |A1||A2||A3| >= 40 p^{5/2}.
SweepResult main_theorem(std::int64_t p, int triples, std::uint64_t seed);

// Random character/shift configurations with m <= 4, m0 < m.
SweepResult johnsen(const std::vector<std::int64_t>& ps, int configs_per_p, std::uint64_t seed);

// Random nonempty (A, B) pairs spanning densities 0.05..1.0.
SweepResult circ(const std::vector<std::int64_t>& ps, int pairs_per_p, std::uint64_t seed);

// Spectral tail bound over pairs meeting |A1||A2| >= 20p.
SweepResult spectrum_tail(const std::vector<std::int64_t>& ps, int pairs_per_p, std::uint64_t seed);

// R = Z_p*, dense A1, A2; both inclusion patterns must have witnesses.
SweepResult subgroup_at_scale(std::int64_t p, double density, std::uint64_t seed);

// Averaging lower bounds for the shift/dilation meets of random sets.
SweepResult density_increment_sweep(const std::vector<std::int64_t>& ps, int sets_per_p,
                                    std::uint64_t seed);

// Named suites with their standard parameters:
// two-set | main | johnsen | circ | spectrum | subgroup | density
SweepResult run_named(const std::string& name, std::uint64_t seed);
std::vector<std::string> suite_names();

// Helpers shared with tests: seeded random pair meeting |A1||A2| >= 20p.
std::pair<ZpSubset, ZpSubset> random_pair_meeting_20p(std::int64_t p, std::uint64_t seed);

}  // namespace zpmono::sweeps
