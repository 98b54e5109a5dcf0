#include "zpmono/sweeps.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "zpmono/bounds.hpp"
#include "zpmono/coloring.hpp"
#include "zpmono/counting.hpp"
#include "zpmono/set_spec.hpp"

namespace zpmono::sweeps {

namespace {

ZpSubset seeded_subset(std::int64_t p, double lo, double hi, std::mt19937_64& rng) {
    const double d = lo + (hi - lo) * canonical_double(rng);
    return random_subset(p, d, rng());
}

}  // namespace

nlohmann::ordered_json to_json(const SweepResult& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : r.reports) arr.push_back(rep.to_json());
    return arr;
}

std::pair<ZpSubset, ZpSubset> random_pair_meeting_20p(std::int64_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double lo = std::min(0.995, 1.08 * std::sqrt(20.0 / static_cast<double>(p)));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ZpSubset a1 = seeded_subset(p, lo, 1.0, rng);
        ZpSubset a2 = seeded_subset(p, lo, 1.0, rng);
        if (static_cast<double>(a1.card()) * static_cast<double>(a2.card()) >=
            20.0 * static_cast<double>(p)) {
            return {std::move(a1), std::move(a2)};
        }
    }
    throw std::runtime_error("could not sample a pair with |A1||A2| >= 20p");
}

SweepResult two_set(const std::vector<std::int64_t>& ps, int pairs_per_p, std::uint64_t seed) {
    SweepResult out;
    std::mt19937_64 master(seed);
    for (std::int64_t p : ps) {
        const PrimeContext ctx(p);
        for (int i = 0; i < pairs_per_p; ++i) {
            const std::uint64_t inst_seed = master();
            auto [a1, a2] = random_pair_meeting_20p(p, inst_seed);
            for (Omega w : {Omega::plus, Omega::minus}) {
                VerificationReport r = verify_two_set(ctx, a1, a2, w);
                r.seed = inst_seed;
                out.all_pass = out.all_pass && r.outcome != Outcome::fail;
                out.reports.push_back(std::move(r));
            }
        }
    }
    return out;
}

SweepResult main_theorem(std::int64_t p, int triples, std::uint64_t seed) {
    SweepResult out;
    const PrimeContext ctx(p);
    const double threshold = 40.0 * std::pow(static_cast<double>(p), 2.5);
    std::mt19937_64 master(seed);
    for (int i = 0; i < triples; ++i) {
        const std::uint64_t inst_seed = master();
        std::mt19937_64 rng(inst_seed);
        ZpSubset a1(p), a2(p), a3(p);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            a1 = seeded_subset(p, 0.97, 1.0, rng);
            a2 = seeded_subset(p, 0.97, 1.0, rng);
            a3 = seeded_subset(p, 0.97, 1.0, rng);
            const double prod = static_cast<double>(a1.card()) * static_cast<double>(a2.card()) *
                                static_cast<double>(a3.card());
            if (prod >= threshold) break;
        }
        const Omega w = (master() & 1) ? Omega::plus : Omega::minus;
        VerificationReport r = verify_main(ctx, a1, a2, a3, w);
        r.seed = inst_seed;
        out.all_pass = out.all_pass && r.outcome != Outcome::fail;
        out.reports.push_back(std::move(r));
    }
    return out;
}

SweepResult johnsen(const std::vector<std::int64_t>& ps, int configs_per_p, std::uint64_t seed) {
    SweepResult out;
    std::mt19937_64 master(seed);
    for (std::int64_t p : ps) {
        const PrimeContext ctx(p);
        for (int i = 0; i < configs_per_p; ++i) {
            const std::uint64_t inst_seed = master();
            std::mt19937_64 rng(inst_seed);
            const int m = 1 + static_cast<int>(rng() % 4);
            const int m0 = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
            std::vector<std::int64_t> chars;
            for (int j = 0; j < m0; ++j) chars.push_back(0);
            while (static_cast<int>(chars.size()) < m) {
                chars.push_back(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.order() - 1)));
            }
            std::vector<std::int64_t> shifts;
            while (static_cast<int>(shifts.size()) < m) {
                const std::int64_t b = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
                bool dup = false;
                for (std::int64_t s : shifts) dup = dup || s == b;
                if (!dup) shifts.push_back(b);
            }
            JohnsenResult jr = johnsen_sum(ctx, chars, shifts);
            jr.report.seed = inst_seed;
            out.all_pass = out.all_pass && jr.report.outcome != Outcome::fail;
            out.reports.push_back(std::move(jr.report));
        }
    }
    return out;
}

SweepResult circ(const std::vector<std::int64_t>& ps, int pairs_per_p, std::uint64_t seed) {
    SweepResult out;
    std::mt19937_64 master(seed);
    for (std::int64_t p : ps) {
        const PrimeContext ctx(p);
        for (int i = 0; i < pairs_per_p; ++i) {
            const std::uint64_t inst_seed = master();
            std::mt19937_64 rng(inst_seed);
            ZpSubset a(p), b(p);
            do {
                a = seeded_subset(p, 0.05, 1.0, rng);
            } while (a.card() == 0);
            do {
                b = seeded_subset(p, 0.05, 1.0, rng);
            } while (b.card() == 0);
            VerificationReport r = verify_circ_corollary(ctx, a, b);
            r.seed = inst_seed;
            out.all_pass = out.all_pass && r.outcome != Outcome::fail;
            out.reports.push_back(std::move(r));
        }
    }
    return out;
}

SweepResult spectrum_tail(const std::vector<std::int64_t>& ps, int pairs_per_p, std::uint64_t seed) {
    SweepResult out;
    std::mt19937_64 master(seed);
    for (std::int64_t p : ps) {
        const PrimeContext ctx(p);
        for (int i = 0; i < pairs_per_p; ++i) {
            const std::uint64_t inst_seed = master();
            auto [a1, a2] = random_pair_meeting_20p(p, inst_seed);
            const Omega w = (master() & 1) ? Omega::plus : Omega::minus;
            VerificationReport r = max_nonzero_spectrum_bound(ctx, a1, a2, w);
            r.seed = inst_seed;
            out.all_pass = out.all_pass && r.outcome != Outcome::fail;
            out.reports.push_back(std::move(r));
        }
    }
    return out;
}

SweepResult subgroup_at_scale(std::int64_t p, double density, std::uint64_t seed) {
    SweepResult out;
    const PrimeContext ctx(p);
    const ZpSubset r_set = ZpSubset::units(p);
    std::mt19937_64 rng(seed);
    const ZpSubset a1 = random_subset(p, density, rng());
    const ZpSubset a2 = random_subset(p, density, rng());
    VerificationReport r = verify_subgroup(ctx, r_set, a1, a2);
    r.seed = seed;
    out.all_pass = r.outcome != Outcome::fail;
    out.reports.push_back(std::move(r));
    return out;
}

SweepResult density_increment_sweep(const std::vector<std::int64_t>& ps, int sets_per_p,
                                    std::uint64_t seed) {
    SweepResult out;
    std::mt19937_64 master(seed);
    for (std::int64_t p : ps) {
        const PrimeContext ctx(p);
        for (int i = 0; i < sets_per_p; ++i) {
            const std::uint64_t inst_seed = master();
            std::mt19937_64 rng(inst_seed);
            const ZpSubset a = random_subset(p, canonical_double(rng), rng());
            const DensityIncrement di = density_increment(ctx, a);
            const ZpSubset aprime = a.without_zero();

            VerificationReport shift;
            shift.claim_id = "density_shift";
            shift.p = p;
            shift.inputs = {{"a", a.describe()}};
            shift.condition_met = true;
            shift.measured = static_cast<double>(di.shifted_meet.card());
            shift.bound = std::ceil(static_cast<double>(a.card() * a.card()) / static_cast<double>(p));
            shift.outcome = shift.measured >= shift.bound ? Outcome::pass : Outcome::fail;
            shift.witness = {di.n};
            shift.seed = inst_seed;

            VerificationReport dil;
            dil.claim_id = "density_dilation";
            dil.p = p;
            dil.inputs = {{"a", a.describe()}};
            dil.condition_met = true;
            dil.measured = static_cast<double>(di.dilated_meet.without_zero().card());
            dil.bound = p > 1 ? std::ceil(static_cast<double>(aprime.card() * aprime.card()) /
                                          static_cast<double>(p - 1))
                              : 0.0;
            dil.outcome = dil.measured >= dil.bound ? Outcome::pass : Outcome::fail;
            dil.witness = {di.lambda};
            dil.seed = inst_seed;

            out.all_pass = out.all_pass && shift.outcome != Outcome::fail && dil.outcome != Outcome::fail;
            out.reports.push_back(std::move(shift));
            out.reports.push_back(std::move(dil));
        }
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"two-set", "main", "johnsen", "circ", "spectrum", "subgroup", "density"};
}

SweepResult run_named(const std::string& name, std::uint64_t seed) {
    if (name == "two-set") return two_set({23, 101, 499}, 200, seed);
    if (name == "main") return main_theorem(2003, 20, seed);
    if (name == "johnsen") return johnsen({101, 499}, 500, seed);
    if (name == "circ") return circ({499, 2003}, 50, seed);
    if (name == "spectrum") return spectrum_tail({101, 499}, 50, seed);
    if (name == "subgroup") return subgroup_at_scale(2003, 0.95, seed);
    if (name == "density") return density_increment_sweep({23, 101}, 100, seed);
    throw std::invalid_argument("unknown sweep suite '" + name + "'");
}

}  // namespace zpmono::sweeps
