#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zpmono/bounds.hpp"
#include "zpmono/coloring.hpp"
#include "zpmono/counting.hpp"
#include "zpmono/field.hpp"
#include "zpmono/parallel.hpp"
#include "zpmono/report.hpp"
#include "zpmono/set_spec.hpp"
#include "zpmono/sweeps.hpp"
#include "zpmono/transform.hpp"

namespace {

using nlohmann::ordered_json;
using namespace zpmono;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output path '" << path << "'\n";
        return 2;
    }
    out << text << "\n";
    return out ? 0 : 2;
}

Omega parse_omega(const std::string& s) {
    if (s == "+1" || s == "1" || s == "plus") return Omega::plus;
    if (s == "-1" || s == "minus") return Omega::minus;
    throw CLI::ValidationError("--omega must be +1 or -1");
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t at = 0;
    while (at < s.size()) {
        std::size_t comma = s.find(',', at);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoll(s.substr(at, comma - at)));
        at = comma + 1;
    }
    return out;
}

ordered_json spectrum_json(const Spectrum& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : s.amp) {
        arr.push_back(ordered_json::array({a.real(), a.imag()}));
    }
    return arr;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                 const std::string& output) {
    std::string text;
    if (format == "csv") {
        text = VerificationReport::csv_header();
        for (const auto& r : reports) text += "\n" + r.csv_row();
    } else {
        if (reports.size() == 1) {
            text = reports.front().to_json().dump(2);
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            text = arr.dump(2);
        }
    }
    if (int rc = write_output(text, output); rc != 0) return rc;
    for (const auto& r : reports) {
        if (r.outcome == Outcome::fail) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character-sum and coloring experiments on Z_p"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    int threads = 1;
    app.add_option("--threads", threads, "worker count for counting kernels");

    // transform
    auto* cmd_transform = app.add_subcommand("transform", "character transform of a set indicator");
    std::int64_t tr_p = 0;
    std::string tr_set, tr_output;
    bool tr_naive = false;
    cmd_transform->add_option("--p", tr_p, "prime modulus")->required();
    cmd_transform->add_option("--set", tr_set, "set spec")->required();
    cmd_transform->add_flag("--naive", tr_naive, "use direct summation instead of the chirp-z path");
    cmd_transform->add_option("--output", tr_output, "write JSON here instead of stdout");

    // sigma
    auto* cmd_sigma = app.add_subcommand("sigma", "exact solution counts");
    std::int64_t sg_p = 0;
    std::string sg_a1, sg_a2, sg_a3, sg_omega = "+1", sg_output;
    bool sg_wide = false;
    cmd_sigma->add_option("--p", sg_p, "prime modulus")->required();
    cmd_sigma->add_option("--a1", sg_a1, "set spec for A1")->required();
    cmd_sigma->add_option("--a2", sg_a2, "set spec for A2")->required();
    cmd_sigma->add_option("--a3", sg_a3, "set spec for A3 (switches to sigma~)");
    cmd_sigma->add_option("--omega", sg_omega, "+1 or -1");
    cmd_sigma->add_flag("--wide-y", sg_wide, "let y range over all of Z_p");
    cmd_sigma->add_option("--output", sg_output, "write JSON here instead of stdout");

    // verify <claim>
    auto* cmd_verify = app.add_subcommand("verify", "run one theorem/bound verification");
    cmd_verify->require_subcommand(1);
    std::int64_t vf_p = 0;
    std::string vf_a1, vf_a2, vf_a3, vf_r, vf_a, vf_b;
    std::string vf_omega = "+1", vf_format = "json", vf_output, vf_log = "ln";
    std::string vf_chars, vf_shifts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", vf_p, "prime modulus")->required();
        sub->add_option("--format", vf_format, "json or csv");
        sub->add_option("--output", vf_output, "write report here instead of stdout");
    };
    auto* v_two = cmd_verify->add_subcommand("two-set", "sigma > 0 under |A1||A2| >= 20p");
    add_common(v_two);
    v_two->add_option("--a1", vf_a1)->required();
    v_two->add_option("--a2", vf_a2)->required();
    v_two->add_option("--omega", vf_omega);
    auto* v_main = cmd_verify->add_subcommand("main", "sigma~ > 0 under |A1||A2||A3| >= 40 p^{5/2}");
    add_common(v_main);
    v_main->add_option("--a1", vf_a1)->required();
    v_main->add_option("--a2", vf_a2)->required();
    v_main->add_option("--a3", vf_a3)->required();
    v_main->add_option("--omega", vf_omega);
    auto* v_sub = cmd_verify->add_subcommand("subgroup", "both inclusion patterns with x in R");
    add_common(v_sub);
    v_sub->add_option("--r", vf_r)->required();
    v_sub->add_option("--a1", vf_a1)->required();
    v_sub->add_option("--a2", vf_a2)->required();
    v_sub->add_option("--log-base", vf_log, "ln or log2");
    auto* v_circ = cmd_verify->add_subcommand("circ", "|A o B| lower bound");
    add_common(v_circ);
    v_circ->add_option("--a", vf_a)->required();
    v_circ->add_option("--b", vf_b)->required();
    auto* v_joh = cmd_verify->add_subcommand("johnsen", "shifted character-product sum bound");
    add_common(v_joh);
    v_joh->add_option("--chars", vf_chars, "comma-separated character indices")->required();
    v_joh->add_option("--shifts", vf_shifts, "comma-separated distinct shifts")->required();
    auto* v_basis = cmd_verify->add_subcommand("basis", "R + R covers Z_p*");
    add_common(v_basis);
    v_basis->add_option("--r", vf_r)->required();
    v_basis->add_option("--log-base", vf_log, "ln or log2");
    auto* v_spec = cmd_verify->add_subcommand("spectrum", "nonzero-coefficient tail bound");
    add_common(v_spec);
    v_spec->add_option("--a1", vf_a1)->required();
    v_spec->add_option("--a2", vf_a2)->required();
    v_spec->add_option("--omega", vf_omega);

    // color <find|search>
    auto* cmd_color = app.add_subcommand("color", "coloring searches");
    cmd_color->require_subcommand(1);
    std::int64_t cl_p = 0, cl_n = 0, cl_budget = 1000;
    int cl_k = 2;
    std::uint64_t cl_seed = 0;
    std::string cl_pattern = "triple", cl_output;
    bool cl_strict = false;
    auto* c_find = cmd_color->add_subcommand("find", "scan a seeded random coloring for a pattern");
    c_find->add_option("--p", cl_p, "prime modulus (triple/quadruple patterns)");
    c_find->add_option("--n", cl_n, "segment length (schur pattern)");
    c_find->add_option("--k", cl_k, "number of colors")->required();
    c_find->add_option("--seed", cl_seed, "coloring seed")->required();
    c_find->add_option("--pattern", cl_pattern, "triple | quadruple | schur");
    c_find->add_flag("--strict", cl_strict, "exclude x = y and x+y = xy coincidences");
    c_find->add_option("--output", cl_output, "write JSON here instead of stdout");
    auto* c_search = cmd_color->add_subcommand("search", "adversarial quadruple minimization");
    c_search->add_option("--p", cl_p, "prime modulus")->required();
    c_search->add_option("--k", cl_k, "number of colors")->required();
    c_search->add_option("--budget", cl_budget, "evaluation budget")->required();
    c_search->add_option("--seed", cl_seed, "search seed")->required();
    c_search->add_option("--output", cl_output, "write JSON here instead of stdout");

    // sweep <suite>
    auto* cmd_sweep = app.add_subcommand("sweep", "seeded verification sweeps");
    std::string sw_suite, sw_format = "json", sw_output;
    std::uint64_t sw_seed = 1;
    cmd_sweep->add_option("suite", sw_suite, "two-set | main | johnsen | circ | spectrum | subgroup | density")
        ->required();
    cmd_sweep->add_option("--seed", sw_seed, "master seed");
    cmd_sweep->add_option("--format", sw_format, "json or csv");
    cmd_sweep->add_option("--output", sw_output, "write reports here instead of stdout");

    // Let top-level options like --threads appear after a subcommand.
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    set_worker_count(threads);

    try {
        if (*cmd_transform) {
            const PrimeContext ctx(tr_p);
            const ZpSubset a = parse_set_spec(ctx, tr_set);
            std::vector<cdouble> f(static_cast<std::size_t>(ctx.order()));
            for (std::int64_t x = 1; x < tr_p; ++x) {
                f[static_cast<std::size_t>(x - 1)] = a.contains(x) ? 1.0 : 0.0;
            }
            const Spectrum s = tr_naive ? forward(ctx, f) : fast_forward(ctx, f);
            ordered_json j;
            j["p"] = tr_p;
            j["set"] = tr_set;
            j["spectrum"] = spectrum_json(s);
            j["tool"] = kToolVersion;
            return write_output(j.dump(2), tr_output);
        }
        if (*cmd_sigma) {
            const PrimeContext ctx(sg_p);
            const ZpSubset a1 = parse_set_spec(ctx, sg_a1);
            const ZpSubset a2 = parse_set_spec(ctx, sg_a2);
            const Omega w = parse_omega(sg_omega);
            ordered_json j;
            j["p"] = sg_p;
            j["a1"] = sg_a1;
            j["a2"] = sg_a2;
            j["omega"] = sg_omega;
            if (sg_a3.empty()) {
                if (sg_wide) {
                    const auto f = f_values(ctx, a1, a2, w, true);
                    std::int64_t total = 0;
                    for (std::int64_t v : f) total += v;
                    j["sigma"] = total;
                    j["wide_y"] = true;
                } else {
                    j["sigma"] = sigma(ctx, a1, a2, w);
                }
            } else {
                const ZpSubset a3 = parse_set_spec(ctx, sg_a3);
                const SigmaTilde st = sigma_tilde(ctx, a1, a2, a3, w);
                j["a3"] = sg_a3;
                j["sigma_tilde"] = st.count;
                if (st.witness) {
                    j["witness"] = ordered_json::array({st.witness->first, st.witness->second});
                }
            }
            j["tool"] = kToolVersion;
            return write_output(j.dump(2), sg_output);
        }
        if (*cmd_verify) {
            const PrimeContext ctx(vf_p);
            VerificationReport r;
            if (*v_two) {
                r = verify_two_set(ctx, parse_set_spec(ctx, vf_a1), parse_set_spec(ctx, vf_a2),
                                   parse_omega(vf_omega));
            } else if (*v_main) {
                r = verify_main(ctx, parse_set_spec(ctx, vf_a1), parse_set_spec(ctx, vf_a2),
                                parse_set_spec(ctx, vf_a3), parse_omega(vf_omega));
            } else if (*v_sub) {
                r = verify_subgroup(ctx, parse_set_spec(ctx, vf_r), parse_set_spec(ctx, vf_a1),
                                    parse_set_spec(ctx, vf_a2),
                                    vf_log == "log2" ? LogBase::two : LogBase::natural);
            } else if (*v_circ) {
                r = verify_circ_corollary(ctx, parse_set_spec(ctx, vf_a), parse_set_spec(ctx, vf_b));
            } else if (*v_joh) {
                r = johnsen_sum(ctx, parse_int_list(vf_chars), parse_int_list(vf_shifts)).report;
            } else if (*v_basis) {
                r = basis_order_two(ctx, parse_set_spec(ctx, vf_r),
                                    vf_log == "log2" ? LogBase::two : LogBase::natural);
            } else if (*v_spec) {
                r = max_nonzero_spectrum_bound(ctx, parse_set_spec(ctx, vf_a1),
                                               parse_set_spec(ctx, vf_a2), parse_omega(vf_omega));
            }
            return emit_reports({r}, vf_format, vf_output);
        }
        if (*cmd_color) {
            ordered_json j;
            if (*c_find) {
                if (cl_pattern == "schur") {
                    if (cl_n < 2) {
                        std::cerr << "error: schur pattern needs --n >= 2\n";
                        return 2;
                    }
                    const Coloring c = random_coloring(cl_n + 1, cl_k, cl_seed);
                    const auto hit = find_mono_schur(cl_n, c);
                    j["pattern"] = "schur";
                    j["n"] = cl_n;
                    j["found"] = hit.has_value();
                    if (hit) j["witness"] = ordered_json::array({(*hit)[0], (*hit)[1], (*hit)[2]});
                } else {
                    if (cl_p < 2) {
                        std::cerr << "error: --p required for this pattern\n";
                        return 2;
                    }
                    const PrimeContext ctx(cl_p);
                    const Coloring c = random_coloring(cl_p, cl_k, cl_seed);
                    const auto hit = cl_pattern == "quadruple"
                                         ? find_mono_quadruple(ctx, c, cl_strict)
                                         : find_mono_triple(ctx, c, cl_strict);
                    j["pattern"] = cl_pattern;
                    j["p"] = cl_p;
                    j["found"] = hit.has_value();
                    if (hit) {
                        j["witness"] = ordered_json::array({hit->x, hit->y});
                        j["color"] = hit->color;
                    }
                }
                j["k"] = cl_k;
                j["seed"] = cl_seed;
                j["tool"] = kToolVersion;
                return write_output(j.dump(2), cl_output);
            }
            const PrimeContext ctx(cl_p);
            const AdversarialResult res = adversarial_search(ctx, cl_k, cl_budget, cl_seed);
            j["p"] = cl_p;
            j["k"] = cl_k;
            j["budget"] = cl_budget;
            j["seed"] = cl_seed;
            j["mono_count"] = res.mono_count;
            j["coloring"] = res.best.assign;
            j["tool"] = kToolVersion;
            return write_output(j.dump(2), cl_output);
        }
        if (*cmd_sweep) {
            const sweeps::SweepResult res = sweeps::run_named(sw_suite, sw_seed);
            return emit_reports(res.reports, sw_format, sw_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
