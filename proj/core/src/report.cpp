#include "zpmono/report.hpp"

#include <sstream>
#include <stdexcept>

namespace zpmono {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

Outcome outcome_from_string(const std::string& s) {
    if (s == "pass") return Outcome::pass;
    if (s == "fail") return Outcome::fail;
    if (s == "not_applicable") return Outcome::not_applicable;
    throw std::invalid_argument("unknown outcome: " + s);
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    j["p"] = p;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    j["condition_met"] = condition_met;
    j["measured"] = measured;
    j["bound"] = bound;
    j["pass"] = to_string(outcome);
    j["witness"] = witness;
    if (seed) {
        j["seed"] = *seed;
    } else {
        j["seed"] = nullptr;
    }
    j["tool"] = kToolVersion;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.p = j.at("p").get<std::int64_t>();
    for (const auto& [k, v] : j.at("inputs").items()) {
        r.inputs.emplace_back(k, v.get<std::string>());
    }
    r.condition_met = j.at("condition_met").get<bool>();
    r.measured = j.at("measured").get<double>();
    r.bound = j.at("bound").get<double>();
    r.outcome = outcome_from_string(j.at("pass").get<std::string>());
    r.witness = j.at("witness").get<std::vector<std::int64_t>>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::string VerificationReport::csv_header() {
    return "claim_id,p,condition_met,measured,bound,pass,witness,seed";
}

std::string VerificationReport::csv_row() const {
    std::ostringstream os;
    os.precision(17);
    os << claim_id << ',' << p << ',' << (condition_met ? "true" : "false") << ','
       << measured << ',' << bound << ',' << to_string(outcome) << ',';
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ';';
        os << witness[i];
    }
    os << ',';
    if (seed) os << *seed;
    return os.str();
}

}  // namespace zpmono
