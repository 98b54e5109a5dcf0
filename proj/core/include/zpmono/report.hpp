#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zpmono {

inline constexpr const char* kToolVersion = "zpmono 0.1.0";

enum class Outcome { pass, fail, not_applicable };

std::string to_string(Outcome o);
Outcome outcome_from_string(const std::string& s);

// Structured result of one theorem/bound verification. Serialization is
// schema-stable: same report in, byte-identical JSON out.
struct VerificationReport {
    std::string claim_id;
    std::int64_t p = 0;
    // Ordered (key, value) descriptors of the inputs, e.g. ("a1", "card=12/23").
    std::vector<std::pair<std::string, std::string>> inputs;
    bool condition_met = false;
    double measured = 0.0;
    double bound = 0.0;
    Outcome outcome = Outcome::not_applicable;
    std::vector<std::int64_t> witness;
    std::optional<std::uint64_t> seed;

    bool passed() const { return outcome == Outcome::pass; }

    nlohmann::ordered_json to_json() const;
    static VerificationReport from_json(const nlohmann::ordered_json& j);

    static std::string csv_header();
    std::string csv_row() const;

    bool operator==(const VerificationReport& other) const = default;
};

}  // namespace zpmono
