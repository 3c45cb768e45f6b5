#ifndef A4WITT_REPORT_HPP
#define A4WITT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace a4witt {

using Json = nlohmann::ordered_json;

// One verified claim. `anchor` names the proposition the claim checks,
// `id` is stable across releases, `witness` carries enough data to diagnose
// a failure (both sides of an identity, offending sample, ...).
struct Check {
    std::string id;
    std::string anchor;
    std::string status;  // pass | fail | skipped | error
    Json witness;

    bool passed() const { return status == "pass" || status == "skipped"; }

    static Check pass(std::string id, std::string anchor, Json witness = Json::object()) {
        return {std::move(id), std::move(anchor), "pass", std::move(witness)};
    }
    static Check fail(std::string id, std::string anchor, Json witness = Json::object()) {
        return {std::move(id), std::move(anchor), "fail", std::move(witness)};
    }

    Json to_json() const {
        Json j;
        j["claim"] = id;
        j["anchor"] = anchor;
        j["status"] = status;
        j["witness"] = witness;
        return j;
    }
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<Check> claims;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
    Json result = Json::object();  // command-specific payload

    bool all_passed() const {
        for (const Check& c : claims)
            if (!c.passed()) return false;
        return true;
    }

    Json to_json() const;
};

}  // namespace a4witt

#endif
