#include "a4witt/report.hpp"

namespace a4witt {

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    if (!result.empty()) j["result"] = result;
    Json cl = Json::array();
    for (const Check& c : claims) cl.push_back(c.to_json());
    j["claims"] = cl;
    j["seed"] = std::to_string(seed);
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

}  // namespace a4witt
