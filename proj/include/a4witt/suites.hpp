#ifndef A4WITT_SUITES_HPP
#define A4WITT_SUITES_HPP

#include <cstdint>
#include <vector>

#include "a4witt/report.hpp"

namespace a4witt {

struct SuiteOptions {
    std::uint64_t seed = 0xA4;
    int samples = 100;
};

std::vector<Check> verify_prop2(const SuiteOptions& opt);
std::vector<Check> verify_prop1(const SuiteOptions& opt);
std::vector<Check> verify_criterion(const SuiteOptions& opt);
std::vector<Check> verify_infrastructure(const SuiteOptions& opt);

// the two calibrations, runnable on their own (CLI `calibrate`)
Check check_witt_calibration(const SuiteOptions& opt);
Check check_sign_calibration(const SuiteOptions& opt);

// scope: prop2 | prop1 | criterion | all; throws Error on unknown scope
std::vector<Check> verify_scope(const std::string& scope, const SuiteOptions& opt);

}  // namespace a4witt

#endif
