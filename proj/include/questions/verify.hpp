#ifndef QUESTIONS_VERIFY_HPP
#define QUESTIONS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

/// Verification suites: one named suite per module, each a list of checks
/// with measured values and tolerances. Deterministic for a given seed.
namespace questions {

struct Check {
    std::string id;
    std::string description;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
};

const std::vector<std::string>& suite_names();  // excludes "all"

/// Runs one suite, or every suite when name == "all".
std::vector<VerificationReport> run_verification(const std::string& name,
                                                 std::uint64_t seed = 0);

}  // namespace questions

#endif
