#ifndef TREEGAMES_SUITE_HPP
#define TREEGAMES_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tg {

inline constexpr std::uint64_t kDefaultSuiteSeed = 424242;

struct SuiteResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> lines; // deterministic detail lines
    double millis = 0;              // wall time, reported separately
};

// Runs one reproduction suite (1..9) with the given seed.
SuiteResult run_suite(int which, std::uint64_t seed);

// All nine, in order. Items are independent and run in parallel when OpenMP
// is available; the report is deterministic either way.
std::vector<SuiteResult> run_acceptance_suites(std::uint64_t seed);

// Deterministic report body (no timings).
std::string render_report(const std::vector<SuiteResult>& results);

// Per-suite CSV statistics (includes timings).
std::string render_csv(const std::vector<SuiteResult>& results);

} // namespace tg

#endif
