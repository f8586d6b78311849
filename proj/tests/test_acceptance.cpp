// Acceptance gate: runs every reproduction suite at the repository's default
// seed and requires each to pass, printing one line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "treegames/suite.hpp"

TEST_CASE("acceptance criteria") {
    auto results = tg::run_acceptance_suites(tg::kDefaultSuiteSeed);
    std::fputs(tg::render_report(results).c_str(), stdout);
    for (const tg::SuiteResult& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.name);
        CHECK_MESSAGE(r.pass, "suite ", r.id, " (", r.name, ") failed");
    }
}
