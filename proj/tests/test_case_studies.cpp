#include <doctest.h>

#include "hausdorff/case_studies.hpp"

using namespace hausdorff;

// The heavyweight cases run at full budget inside the acceptance suite; here
// they run shrunk, to exercise the wiring and the verdicts.

TEST_CASE("remark-circle case study passes") {
    const CaseStudyResult r = run_case_study("remark-circle");
    CHECK(r.passed);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].measured <= 1e-2);
    CHECK(r.checks[1].measured > 1.0);
}

TEST_CASE("ross-circle case study passes") {
    const CaseStudyResult r = run_case_study("ross-circle");
    CHECK(r.passed);
    const auto* norm = r.document.output("operator_norm");
    REQUIRE(norm != nullptr);
    CHECK(std::get<double>(*norm) == doctest::Approx(4.41421).epsilon(1e-3));
}

TEST_CASE("two-term annulus case study passes at reduced sampling") {
    const CaseStudyResult r = run_case_study("two-term-annulus", 0, 120'000);
    CHECK(r.passed);
    const auto* r_in = r.document.output("r_in");
    REQUIRE(r_in != nullptr);
    CHECK(std::get<double>(*r_in) == doctest::Approx(0.1297565).epsilon(1e-5));
}

TEST_CASE("three-term disc case study passes at reduced sampling") {
    const CaseStudyResult r = run_case_study("three-term-disc", 0, 120'000);
    CHECK(r.passed);
    const auto* r_in = r.document.output("r_in");
    REQUIRE(r_in != nullptr);
    CHECK(std::get<double>(*r_in) == 0.0);
}

TEST_CASE("prime-annulus case study passes at reduced sampling") {
    const CaseStudyResult r = run_case_study("prime-annulus", 0, 60'000);
    CHECK(r.passed);
}

TEST_CASE("pantograph classification is affirmative for the two-term dilation") {
    const CaseStudyResult r = run_case_study("pantograph-classify", 0, 60'000);
    CHECK(r.passed);
    const auto* unbounded = r.document.output("unbounded_solutions");
    REQUIRE(unbounded != nullptr);
    CHECK(std::get<bool>(*unbounded));
}
