#include <doctest.h>

#include <cmath>

#include "hausdorff/case_studies.hpp"
#include "hausdorff/result_document.hpp"
#include "hausdorff/spec_document.hpp"

using namespace hausdorff;

TEST_CASE("spec documents round-trip through their serialization") {
    const SpecDocument doc = remark_circle_document();
    const std::string text = doc.serialize();
    const SpecDocument back = SpecDocument::parse(text);
    CHECK(back.dimension == doc.dimension);
    REQUIRE(back.entries.size() == doc.entries.size());
    CHECK(back.entries[1].matrix == doc.entries[1].matrix);
    REQUIRE(back.entries[1].exact.has_value());
    CHECK((*back.entries[1].exact)[0].base == 2);
    CHECK(back.serialize() == text);
}

TEST_CASE("spec parsing rejects malformed documents with locations") {
    const auto expect_location = [](const std::string& text, const std::string& where) {
        try {
            SpecDocument::parse(text);
            FAIL("expected ParseError for ", where);
        } catch (const ParseError& e) {
            CHECK(e.location == where);
        }
    };

    expect_location(R"({"dimension": 1, "entries": []})", "$");
    expect_location(R"({"schema_version": "2", "dimension": 1})", "$.schema_version");
    expect_location(
        R"({"schema_version": "1", "dimension": 1,
            "entries": [{"k": 0, "c": [1, 0], "matrix": [1], "bogus": 3}]})",
        "$.entries[0].bogus");
    expect_location(
        R"({"schema_version": "1", "dimension": 2,
            "entries": [{"k": 0, "c": [1, 0], "matrix": [1, 0, 0]}]})",
        "$.entries[0].matrix");
    expect_location(
        R"({"schema_version": "1", "dimension": 1,
            "entries": [{"k": 0, "c": [1, 0], "matrix": [1],
                         "exact": [{"sign": 2, "base": 2, "num": 1, "den": 1}]}]})",
        "$.entries[0].exact[0].sign");
    expect_location(R"({"schema_version": "1", "dimension": 1, "unknown_top": 1})",
                    "$.unknown_top");
    expect_location(
        R"({"schema_version": "1", "dimension": 1,
            "entries": [{"k": 1, "c": [1, 0], "matrix": [2]}],
            "generator": {"name": "geometric-prime"}})",
        "$.entries");
    expect_location(
        R"({"schema_version": "1", "dimension": 1,
            "entries": [{"k": 1, "c": [1, 0], "matrix": [2]}],
            "generator": {"name": "custom-tail"}})",
        "$.generator");
    expect_location(
        R"({"schema_version": "1", "dimension": 1,
            "generator": {"name": "who-knows"}})",
        "$.generator.name");
}

TEST_CASE("spec documents build validated operators and generators") {
    const OperatorSpec remark = remark_circle_document().to_operator_spec();
    CHECK(remark.n2() == doctest::Approx(1.0 + std::pow(2.0, -0.5)));

    const SpecDocument prime = prime_family_document();
    const auto generator = prime.make_generator();
    CHECK(generator->name() == "geometric-prime");
    CHECK(generator->entries_up_to(3).size() == 3);

    SpecDocument custom;
    custom.dimension = 1;
    SpecDocument::Entry e;
    e.k = 1;
    e.c = {0.5, 0.0};
    e.matrix = {2.0};
    custom.entries.push_back(e);
    custom.generator = SpecDocument::Generator{"custom-tail", 1.0, 0.5};
    const std::string text = custom.serialize();
    const SpecDocument parsed = SpecDocument::parse(text);
    const auto family = parsed.make_generator();
    CHECK(family->tail_bound(1) == doctest::Approx(0.5));
}

TEST_CASE("result documents are deterministic and export CSV") {
    ResultDocument doc("spectrum", fnv1a_digest("input"), 7);
    doc.set_parameter("span", 3.5);
    doc.set_parameter("method", std::string("grid"));
    doc.set_output("cloud", std::vector<Complex>{{1.0, 2.0}, {-0.5, 0.25}});
    doc.set_output("resolution", 0.01);

    ResultDocument twin("spectrum", fnv1a_digest("input"), 7);
    twin.set_parameter("span", 3.5);
    twin.set_parameter("method", std::string("grid"));
    twin.set_output("cloud", std::vector<Complex>{{1.0, 2.0}, {-0.5, 0.25}});
    twin.set_output("resolution", 0.01);

    CHECK(doc.to_json() == twin.to_json());
    CHECK(doc.to_json().find("\"seed\": 7") != std::string::npos);

    const std::string csv = doc.to_csv();
    CHECK(csv == "re,im\n1,2\n-0.5,0.25\n");
    CHECK_THROWS_AS(ResultDocument("x", "y", 0).to_csv(), Error);
}

TEST_CASE("digest is the FNV-1a reference") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_digest("hausdorff") != fnv1a_digest("hausdorfg"));
}

TEST_CASE("case-study documents reproduce byte-identically") {
    const CaseStudyResult a = run_case_study("pantograph-classify", 3, 20'000);
    const CaseStudyResult b = run_case_study("pantograph-classify", 3, 20'000);
    CHECK(a.document.to_json() == b.document.to_json());
    CHECK(a.passed);
}

TEST_CASE("unknown case studies are refused") {
    CHECK_THROWS_AS(run_case_study("no-such-case"), UnknownCaseError);
    CHECK(case_study_names().size() == 7);
}
