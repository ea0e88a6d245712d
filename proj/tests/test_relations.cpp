#include <doctest.h>

#include <cmath>
#include <random>

#include "hausdorff/case_studies.hpp"
#include "hausdorff/relations.hpp"

using namespace hausdorff;

TEST_CASE("numeric: powers of distinct primes are independent up to the bound") {
    const double values[] = {2.0, 3.0};
    const RelationReport report = check_log_independence(values);
    CHECK(report.verdict == RelationVerdict::IndependentUpToBound);
    CHECK(report.residual > 1e-9);
    CHECK(!report.relation.has_value());
}

TEST_CASE("numeric: {2, 4} carries the relation (2, -1)") {
    const double values[] = {2.0, 4.0};
    const RelationReport report = check_log_independence(values);
    CHECK(report.verdict == RelationVerdict::Dependent);
    REQUIRE(report.relation.has_value());
    CHECK(*report.relation == std::vector<std::int64_t>{2, -1});
    CHECK(report.residual <= 1e-9);
}

TEST_CASE("numeric: a unit value is immediately dependent") {
    const double values[] = {1.0, 2.0};
    const RelationReport report = check_log_independence(values);
    CHECK(report.verdict == RelationVerdict::Dependent);
    REQUIRE(report.relation.has_value());
    CHECK(*report.relation == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("numeric: search budget is enforced") {
    std::vector<double> values(13, 2.0);
    CHECK_THROWS_AS(check_log_independence(values), SearchTooLargeError);
    std::vector<double> wide(8, 2.0);
    CHECK_THROWS_AS(check_log_independence(wide, 10), SearchTooLargeError);
    CHECK_THROWS_AS(check_log_independence(std::vector<double>{2.0, -1.0}), Error);
}

TEST_CASE("exact: distinct primes are exactly independent") {
    const ExactEigenvalue values[] = {{1, 2, 1, 1}, {1, 3, 1, 1}, {1, 5, 1, 1}};
    const RelationReport report = check_exact_independence(values);
    CHECK(report.verdict == RelationVerdict::ExactlyIndependent);
}

TEST_CASE("exact: rational powers of one base") {
    const ExactEigenvalue values[] = {{1, 2, 1, 2}, {1, 2, 1, 3}};
    const RelationReport report = check_exact_independence(values);
    CHECK(report.verdict == RelationVerdict::Dependent);
    REQUIRE(report.relation.has_value());
    CHECK(*report.relation == std::vector<std::int64_t>{2, -3});
}

TEST_CASE("exact: composite base 6 = 2 * 3") {
    const ExactEigenvalue values[] = {{1, 6, 1, 1}, {1, 2, 1, 1}, {1, 3, 1, 1}};
    const RelationReport report = check_exact_independence(values);
    CHECK(report.verdict == RelationVerdict::Dependent);
    REQUIRE(report.relation.has_value());
    CHECK(*report.relation == std::vector<std::int64_t>{1, -1, -1});
}

TEST_CASE("exact: oversized bases are refused") {
    const ExactEigenvalue values[] = {{1, 2'000'000'011, 1, 1}};
    CHECK_THROWS_AS(check_exact_independence(values), BaseTooLargeError);
}

TEST_CASE("dependent witnesses re-evaluate below tolerance") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> base_pick(0, 4);
    std::uniform_int_distribution<int> num_pick(-2, 2);
    std::uniform_int_distribution<int> den_pick(1, 2);
    const std::int64_t bases[] = {2, 3, 5, 6, 10};

    int dependents = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ExactEigenvalue> exact;
        std::vector<double> numeric;
        const int m = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < m; ++i) {
            ExactEigenvalue e{1, bases[base_pick(rng)], num_pick(rng), den_pick(rng)};
            exact.push_back(e);
            numeric.push_back(std::exp(e.log_modulus()));
        }
        const RelationReport report = check_log_independence(numeric);
        if (report.verdict == RelationVerdict::Dependent) {
            ++dependents;
            REQUIRE(report.relation.has_value());
            double sum = 0.0;
            bool nonzero = false;
            for (std::size_t i = 0; i < numeric.size(); ++i) {
                sum += static_cast<double>((*report.relation)[i]) * std::log(numeric[i]);
                nonzero = nonzero || (*report.relation)[i] != 0;
                CHECK(std::abs((*report.relation)[i]) <= report.search_bound);
            }
            CHECK(nonzero);
            CHECK(std::abs(sum) <= 1e-9);
        }
    }
    CHECK(dependents > 10); // the generator hits plenty of dependent lists
}

TEST_CASE("exact and numeric paths agree on random exact forms") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> base_pick(0, 4);
    std::uniform_int_distribution<int> num_pick(-2, 2);
    std::uniform_int_distribution<int> den_pick(1, 2);
    const std::int64_t bases[] = {2, 3, 5, 6, 10};

    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 2);
        std::vector<ExactEigenvalue> exact;
        std::vector<double> numeric;
        for (int i = 0; i < m; ++i) {
            ExactEigenvalue e{1, bases[base_pick(rng)], num_pick(rng), den_pick(rng)};
            exact.push_back(e);
            numeric.push_back(std::exp(e.log_modulus()));
        }
        const RelationReport exact_report = check_exact_independence(exact);
        const RelationReport numeric_report = check_log_independence(numeric);
        CHECK((exact_report.verdict == RelationVerdict::Dependent) ==
              (numeric_report.verdict == RelationVerdict::Dependent));
    }
}

TEST_CASE("per-coordinate hypothesis helper picks the exact path") {
    const OperatorSpec two = two_term_document().to_operator_spec();
    const DiagonalizedFamily family = simultaneous_diagonalize(two);
    const CoordinateIndependence best = best_coordinate_independence(two, family);
    CHECK(best.report.verdict == RelationVerdict::ExactlyIndependent);

    const OperatorSpec remark = remark_circle_document().to_operator_spec();
    const DiagonalizedFamily rf = simultaneous_diagonalize(remark);
    const CoordinateIndependence rb = best_coordinate_independence(remark, rf);
    CHECK(rb.report.verdict == RelationVerdict::Dependent);
}
