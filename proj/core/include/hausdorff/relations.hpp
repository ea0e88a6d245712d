#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hausdorff/diagonalize.hpp"
#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

enum class RelationVerdict {
    IndependentUpToBound, // no integer relation with |l_k| <= bound
    Dependent,            // witness relation found
    ExactlyIndependent,   // proven over Q from exact prime factorizations
};

// Verdict on Z-linear independence of a list of logarithms, with a witness
// when dependent. A Dependent witness always satisfies |sum l_k x_k| <= the
// tolerance it was found under.
struct RelationReport {
    RelationVerdict verdict = RelationVerdict::IndependentUpToBound;
    std::optional<std::vector<std::int64_t>> relation;
    double residual = 0.0;
    std::int64_t search_bound = 0;

    bool independent() const { return verdict != RelationVerdict::Dependent; }
};

// Exhaustive search over nonzero l in [-bound, bound]^m for
// min |sum_k l_k log(values_k)|. values must be positive; any value equal
// to 1 yields Dependent with the unit relation immediately. Throws
// SearchTooLargeError when m > 12 or (2*bound+1)^m exceeds the budget.
RelationReport check_log_independence(std::span<const double> values,
                                      std::int64_t bound = 10,
                                      double tolerance = 1e-9);

// Exact path: each |value| = base^(num/den). Factoring the bases over the
// primes turns sum l_k log|value_k| = 0 into a rational linear system on the
// prime-exponent vectors; the verdict is ExactlyIndependent iff those vectors
// are linearly independent over Q, else Dependent with an exact witness.
// Throws BaseTooLargeError for bases above 10^9.
RelationReport check_exact_independence(std::span<const ExactEigenvalue> values);

// The arithmetic hypothesis is needed along one eigenvalue coordinate only.
// Runs the exact path where exact forms exist (falling back to the bounded
// numeric search) for each coordinate nu and returns the strongest verdict.
struct CoordinateIndependence {
    int coordinate = -1;
    RelationReport report;
};
CoordinateIndependence best_coordinate_independence(const OperatorSpec& spec,
                                                    const DiagonalizedFamily& family,
                                                    std::int64_t bound = 10,
                                                    double tolerance = 1e-9);

} // namespace hausdorff
