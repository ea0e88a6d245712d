#include "hausdorff/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace hausdorff {

namespace {

// ── exact rational arithmetic (small values only) ─────────────────────────

struct Frac {
    long long num = 0;
    long long den = 1;

    static Frac of(long long n, long long d) {
        Frac f{n, d};
        f.normalize();
        return f;
    }

    void normalize() {
        if (den == 0)
            throw Error("rational arithmetic: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool zero() const { return num == 0; }
};

long long checked(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("rational arithmetic overflow in exact independence check");
    return static_cast<long long>(v);
}

Frac add(const Frac& a, const Frac& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    const long long nn = checked(n), dd = checked(d);
    return Frac::of(nn, dd);
}

Frac mul(const Frac& a, const Frac& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.num;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return Frac::of(checked(n), checked(d));
}

Frac neg(const Frac& a) { return Frac{-a.num, a.den}; }

Frac div(const Frac& a, const Frac& b) {
    if (b.zero())
        throw Error("rational arithmetic: division by zero");
    return mul(a, Frac::of(b.den, b.num));
}

// ── bounded exhaustive search ─────────────────────────────────────────────

struct Search {
    const std::vector<double>& logs;
    std::int64_t bound;
    double tolerance;
    std::vector<double> suffix_reach; // max |contribution| of coordinates >= i
    std::vector<std::int64_t> current;
    std::vector<std::int64_t> best_relation;
    double best = std::numeric_limits<double>::infinity();

    void run(std::size_t depth, double partial, bool all_zero) {
        if (depth == logs.size()) {
            if (all_zero)
                return;
            const double r = std::abs(partial);
            if (r < best) {
                best = r;
                best_relation = current;
            }
            return;
        }
        if (std::abs(partial) - suffix_reach[depth] >= best &&
            std::abs(partial) - suffix_reach[depth] > tolerance)
            return;
        // The sign of the first nonzero coefficient is normalized to +1.
        const std::int64_t lo = all_zero ? 0 : -bound;
        for (std::int64_t l = lo; l <= bound; ++l) {
            current[depth] = l;
            run(depth + 1, partial + static_cast<double>(l) * logs[depth], all_zero && l == 0);
        }
        current[depth] = 0;
    }
};

// ── prime factorization ───────────────────────────────────────────────────

std::map<long long, long long> factorize(long long base) {
    std::map<long long, long long> factors;
    long long rest = base;
    for (long long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            ++factors[p];
            rest /= p;
        }
    }
    if (rest > 1)
        ++factors[rest];
    return factors;
}

std::vector<std::int64_t> integer_witness(const std::vector<Frac>& coeffs) {
    long long lcm = 1;
    for (const auto& c : coeffs)
        lcm = checked(static_cast<__int128>(lcm) / std::gcd(lcm, c.den) * c.den);
    std::vector<std::int64_t> l(coeffs.size());
    long long g = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        l[i] = checked(static_cast<__int128>(coeffs[i].num) * (lcm / coeffs[i].den));
        g = std::gcd(g, std::abs(static_cast<long long>(l[i])));
    }
    if (g > 1)
        for (auto& v : l)
            v /= g;
    for (const auto& v : l) {
        if (v != 0) {
            if (v < 0)
                for (auto& w : l)
                    w = -w;
            break;
        }
    }
    return l;
}

} // namespace

RelationReport check_log_independence(std::span<const double> values, std::int64_t bound,
                                      double tolerance) {
    if (values.empty())
        throw Error("independence check: empty value list");
    if (bound < 1)
        throw Error("independence check: bound must be >= 1");
    for (double v : values)
        if (!(v > 0.0))
            throw Error("independence check: values must be positive");

    const std::size_t m = values.size();
    double space = 1.0;
    for (std::size_t i = 0; i < m; ++i)
        space *= static_cast<double>(2 * bound + 1);
    if (m > 12 || space > 4e8)
        throw SearchTooLargeError("independence search space (2L+1)^m = " +
                                  std::to_string(space) + " exceeds the budget");

    std::vector<double> logs(m);
    for (std::size_t i = 0; i < m; ++i)
        logs[i] = std::log(values[i]);

    // A unit value forces log = 0: dependent via the unit relation.
    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(logs[i]) <= tolerance) {
            std::vector<std::int64_t> unit(m, 0);
            unit[i] = 1;
            return RelationReport{RelationVerdict::Dependent, unit, std::abs(logs[i]), bound};
        }
    }

    Search search{logs, bound, tolerance, {}, std::vector<std::int64_t>(m, 0), {},
                  std::numeric_limits<double>::infinity()};
    search.suffix_reach.assign(m + 1, 0.0);
    for (std::size_t i = m; i-- > 0;)
        search.suffix_reach[i] =
            search.suffix_reach[i + 1] + static_cast<double>(bound) * std::abs(logs[i]);
    search.run(0, 0.0, true);

    if (search.best <= tolerance)
        return RelationReport{RelationVerdict::Dependent, search.best_relation, search.best,
                              bound};
    return RelationReport{RelationVerdict::IndependentUpToBound, std::nullopt, search.best,
                          bound};
}

RelationReport check_exact_independence(std::span<const ExactEigenvalue> values) {
    if (values.empty())
        throw Error("independence check: empty value list");
    const std::size_t m = values.size();

    std::map<long long, std::size_t> prime_column;
    std::vector<std::map<long long, long long>> base_factors(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (values[i].base > 1'000'000'000LL)
            throw BaseTooLargeError("base " + std::to_string(values[i].base) +
                                    " exceeds the factorization budget");
        if (values[i].base < 2 || values[i].den <= 0)
            throw Error("exact independence: malformed exact form");
        base_factors[i] = factorize(values[i].base);
        for (const auto& [p, e] : base_factors[i])
            prime_column.emplace(p, prime_column.size());
    }

    // Row i holds the prime-exponent vector of log|value_i| (in units of the
    // log-primes): (num/den) * e_p(base).
    const std::size_t cols = prime_column.size();
    std::vector<std::vector<Frac>> rows(m, std::vector<Frac>(cols, Frac{0, 1}));
    for (std::size_t i = 0; i < m; ++i) {
        const Frac q = Frac::of(values[i].num, values[i].den);
        for (const auto& [p, e] : base_factors[i])
            rows[i][prime_column[p]] = mul(q, Frac::of(e, 1));
    }

    // Gaussian elimination with a tracking matrix: a row of the exponent
    // matrix that reduces to zero yields the rational combination directly.
    std::vector<std::vector<Frac>> track(m, std::vector<Frac>(m, Frac{0, 1}));
    for (std::size_t i = 0; i < m; ++i)
        track[i][i] = Frac{1, 1};

    std::vector<bool> used(m, false);
    std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i) {
        // Eliminate already-pivoted columns from row i.
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[i][c].zero() || pivot_row_of_col[c] == SIZE_MAX)
                continue;
            const std::size_t r = pivot_row_of_col[c];
            const Frac factor = div(rows[i][c], rows[r][c]);
            for (std::size_t cc = 0; cc < cols; ++cc)
                rows[i][cc] = add(rows[i][cc], neg(mul(factor, rows[r][cc])));
            for (std::size_t t = 0; t < m; ++t)
                track[i][t] = add(track[i][t], neg(mul(factor, track[r][t])));
        }
        bool zero_row = true;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!rows[i][c].zero()) {
                pivot_row_of_col[c] = i;
                zero_row = false;
                break;
            }
        }
        if (zero_row) {
            std::vector<Frac> coeffs(m);
            for (std::size_t t = 0; t < m; ++t)
                coeffs[t] = track[i][t];
            std::vector<std::int64_t> witness = integer_witness(coeffs);
            double residual = 0.0;
            for (std::size_t t = 0; t < m; ++t)
                residual += static_cast<double>(witness[t]) * values[t].log_modulus();
            std::int64_t max_coeff = 1;
            for (auto v : witness)
                max_coeff = std::max(max_coeff, std::abs(v));
            return RelationReport{RelationVerdict::Dependent, std::move(witness),
                                  std::abs(residual), max_coeff};
        }
        used[i] = true;
    }
    return RelationReport{RelationVerdict::ExactlyIndependent, std::nullopt, 0.0, 0};
}

CoordinateIndependence best_coordinate_independence(const OperatorSpec& spec,
                                                    const DiagonalizedFamily& family,
                                                    std::int64_t bound, double tolerance) {
    const int d = spec.dimension();
    const double tau = spec.tolerances().eigenvalue_match;

    auto strength = [](const RelationReport& r) {
        switch (r.verdict) {
        case RelationVerdict::ExactlyIndependent: return 2;
        case RelationVerdict::IndependentUpToBound: return 1;
        case RelationVerdict::Dependent: return 0;
        }
        return 0;
    };

    CoordinateIndependence best;
    for (int nu = 0; nu < d; ++nu) {
        // Prefer the exact path; it needs an exact form matching a_nu(k)
        // for every entry.
        std::vector<ExactEigenvalue> exact;
        bool all_exact = true;
        for (std::size_t k = 0; k < spec.size() && all_exact; ++k) {
            const auto& entry = spec.entries()[k];
            const double a = family.eigen_tuples[k](nu);
            if (!entry.exact_eigenvalues) {
                all_exact = false;
                break;
            }
            bool found = false;
            for (const auto& e : *entry.exact_eigenvalues) {
                if (std::abs(e.value() - a) <= tau * (1.0 + std::abs(a))) {
                    exact.push_back(e);
                    found = true;
                    break;
                }
            }
            all_exact = found;
        }

        RelationReport report;
        if (all_exact) {
            report = check_exact_independence(exact);
        } else {
            std::vector<double> moduli(spec.size());
            for (std::size_t k = 0; k < spec.size(); ++k)
                moduli[k] = std::abs(family.eigen_tuples[k](nu));
            report = check_log_independence(moduli, bound, tolerance);
        }

        if (best.coordinate < 0 || strength(report) > strength(best.report)) {
            best.coordinate = nu;
            best.report = std::move(report);
        }
        if (best.report.verdict == RelationVerdict::ExactlyIndependent)
            break;
    }
    return best;
}

} // namespace hausdorff
