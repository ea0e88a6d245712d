#include "hausdorff/family.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace hausdorff {

std::vector<std::int64_t> first_primes(int n) {
    std::vector<std::int64_t> primes;
    primes.reserve(static_cast<std::size_t>(std::max(0, n)));
    std::int64_t candidate = 2;
    while (static_cast<int>(primes.size()) < n) {
        bool is_prime = true;
        for (std::int64_t p : primes) {
            if (p * p > candidate)
                break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime)
            primes.push_back(candidate);
        candidate += (candidate == 2 ? 1 : 2);
    }
    return primes;
}

std::vector<ScaleEntry> GeometricPrimeFamily::entries_up_to(int order) const {
    if (order < 1)
        throw Error("geometric-prime family: truncation order must be >= 1");
    const std::vector<std::int64_t> primes = first_primes(order);
    std::vector<ScaleEntry> entries;
    entries.reserve(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) {
        ScaleEntry e;
        e.index = k;
        e.coefficient = Complex(std::pow(2.0, -static_cast<double>(k)), 0.0);
        e.matrix = RealMatrix::Constant(1, 1, static_cast<double>(primes[k - 1]));
        e.exact_eigenvalues = std::vector<ExactEigenvalue>{
            ExactEigenvalue{1, primes[k - 1], 1, 1}};
        entries.push_back(std::move(e));
    }
    return entries;
}

double GeometricPrimeFamily::tail_bound(int order) const {
    if (order < 1)
        throw Error("geometric-prime family: truncation order must be >= 1");
    // sum_{k>n} 2^{-k} p_k^{-1/2} <= p_{n+1}^{-1/2} sum_{k>n} 2^{-k}
    //                              = 2^{-n} / sqrt(p_{n+1}).
    const std::vector<std::int64_t> primes = first_primes(order + 1);
    return std::pow(2.0, -static_cast<double>(order)) /
           std::sqrt(static_cast<double>(primes[order]));
}

CustomTailFamily::CustomTailFamily(int dimension, std::vector<ScaleEntry> entries,
                                   double tail_coefficient, double tail_ratio)
    : dimension_(dimension), entries_(std::move(entries)),
      coefficient_(tail_coefficient), ratio_(tail_ratio) {
    if (!(coefficient_ >= 0.0) || !(ratio_ > 0.0) || !(ratio_ < 1.0))
        throw NoTailFormulaError(
            "custom-tail family needs coefficient >= 0 and ratio in (0,1)");
}

std::vector<ScaleEntry> CustomTailFamily::entries_up_to(int order) const {
    std::vector<ScaleEntry> out;
    for (const auto& e : entries_)
        if (std::abs(e.index) <= order)
            out.push_back(e);
    if (out.empty())
        throw Error("custom-tail family: no entries with |k| <= " + std::to_string(order));
    return out;
}

double CustomTailFamily::tail_bound(int order) const {
    // Stocked entries dropped by the truncation, plus the geometric majorant
    // for everything beyond the stock. coefficient 0 describes a finite
    // family exactly, with a tail of 0 past its support.
    double dropped = 0.0;
    for (const auto& e : entries_)
        if (std::abs(e.index) > order)
            dropped +=
                std::abs(e.coefficient) / std::sqrt(std::abs(e.matrix.determinant()));
    return dropped + coefficient_ * std::pow(ratio_, order);
}

OperatorSpec truncate_family(const FamilyGenerator& family, int order) {
    return OperatorSpec::validate(family.dimension(), family.entries_up_to(order));
}

SymbolEvaluation truncated_symbol(const FamilyGenerator& family, int order,
                                  const RealVector& s) {
    const OperatorSpec spec = truncate_family(family, order);
    SymbolTable table(spec);
    return table.evaluate(s);
}

TruncationBound tail_bound(const FamilyGenerator& family, int order) {
    return TruncationBound{order, family.tail_bound(order)};
}

} // namespace hausdorff
