#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hausdorff/operator_spec.hpp"
#include "hausdorff/symbols.hpp"

namespace hausdorff {

// Closed-form bound on the dropped tail of a truncation:
// sum_{|k| > n} |c(k)| / sqrt|det A(k)|. Nonincreasing in n and -> 0.
struct TruncationBound {
    int order = 0;
    double bound = 0.0;
};

// An infinite coefficient family, represented by the entries it can
// materialize up to a truncation order plus an exact tail-bound formula.
class FamilyGenerator {
public:
    virtual ~FamilyGenerator() = default;
    virtual std::string name() const = 0;
    virtual int dimension() const = 0;
    // All entries with |k| <= order.
    virtual std::vector<ScaleEntry> entries_up_to(int order) const = 0;
    // Exact closed-form majorant of the tail past `order`; throws
    // NoTailFormulaError when the family cannot bound its tail.
    virtual double tail_bound(int order) const = 0;
};

// c(k) = 2^{-k}, A(k) = [p_k] (k-th prime) for k >= 1, d = 1. Entries carry
// exact eigenvalue forms (base p_k), so truncations are exactly independent.
// Tail: sum_{k>n} 2^{-k} p_k^{-1/2} <= 2^{-n} / sqrt(p_{n+1}).
class GeometricPrimeFamily : public FamilyGenerator {
public:
    std::string name() const override { return "geometric-prime"; }
    int dimension() const override { return 1; }
    std::vector<ScaleEntry> entries_up_to(int order) const override;
    double tail_bound(int order) const override;
};

// A finite stock of explicit entries plus a geometric majorant C * ratio^n
// for everything beyond the stock. The tail bound at order n is the dropped
// stocked mass plus the majorant; C = 0 describes a finite family exactly.
class CustomTailFamily : public FamilyGenerator {
public:
    CustomTailFamily(int dimension, std::vector<ScaleEntry> entries,
                     double tail_coefficient, double tail_ratio);

    std::string name() const override { return "custom-tail"; }
    int dimension() const override { return dimension_; }
    std::vector<ScaleEntry> entries_up_to(int order) const override;
    double tail_bound(int order) const override;

private:
    int dimension_;
    std::vector<ScaleEntry> entries_;
    double coefficient_;
    double ratio_;
};

// Validated truncation H^{(n)}: all entries with |k| <= order.
OperatorSpec truncate_family(const FamilyGenerator& family, int order);

// Symbol of the truncation at one frequency.
SymbolEvaluation truncated_symbol(const FamilyGenerator& family, int order,
                                  const RealVector& s);

TruncationBound tail_bound(const FamilyGenerator& family, int order);

// First n primes (2, 3, 5, ...).
std::vector<std::int64_t> first_primes(int n);

} // namespace hausdorff
