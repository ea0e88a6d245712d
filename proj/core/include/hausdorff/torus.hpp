#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

// Low-discrepancy points on [0,1)^m: the additive Kronecker sequence
// u_j = frac(offset + j * alpha), with alpha built from the generalized
// golden ratio g_m (the root > 1 of x^{m+1} = x + 1): alpha_i = g_m^{-(i+1)}.
class KroneckerSequence {
public:
    KroneckerSequence(int dimension, std::span<const double> offsets);
    explicit KroneckerSequence(int dimension)
        : KroneckerSequence(dimension, std::vector<double>(dimension, 0.0)) {}

    int dimension() const { return static_cast<int>(alpha_.size()); }

    // j-th point, written into out (size m).
    void point(std::uint64_t j, std::span<double> out) const;

    const std::vector<double>& alpha() const { return alpha_; }

private:
    std::vector<double> alpha_;
    std::vector<double> offset_;
};

// Root > 1 of x^{m+1} = x + 1 (m = 1 gives the golden ratio).
double generalized_golden_ratio(int m);

// Unimodular coordinates t_i = exp(2 pi i u_i).
void unit_circle_lift(std::span<const double> u, std::span<Complex> t);

} // namespace hausdorff
