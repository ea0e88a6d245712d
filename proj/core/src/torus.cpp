#include "hausdorff/torus.hpp"

#include <cmath>

namespace hausdorff {

double generalized_golden_ratio(int m) {
    if (m < 1)
        throw Error("generalized golden ratio needs m >= 1");
    // Newton iteration on x^{m+1} - x - 1; the root lies in (1, 2).
    double x = 1.5;
    for (int it = 0; it < 64; ++it) {
        const double f = std::pow(x, m + 1) - x - 1.0;
        const double df = (m + 1) * std::pow(x, m) - 1.0;
        const double next = x - f / df;
        if (std::abs(next - x) < 1e-16 * x)
            return next;
        x = next;
    }
    return x;
}

KroneckerSequence::KroneckerSequence(int dimension, std::span<const double> offsets) {
    if (dimension < 1)
        throw Error("Kronecker sequence needs dimension >= 1");
    if (offsets.size() != static_cast<std::size_t>(dimension))
        throw Error("Kronecker sequence: offset vector size mismatch");
    const double g = generalized_golden_ratio(dimension);
    alpha_.resize(dimension);
    offset_.assign(offsets.begin(), offsets.end());
    double p = 1.0;
    for (int i = 0; i < dimension; ++i) {
        p /= g;
        alpha_[i] = p;
    }
}

void KroneckerSequence::point(std::uint64_t j, std::span<double> out) const {
    const double jj = static_cast<double>(j);
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        double v = offset_[i] + jj * alpha_[i];
        v -= std::floor(v);
        out[i] = v;
    }
}

void unit_circle_lift(std::span<const double> u, std::span<Complex> t) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double angle = 2.0 * pi * u[i];
        t[i] = Complex(std::cos(angle), std::sin(angle));
    }
}

} // namespace hausdorff
