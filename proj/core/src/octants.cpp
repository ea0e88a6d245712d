#include "hausdorff/octants.hpp"

#include <set>
#include <string>

namespace hausdorff {

OctantScheme OctantScheme::standard(int dimension) {
    if (dimension < 1 || dimension > 16)
        throw Error("octant scheme: dimension must be in [1, 16]");
    const int half = 1 << (dimension - 1);
    std::vector<std::vector<int>> signs(2 * half, std::vector<int>(dimension, 1));
    for (int j = 0; j < half; ++j) {
        for (int bit = 0; bit + 1 < dimension; ++bit)
            signs[j][bit + 1] = ((j >> bit) & 1) ? -1 : 1;
        for (int l = 0; l < dimension; ++l)
            signs[half + j][l] = -signs[j][l];
    }
    return OctantScheme(dimension, std::move(signs));
}

OctantScheme::OctantScheme(int dimension, std::vector<std::vector<int>> signs)
    : dimension_(dimension), signs_(std::move(signs)) {
    const std::size_t n = std::size_t{1} << dimension;
    if (signs_.size() != n)
        throw Error("octant scheme: expected " + std::to_string(n) + " sign vectors");
    std::set<std::vector<int>> seen;
    for (const auto& s : signs_) {
        if (s.size() != static_cast<std::size_t>(dimension))
            throw Error("octant scheme: sign vector of wrong length");
        for (int v : s)
            if (v != 1 && v != -1)
                throw Error("octant scheme: sign entries must be -1 or +1");
        if (!seen.insert(s).second)
            throw Error("octant scheme: duplicate sign vector");
    }
    const std::size_t half = n / 2;
    for (std::size_t j = 0; j < half; ++j)
        for (int l = 0; l < dimension; ++l)
            if (signs_[half + j][l] != -signs_[j][l])
                throw Error("octant scheme: antipodal law violated at index " +
                            std::to_string(j));
}

std::vector<int> OctantScheme::transition(int i, int j) const {
    std::vector<int> e(dimension_);
    for (int l = 0; l < dimension_; ++l)
        e[l] = signs_[i][l] * signs_[j][l];
    return e;
}

} // namespace hausdorff
