#pragma once

#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

// Enumeration of the 2^d open hyperoctants of R^d by their sign vectors,
// with the antipodal pairing U_{2^{d-1}+j} = -U_j baked in: the block
// structure of the matrix symbol for sign-definite and scalar-dilation
// families depends on exactly this pairing.
class OctantScheme {
public:
    // signs[j] = (+1, b_2, ..., b_d) for j < 2^{d-1}, with (b_2,...,b_d) the
    // binary expansion of j (bit i -> coordinate 2+i, 0 -> +1, 1 -> -1);
    // signs[2^{d-1}+j] = -signs[j].
    static OctantScheme standard(int dimension);

    // Any enumeration that satisfies the antipodal law; validated.
    OctantScheme(int dimension, std::vector<std::vector<int>> signs);

    int dimension() const { return dimension_; }
    int count() const { return static_cast<int>(signs_.size()); }
    const std::vector<int>& sign(int j) const { return signs_[j]; }

    // Unique e with e ⊙ U_i = U_j: componentwise product of the sign vectors.
    std::vector<int> transition(int i, int j) const;

private:
    int dimension_;
    std::vector<std::vector<int>> signs_;
};

} // namespace hausdorff
