#pragma once

#include <cstdint>
#include <vector>

#include "hausdorff/octants.hpp"
#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

// Cells Omega(i,j) = { entry positions k : sgn(a(k)) = sign(i) ⊙ sign(j) }.
// Symmetric in (i,j); for fixed i the nonempty cells partition the entries.
class OmegaPartition {
public:
    OmegaPartition(int octant_count, std::vector<std::vector<std::size_t>> cells)
        : count_(octant_count), cells_(std::move(cells)) {}

    int octant_count() const { return count_; }
    const std::vector<std::size_t>& cell(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * count_ + j];
    }

private:
    int count_;
    std::vector<std::vector<std::size_t>> cells_;
};

// Output of the simultaneous diagonalization of the commuting family:
// one orthogonal C with C^T A(k) C = diag(a(k)) for every k, the eigenvalue
// tuples a(k) in the (deterministic) column order of C, their sign patterns,
// and the Omega partition for the standard octant scheme.
struct DiagonalizedFamily {
    RealMatrix diagonalizer;                     // C, orthogonal
    std::vector<RealVector> eigen_tuples;        // a(k), no zero components
    std::vector<std::vector<int>> sign_patterns; // sgn(a(k)) in {-1,+1}^d
    OctantScheme octants;                        // scheme used for omega
    OmegaPartition omega;
    double residual = 0.0;                       // max off-diagonal after conjugation
};

// Jacobi-style joint off-diagonal minimization over the whole family,
// seeded by the eigendecomposition of a random positive combination
// sum_k w_k A(k); restarts with fresh weights if the residual stays above
// tolerance. Throws DegenerateFamilyError when every restart fails.
//
// Column order: ascending lexicographically by the eigenvalue tuples taken
// in entry order (ties by the next entry), so results are deterministic.
DiagonalizedFamily simultaneous_diagonalize(const OperatorSpec& spec,
                                            std::uint64_t seed = 0);

// Omega cells for an arbitrary (validated) octant scheme.
OmegaPartition build_omega(const DiagonalizedFamily& family, const OctantScheme& octants);

// True when every A(k) is a scalar multiple of the identity.
bool is_scalar_dilation(const DiagonalizedFamily& family);

} // namespace hausdorff
