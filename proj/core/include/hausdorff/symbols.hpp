#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hausdorff/diagonalize.hpp"
#include "hausdorff/octants.hpp"
#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

// Symbol values at one frequency s: the 2^d x 2^d matrix symbol Phi(s),
// always; the scalar symbol phi(s), always; the conjugate scalar symbol
// phi*(s) when the operator is a scalar dilation.
struct SymbolEvaluation {
    RealVector frequency;
    ComplexMatrix matrix;
    std::optional<Complex> scalar;
    std::optional<Complex> conjugate_scalar;
};

// N_p(c, A) = sum_k |c(k)| |det A(k)|^{-1/p}; the L^p operator-norm bound.
// p = infinity is accepted and uses exponent 0.
double norm_bound(const OperatorSpec& spec, double p);

// Precomputed evaluator for the symbols of one operator.
//
// With weights w_k = c(k)/sqrt|det A(k)| and log-vectors
// L_k = (log|a_1(k)|, ..., log|a_d(k)|):
//
//   phi(s)     = sum_k w_k e^{-i s.L_k}
//   phi*(s)    = sum_k sgn(a(k)) w_k e^{-i s.L_k}   (scalar dilations)
//   Phi(s)_ij  = sum_{k in Omega_ij} w_k e^{-i s.L_k}
//
// and the torus lift replaces e^{-i s.L_k} by a free unimodular t_k:
//
//   Xi(t)_ij   = sum_{k in Omega_ij} w_k t_k.
//
// Phi is complex symmetric, every entry is bounded by N_2, and for a family
// with positive eigenvalues Phi(s) = phi(s) I.
class SymbolTable {
public:
    SymbolTable(const OperatorSpec& spec, const DiagonalizedFamily& family,
                const OctantScheme& octants);
    SymbolTable(const OperatorSpec& spec, const DiagonalizedFamily& family)
        : SymbolTable(spec, family, family.octants) {}
    explicit SymbolTable(const OperatorSpec& spec)
        : SymbolTable(spec, simultaneous_diagonalize(spec)) {}

    int dimension() const { return dimension_; }
    int matrix_size() const { return matrix_size_; }
    std::size_t term_count() const { return weights_.size(); }
    double n2() const { return n2_; }
    bool scalar_dilation() const { return scalar_dilation_; }

    Complex scalar(const RealVector& s) const;
    Complex conjugate_scalar(const RealVector& s) const; // throws NotScalarDilationError
    ComplexMatrix matrix(const RealVector& s) const;
    ComplexMatrix torus_matrix(std::span<const Complex> t) const;
    SymbolEvaluation evaluate(const RealVector& s) const;

    // Spectral norm ||Phi(s)||: largest singular value. Phi is symmetric but
    // not Hermitian, so singular values, not eigenvalue moduli.
    double matrix_norm(const RealVector& s) const;

    const std::vector<Complex>& weights() const { return weights_; }
    const std::vector<RealVector>& log_vectors() const { return log_vectors_; }
    const std::vector<int>& dilation_signs() const { return dilation_signs_; }

private:
    std::vector<Complex> phases(const RealVector& s) const;
    ComplexMatrix assemble(std::span<const Complex> factors) const;

    int dimension_;
    int matrix_size_;
    double n2_;
    bool scalar_dilation_;
    std::vector<Complex> weights_;
    std::vector<RealVector> log_vectors_;
    std::vector<int> dilation_signs_;           // sgn(a(k)) for scalar dilations
    std::vector<std::vector<std::size_t>> cells_; // row-major omega copy
};

// Free-function forms of the per-frequency evaluations.
Complex scalar_symbol(const SymbolTable& table, const RealVector& s);
Complex conjugate_scalar_symbol(const SymbolTable& table, const RealVector& s);
SymbolEvaluation matrix_symbol(const SymbolTable& table, const RealVector& s);

// Eigenvalues of a complex matrix; 2x2 solved in closed form.
std::vector<Complex> matrix_eigenvalues(const ComplexMatrix& m);

} // namespace hausdorff
