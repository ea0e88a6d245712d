#include "hausdorff/symbols.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hausdorff {

double norm_bound(const OperatorSpec& spec, double p) {
    if (!(p >= 1.0))
        throw Error("norm bound requires p in [1, infinity]");
    const bool infinite = std::isinf(p);
    double sum = 0.0;
    for (const auto& e : spec.entries()) {
        const double det = std::abs(e.matrix.determinant());
        sum += std::abs(e.coefficient) * (infinite ? 1.0 : std::pow(det, -1.0 / p));
    }
    return sum;
}

SymbolTable::SymbolTable(const OperatorSpec& spec, const DiagonalizedFamily& family,
                         const OctantScheme& octants)
    : dimension_(spec.dimension()),
      matrix_size_(1 << spec.dimension()),
      n2_(spec.n2()),
      scalar_dilation_(is_scalar_dilation(family)) {
    const std::size_t m = spec.size();
    weights_.resize(m);
    log_vectors_.resize(m);
    dilation_signs_.assign(m, 1);
    for (std::size_t k = 0; k < m; ++k) {
        const RealVector& a = family.eigen_tuples[k];
        double log_det = 0.0;
        RealVector lv(dimension_);
        for (int l = 0; l < dimension_; ++l) {
            const double mod = std::abs(a(l));
            log_det += std::log(mod);
            lv(l) = std::log(mod);
        }
        weights_[k] = spec.entries()[k].coefficient * std::exp(-0.5 * log_det);
        log_vectors_[k] = std::move(lv);
        dilation_signs_[k] = family.sign_patterns[k][0];
    }

    const OmegaPartition omega = build_omega(family, octants);
    cells_.resize(static_cast<std::size_t>(matrix_size_) * matrix_size_);
    for (int i = 0; i < matrix_size_; ++i)
        for (int j = 0; j < matrix_size_; ++j)
            cells_[static_cast<std::size_t>(i) * matrix_size_ + j] = omega.cell(i, j);
}

std::vector<Complex> SymbolTable::phases(const RealVector& s) const {
    std::vector<Complex> out(weights_.size());
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        const double phase = -s.dot(log_vectors_[k]);
        out[k] = Complex(std::cos(phase), std::sin(phase));
    }
    return out;
}

Complex SymbolTable::scalar(const RealVector& s) const {
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        const double phase = -s.dot(log_vectors_[k]);
        sum += weights_[k] * Complex(std::cos(phase), std::sin(phase));
    }
    return sum;
}

Complex SymbolTable::conjugate_scalar(const RealVector& s) const {
    if (!scalar_dilation_)
        throw NotScalarDilationError();
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        const double phase = -s.dot(log_vectors_[k]);
        sum += static_cast<double>(dilation_signs_[k]) * weights_[k] *
               Complex(std::cos(phase), std::sin(phase));
    }
    return sum;
}

ComplexMatrix SymbolTable::assemble(std::span<const Complex> factors) const {
    ComplexMatrix out = ComplexMatrix::Zero(matrix_size_, matrix_size_);
    for (int i = 0; i < matrix_size_; ++i) {
        for (int j = 0; j < matrix_size_; ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t k : cells_[static_cast<std::size_t>(i) * matrix_size_ + j])
                sum += weights_[k] * factors[k];
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix SymbolTable::matrix(const RealVector& s) const {
    const std::vector<Complex> f = phases(s);
    return assemble(f);
}

ComplexMatrix SymbolTable::torus_matrix(std::span<const Complex> t) const {
    if (t.size() != weights_.size())
        throw Error("torus point has wrong number of coordinates");
    return assemble(t);
}

SymbolEvaluation SymbolTable::evaluate(const RealVector& s) const {
    SymbolEvaluation ev;
    ev.frequency = s;
    ev.matrix = matrix(s);
    ev.scalar = scalar(s);
    if (scalar_dilation_)
        ev.conjugate_scalar = conjugate_scalar(s);
    return ev;
}

double SymbolTable::matrix_norm(const RealVector& s) const {
    const ComplexMatrix m = matrix(s);
    if (matrix_size_ == 2) {
        // Largest singular value of a 2x2 complex symmetric matrix, from the
        // eigenvalues of M* M.
        const Complex a = m(0, 0), b = m(0, 1), d = m(1, 1);
        const double tr = std::norm(a) + 2.0 * std::norm(b) + std::norm(d);
        const double det = std::norm(a * d - b * b);
        const double disc = std::max(0.0, tr * tr / 4.0 - det);
        return std::sqrt(std::max(0.0, tr / 2.0 + std::sqrt(disc)));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

Complex scalar_symbol(const SymbolTable& table, const RealVector& s) {
    return table.scalar(s);
}

Complex conjugate_scalar_symbol(const SymbolTable& table, const RealVector& s) {
    return table.conjugate_scalar(s);
}

SymbolEvaluation matrix_symbol(const SymbolTable& table, const RealVector& s) {
    return table.evaluate(s);
}

std::vector<Complex> matrix_eigenvalues(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 1)
        return {m(0, 0)};
    if (n == 2) {
        const Complex tr = m(0, 0) + m(1, 1);
        const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const Complex disc = std::sqrt(tr * tr - 4.0 * det);
        return {0.5 * (tr + disc), 0.5 * (tr - disc)};
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, /*computeEigenvectors=*/false);
    std::vector<Complex> out(n);
    for (Eigen::Index i = 0; i < n; ++i)
        out[i] = es.eigenvalues()(i);
    return out;
}

} // namespace hausdorff
