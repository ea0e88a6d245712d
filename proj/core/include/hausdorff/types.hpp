#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hausdorff {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

// Base for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ── model ─────────────────────────────────────────────────────────────────

class NonInvertibleError : public Error {
public:
    NonInvertibleError(std::int64_t k, double det)
        : Error("entry k=" + std::to_string(k) + ": |det A| = " + std::to_string(det) +
                " below invertibility threshold"),
          index(k), determinant(det) {}
    std::int64_t index;
    double determinant;
};

class NonSymmetricError : public Error {
public:
    NonSymmetricError(std::int64_t k, double dev)
        : Error("entry k=" + std::to_string(k) + ": matrix not symmetric, max deviation " +
                std::to_string(dev)),
          index(k), deviation(dev) {}
    std::int64_t index;
    double deviation;
};

class NonCommutingError : public Error {
public:
    NonCommutingError(std::int64_t i, std::int64_t j, double norm)
        : Error("entries k=" + std::to_string(i) + ", k=" + std::to_string(j) +
                " do not commute, commutator max-norm " + std::to_string(norm)),
          first(i), second(j), commutator_norm(norm) {}
    std::int64_t first;
    std::int64_t second;
    double commutator_norm;
};

class DuplicateMatrixError : public Error {
public:
    DuplicateMatrixError(std::int64_t i, std::int64_t j)
        : Error("entries k=" + std::to_string(i) + ", k=" + std::to_string(j) +
                " carry the same matrix"),
          first(i), second(j) {}
    std::int64_t first;
    std::int64_t second;
};

class DegenerateFamilyError : public Error {
public:
    explicit DegenerateFamilyError(double res)
        : Error("joint diagonalization residual " + std::to_string(res) +
                " above tolerance after iteration budget"),
          residual(res) {}
    double residual;
};

// ── arithmetic ────────────────────────────────────────────────────────────

class SearchTooLargeError : public Error {
public:
    using Error::Error;
};

class BaseTooLargeError : public Error {
public:
    using Error::Error;
};

// ── symbols / family ──────────────────────────────────────────────────────

class NotScalarDilationError : public Error {
public:
    NotScalarDilationError() : Error("operator is not of scalar-dilation form") {}
};

class NoTailFormulaError : public Error {
public:
    using Error::Error;
};

// ── spectra ───────────────────────────────────────────────────────────────

class HypothesisNotMetError : public Error {
public:
    using Error::Error;
};

class EmptySetError : public Error {
public:
    EmptySetError() : Error("Hausdorff distance of an empty point set") {}
};

// ── operator action ───────────────────────────────────────────────────────

class BoxTooSmallError : public Error {
public:
    using Error::Error;
};

class BadExponentError : public Error {
public:
    using Error::Error;
};

// ── cli / documents ───────────────────────────────────────────────────────

class UnknownCaseError : public Error {
public:
    explicit UnknownCaseError(const std::string& name)
        : Error("unknown case study: " + name) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& where, const std::string& what)
        : Error(where + ": " + what), location(where) {}
    std::string location;
};

} // namespace hausdorff
