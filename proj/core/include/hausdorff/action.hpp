#pragma once

#include <span>
#include <vector>

#include "hausdorff/operator_spec.hpp"
#include "hausdorff/quadrature.hpp"
#include "hausdorff/spectra.hpp"
#include "hausdorff/test_functions.hpp"

namespace hausdorff {

// Pointwise action (H f)(x) = sum_k c(k) f(A(k) x); exact finite sum from
// the callable, no interpolation.
Complex apply_at(const OperatorSpec& spec, const TestFunction& f, const RealVector& x);
std::vector<Complex> apply(const OperatorSpec& spec, const TestFunction& f,
                           std::span<const RealVector> points);

// H f as a test function (with the image breakpoints of f merged in, for
// one-dimensional piecewise kinds).
TestFunction applied(const OperatorSpec& spec, const TestFunction& f);

// Box containing the significant support of H f: the union of the preimages
// A(k)^{-1}(supp f), padded.
Box operator_box(const OperatorSpec& spec, const TestFunction& f, double sigmas = 10.0);

struct L2Estimate {
    double value = 0.0;
    double error = 0.0;
};

// Quadrature estimate of ||f||_2 over the box. Throws BoxTooSmallError when
// |f| just outside the box is above threshold.
L2Estimate l2_norm(const TestFunction& f, const Box& box, const QuadraturePlan& plan = {});
L2Estimate l2_norm(const TestFunction& f, const QuadraturePlan& plan = {});

struct RatioExperiment {
    double max_ratio = 0.0;        // largest ||H f||_2 / ||f||_2 found
    double sup_symbol_norm = 0.0;  // sup over the frequency grid of ||Phi(s)||
    double n2 = 0.0;
    std::vector<double> ratios;    // one per input function
};

// Measures ||H f||/||f|| for each input; the certificate pair is
// (sup ||Phi||, N_2), which must dominate every ratio.
RatioExperiment norm_ratio_experiment(const OperatorSpec& spec,
                                      std::span<const TestFunction> functions,
                                      const GridPlan& grid = {},
                                      const QuadraturePlan& quadrature = {});

struct SharpnessReport {
    double p = 2.0;
    double t = 0.0;
    double ratio = 0.0;   // J_t / (2 log(1/t))
    double limit = 0.0;   // N_p over the support
    std::vector<std::pair<std::int64_t, double>> h_values; // k -> h_t(k)
};

// Closed-form lower-bound experiment for the reciprocal-dilation family
// a(k) = 1/k with coefficients c(k) >= 0 on k = 1..m:
//   h_t(1) = 2 log(1/t),
//   h_t(k) = k^{-1/q} (2 log(1/t) - log k)   for 1 < k <= 1/t^2,
//   h_t(k) = 0                               for k > 1/t^2,
//   J_t = sum_k c(k) k h_t(k),  ratio = J_t / (2 log(1/t)) -> N_p as t -> 0.
// Throws BadExponentError unless 1 < p < infinity.
SharpnessReport sharpness_experiment(double p, std::span<const double> coefficients, double t);

} // namespace hausdorff
