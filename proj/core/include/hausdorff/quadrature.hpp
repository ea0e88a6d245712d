#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

// Axis-aligned box in R^d.
struct Box {
    std::vector<std::pair<double, double>> axes;

    int dimension() const { return static_cast<int>(axes.size()); }
    static Box cube(int dimension, double lo, double hi);
};

struct QuadraturePlan {
    int points_per_panel = 24;
    double relative_tolerance = 1e-8;
    double absolute_floor = 1e-14;
    int max_refinements = 12;
    // 1-d segments with lo > 0 and hi/lo above this are integrated in log
    // coordinates (substitution x = e^u), which tames power-law integrands.
    double log_scale_ratio = 1e3;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::vector<double>& gauss_legendre_nodes(int n);
const std::vector<double>& gauss_legendre_weights(int n);

// Tensor-product Gauss-Legendre with panel bisection until two successive
// refinements agree to the plan's relative tolerance. `axis_breakpoints`
// (optional, per axis) pin panel edges at integrand kinks/jumps.
QuadratureResult integrate(const std::function<double(const RealVector&)>& f, const Box& box,
                           const QuadraturePlan& plan = {},
                           std::span<const std::vector<double>> axis_breakpoints = {});

} // namespace hausdorff
