#include "hausdorff/action.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace hausdorff {

Complex apply_at(const OperatorSpec& spec, const TestFunction& f, const RealVector& x) {
    Complex sum{0.0, 0.0};
    for (const auto& e : spec.entries())
        sum += e.coefficient * f(e.matrix * x);
    return sum;
}

std::vector<Complex> apply(const OperatorSpec& spec, const TestFunction& f,
                           std::span<const RealVector> points) {
    std::vector<Complex> out;
    out.reserve(points.size());
    for (const RealVector& x : points)
        out.push_back(apply_at(spec, f, x));
    return out;
}

TestFunction applied(const OperatorSpec& spec, const TestFunction& f) {
    std::vector<std::vector<double>> breakpoints(static_cast<std::size_t>(f.dimension()));
    if (f.dimension() == 1 && !f.breakpoints().empty()) {
        for (double b : f.breakpoints().front())
            for (const auto& e : spec.entries())
                breakpoints.front().push_back(b / e.matrix(0, 0));
        std::sort(breakpoints.front().begin(), breakpoints.front().end());
    }
    // Copying the spec and function into the closure keeps the result
    // self-contained (callers may outlive their arguments).
    return TestFunction::custom(
        f.dimension(),
        [spec, f](const RealVector& x) { return apply_at(spec, f, x); },
        "applied(" + f.label() + ")", std::move(breakpoints));
}

Box operator_box(const OperatorSpec& spec, const TestFunction& f, double sigmas) {
    Box box = f.natural_box(sigmas);
    const int d = spec.dimension();
    Box out = box;
    for (const auto& e : spec.entries()) {
        // supp f(A .) = A^{-1} supp f; bound it by the ball image.
        const RealMatrix inv = e.matrix.inverse();
        RealVector center(d), half(d);
        for (int a = 0; a < d; ++a) {
            center(a) = 0.5 * (box.axes[a].first + box.axes[a].second);
            half(a) = 0.5 * (box.axes[a].second - box.axes[a].first);
        }
        const RealVector mapped_center = inv * center;
        const double radius = half.norm();
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (e.matrix + e.matrix.transpose()));
        const double sigma_min = es.eigenvalues().cwiseAbs().minCoeff();
        const double mapped_radius = radius / std::max(sigma_min, 1e-300);
        for (int a = 0; a < d; ++a) {
            out.axes[a].first = std::min(out.axes[a].first, mapped_center(a) - mapped_radius);
            out.axes[a].second = std::max(out.axes[a].second, mapped_center(a) + mapped_radius);
        }
    }
    return out;
}

namespace {

void check_box(const TestFunction& f, const Box& box) {
    const int d = box.dimension();
    RealVector center(d);
    for (int a = 0; a < d; ++a)
        center(a) = 0.5 * (box.axes[a].first + box.axes[a].second);
    const double threshold = 1e-9 * (1.0 + std::abs(f(center)));

    // Probe just outside each face; a visible value means the box cuts the
    // support.
    for (int a = 0; a < d; ++a) {
        for (int side = 0; side < 2; ++side) {
            RealVector x = center;
            const double edge = side == 0 ? box.axes[a].first : box.axes[a].second;
            const double off = 1e-6 * (1.0 + std::abs(edge));
            x(a) = side == 0 ? edge - off : edge + off;
            if (std::abs(f(x)) > threshold)
                throw BoxTooSmallError("test function is " + std::to_string(std::abs(f(x))) +
                                       " just outside the quadrature box");
        }
    }
}

} // namespace

L2Estimate l2_norm(const TestFunction& f, const Box& box, const QuadraturePlan& plan) {
    if (box.dimension() != f.dimension())
        throw Error("quadrature box dimension does not match the function");
    check_box(f, box);
    const QuadratureResult r = integrate(
        [&f](const RealVector& x) { return std::norm(f(x)); }, box, plan, f.breakpoints());
    const double value = std::sqrt(std::max(0.0, r.value));
    const double error = value > 0.0 ? 0.5 * r.error_estimate / value : r.error_estimate;
    return L2Estimate{value, error};
}

L2Estimate l2_norm(const TestFunction& f, const QuadraturePlan& plan) {
    return l2_norm(f, f.natural_box(), plan);
}

RatioExperiment norm_ratio_experiment(const OperatorSpec& spec,
                                      std::span<const TestFunction> functions,
                                      const GridPlan& grid, const QuadraturePlan& quadrature) {
    if (functions.empty())
        throw Error("norm ratio experiment needs at least one function");
    const SymbolTable table(spec);

    RatioExperiment out;
    out.n2 = spec.n2();
    out.sup_symbol_norm = operator_norm_estimate(table, grid);

    for (const TestFunction& f : functions) {
        const L2Estimate nf = l2_norm(f, f.natural_box(), quadrature);
        if (nf.value <= 0.0)
            throw Error("norm ratio experiment needs nonzero functions");
        const TestFunction hf = applied(spec, f);
        const Box hbox = operator_box(spec, f);
        const QuadratureResult hr = integrate(
            [&hf](const RealVector& x) { return std::norm(hf(x)); }, hbox, quadrature,
            hf.breakpoints());
        const double nhf = std::sqrt(std::max(0.0, hr.value));
        out.ratios.push_back(nhf / nf.value);
        out.max_ratio = std::max(out.max_ratio, out.ratios.back());
    }
    return out;
}

SharpnessReport sharpness_experiment(double p, std::span<const double> coefficients,
                                     double t) {
    if (!(p > 1.0) || std::isinf(p))
        throw BadExponentError("sharpness experiment needs p in (1, infinity)");
    if (!(t > 0.0) || !(t < 1.0))
        throw Error("sharpness experiment needs t in (0, 1)");
    for (double c : coefficients)
        if (c < 0.0)
            throw Error("sharpness experiment needs nonnegative coefficients");

    const double q = p / (p - 1.0);
    const double big_l = std::log(1.0 / t);
    const double cutoff = 1.0 / (t * t);

    SharpnessReport report;
    report.p = p;
    report.t = t;

    double j = 0.0;
    double limit = 0.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const auto k = static_cast<std::int64_t>(i) + 1;
        const double kd = static_cast<double>(k);
        double h;
        if (k == 1)
            h = 2.0 * big_l;
        else if (kd <= cutoff)
            h = std::pow(kd, -1.0 / q) * (2.0 * big_l - std::log(kd));
        else
            h = 0.0;
        report.h_values.push_back({k, h});
        j += coefficients[i] * kd * h;
        limit += coefficients[i] * std::pow(kd, 1.0 / p);
    }
    report.ratio = j / (2.0 * big_l);
    report.limit = limit;
    return report;
}

} // namespace hausdorff
