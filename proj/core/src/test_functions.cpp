#include "hausdorff/test_functions.hpp"

#include <cmath>

namespace hausdorff {

TestFunction TestFunction::gaussian(RealVector center, double width) {
    if (!(width > 0.0))
        throw Error("gaussian width must be positive");
    TestFunction f;
    f.kind_ = Kind::Gaussian;
    f.dimension_ = static_cast<int>(center.size());
    f.label_ = "gaussian";
    f.center_ = center;
    f.width_ = width;
    f.evaluator_ = [center = std::move(center), width](const RealVector& x) {
        return Complex(std::exp(-(x - center).squaredNorm() / (2.0 * width * width)), 0.0);
    };
    return f;
}

TestFunction TestFunction::indicator(Box support) {
    TestFunction f;
    f.kind_ = Kind::Indicator;
    f.dimension_ = support.dimension();
    f.label_ = "indicator";
    f.support_ = support;
    f.breakpoints_.resize(support.axes.size());
    for (std::size_t a = 0; a < support.axes.size(); ++a)
        f.breakpoints_[a] = {support.axes[a].first, support.axes[a].second};
    f.evaluator_ = [support = std::move(support)](const RealVector& x) {
        for (int a = 0; a < support.dimension(); ++a)
            if (x(a) < support.axes[a].first || x(a) > support.axes[a].second)
                return Complex(0.0, 0.0);
        return Complex(1.0, 0.0);
    };
    return f;
}

TestFunction TestFunction::power_cutoff(double exponent, double t) {
    if (!(t > 0.0) || !(t < 1.0))
        throw Error("power cutoff needs t in (0, 1)");
    TestFunction f;
    f.kind_ = Kind::PowerCutoff;
    f.dimension_ = 1;
    f.label_ = "power-cutoff";
    f.exponent_ = exponent;
    f.cutoff_ = t;
    f.breakpoints_ = {{t, 1.0 / t}};
    f.evaluator_ = [exponent, t](const RealVector& x) {
        const double v = x(0);
        if (v <= t || v >= 1.0 / t)
            return Complex(0.0, 0.0);
        return Complex(std::pow(v, -exponent), 0.0);
    };
    return f;
}

TestFunction TestFunction::custom(int dimension, std::function<Complex(const RealVector&)> eval,
                                  std::string label,
                                  std::vector<std::vector<double>> breakpoints) {
    TestFunction f;
    f.kind_ = Kind::Custom;
    f.dimension_ = dimension;
    f.label_ = std::move(label);
    f.evaluator_ = std::move(eval);
    f.breakpoints_ = std::move(breakpoints);
    return f;
}

std::optional<double> TestFunction::exact_lp_norm(double p) const {
    if (!(p >= 1.0))
        return std::nullopt;
    switch (kind_) {
    case Kind::Gaussian: {
        // integral of e^{-p |x-c|^2 / (2 w^2)} = (2 pi w^2 / p)^{d/2}
        const double integral =
            std::pow(2.0 * pi * width_ * width_ / p, 0.5 * dimension_);
        return std::pow(integral, 1.0 / p);
    }
    case Kind::Indicator: {
        double volume = 1.0;
        for (const auto& [lo, hi] : support_.axes)
            volume *= (hi - lo);
        return std::pow(volume, 1.0 / p);
    }
    case Kind::PowerCutoff: {
        // integral of x^{-e p} over (t, 1/t)
        const double ep = exponent_ * p;
        double integral;
        if (std::abs(ep - 1.0) < 1e-14) {
            integral = 2.0 * std::log(1.0 / cutoff_);
        } else {
            const double a = 1.0 - ep;
            integral = (std::pow(1.0 / cutoff_, a) - std::pow(cutoff_, a)) / a;
        }
        return std::pow(integral, 1.0 / p);
    }
    case Kind::Custom:
        return std::nullopt;
    }
    return std::nullopt;
}

Box TestFunction::natural_box(double sigmas) const {
    switch (kind_) {
    case Kind::Gaussian: {
        Box b;
        for (int a = 0; a < dimension_; ++a)
            b.axes.push_back({center_(a) - sigmas * width_, center_(a) + sigmas * width_});
        return b;
    }
    case Kind::Indicator:
        return support_;
    case Kind::PowerCutoff:
        return Box{{{cutoff_, 1.0 / cutoff_}}};
    case Kind::Custom:
        throw Error("custom test function has no natural box; pass one explicitly");
    }
    throw Error("unreachable");
}

} // namespace hausdorff
