#include "hausdorff/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hausdorff {

Box Box::cube(int dimension, double lo, double hi) {
    Box b;
    b.axes.assign(static_cast<std::size_t>(dimension), {lo, hi});
    return b;
}

namespace {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Newton iteration on P_n with the Chebyshev initial guess.
Rule compute_rule(int n) {
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const Rule& cached_rule(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

struct AxisPanels {
    // Panel edges, in either linear or log coordinates.
    std::vector<double> edges;
    bool log_scale = false;
};

AxisPanels build_axis(double lo, double hi, std::span<const double> breakpoints,
                      double log_ratio) {
    std::vector<double> edges{lo, hi};
    for (double b : breakpoints)
        if (b > lo && b < hi)
            edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double a, double b) {
                                return std::abs(a - b) <= 1e-14 * (1.0 + std::abs(b));
                            }),
                edges.end());

    AxisPanels panels;
    if (lo > 0.0 && hi / lo >= log_ratio) {
        panels.log_scale = true;
        for (double e : edges)
            panels.edges.push_back(std::log(e));
    } else {
        panels.edges = std::move(edges);
    }
    return panels;
}

// Sum the rule over every panel, each split into 2^level subpanels.
double pass_value(const std::function<double(const RealVector&)>& f,
                  const std::vector<AxisPanels>& axes, int level, int points) {
    const Rule& rule = cached_rule(points);
    const int d = static_cast<int>(axes.size());
    const int splits = 1 << level;

    // Per-axis list of (node position, weight) across all subpanels.
    std::vector<std::vector<std::pair<double, double>>> grid(d);
    for (int a = 0; a < d; ++a) {
        for (std::size_t p = 0; p + 1 < axes[a].edges.size(); ++p) {
            const double p_lo = axes[a].edges[p];
            const double p_hi = axes[a].edges[p + 1];
            const double h = (p_hi - p_lo) / splits;
            for (int s = 0; s < splits; ++s) {
                const double s_lo = p_lo + s * h;
                const double mid = s_lo + 0.5 * h;
                const double half = 0.5 * h;
                for (int i = 0; i < points; ++i)
                    grid[a].push_back({mid + half * rule.nodes[i], half * rule.weights[i]});
            }
        }
    }

    RealVector x(d);
    double total = 0.0;
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
        double w = 1.0;
        for (int a = 0; a < d; ++a) {
            const auto& [pos, weight] = grid[a][idx[a]];
            if (axes[a].log_scale) {
                x(a) = std::exp(pos);
                w *= weight * x(a);
            } else {
                x(a) = pos;
                w *= weight;
            }
        }
        total += w * f(x);

        std::size_t a = 0;
        for (; a < static_cast<std::size_t>(d); ++a) {
            if (++idx[a] < grid[a].size())
                break;
            idx[a] = 0;
        }
        if (a == static_cast<std::size_t>(d))
            break;
    }
    return total;
}

} // namespace

const std::vector<double>& gauss_legendre_nodes(int n) { return cached_rule(n).nodes; }
const std::vector<double>& gauss_legendre_weights(int n) { return cached_rule(n).weights; }

QuadratureResult integrate(const std::function<double(const RealVector&)>& f, const Box& box,
                           const QuadraturePlan& plan,
                           std::span<const std::vector<double>> axis_breakpoints) {
    if (box.axes.empty())
        throw Error("quadrature box must have at least one axis");
    std::vector<AxisPanels> axes;
    axes.reserve(box.axes.size());
    for (std::size_t a = 0; a < box.axes.size(); ++a) {
        const auto [lo, hi] = box.axes[a];
        if (!(hi > lo))
            throw Error("quadrature box axis has nonpositive width");
        const std::span<const double> bps =
            a < axis_breakpoints.size() ? std::span<const double>(axis_breakpoints[a])
                                        : std::span<const double>{};
        axes.push_back(build_axis(lo, hi, bps, plan.log_scale_ratio));
    }

    double prev = pass_value(f, axes, 0, plan.points_per_panel);
    for (int level = 1; level <= plan.max_refinements; ++level) {
        const double curr = pass_value(f, axes, level, plan.points_per_panel);
        const double delta = std::abs(curr - prev);
        if (delta <= plan.relative_tolerance * std::abs(curr) + plan.absolute_floor)
            return QuadratureResult{curr, delta};
        prev = curr;
    }
    return QuadratureResult{prev, std::abs(prev) * plan.relative_tolerance * 10.0};
}

} // namespace hausdorff
