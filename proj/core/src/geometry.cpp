#include "hausdorff/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hausdorff {

PlanarCloudIndex::PlanarCloudIndex(std::span<const Complex> points) {
    if (points.empty())
        throw EmptySetError();
    const std::size_t n = points.size();
    points_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        points_[i] = Point{points[i].real(), points[i].imag(),
                           static_cast<std::uint32_t>(i)};
    nodes_.reserve(n / 8 + 2);
    build(0, static_cast<std::uint32_t>(n));
}

std::uint32_t PlanarCloudIndex::build(std::uint32_t lo, std::uint32_t hi) {
    double xmin = points_[lo].x, xmax = xmin, ymin = points_[lo].y, ymax = ymin;
    for (std::uint32_t i = lo + 1; i < hi; ++i) {
        xmin = std::min(xmin, points_[i].x);
        xmax = std::max(xmax, points_[i].x);
        ymin = std::min(ymin, points_[i].y);
        ymax = std::max(ymax, points_[i].y);
    }
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{xmin, xmax, ymin, ymax, lo, hi, 0, 0});
    constexpr std::uint32_t bucket = 16;
    if (hi - lo <= bucket)
        return id;
    const bool split_x = (xmax - xmin) >= (ymax - ymin);
    const std::uint32_t mid = lo + (hi - lo) / 2;
    std::nth_element(points_.begin() + lo, points_.begin() + mid, points_.begin() + hi,
                     [split_x](const Point& a, const Point& b) {
                         return split_x ? a.x < b.x : a.y < b.y;
                     });
    nodes_[id].begin = nodes_[id].end = 0; // internal
    const std::uint32_t left = build(lo, mid);
    const std::uint32_t right = build(mid, hi);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void PlanarCloudIndex::visit(std::uint32_t node, double qx, double qy,
                             std::ptrdiff_t exclude, double& best2) const {
    const Node& n = nodes_[node];
    // Bounding-box pruning is what keeps far-field queries cheap on
    // curve-like clouds; the splitting plane alone degenerates there.
    const double gx = std::max({n.xmin - qx, qx - n.xmax, 0.0});
    const double gy = std::max({n.ymin - qy, qy - n.ymax, 0.0});
    if (gx * gx + gy * gy >= best2)
        return;
    if (n.end > n.begin) {
        for (std::uint32_t i = n.begin; i < n.end; ++i) {
            const Point& p = points_[i];
            if (static_cast<std::ptrdiff_t>(p.index) == exclude)
                continue;
            const double dx = p.x - qx;
            const double dy = p.y - qy;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best2)
                best2 = d2;
        }
        return;
    }
    const Node& l = nodes_[n.left];
    const Node& r = nodes_[n.right];
    const double lx = std::max({l.xmin - qx, qx - l.xmax, 0.0});
    const double ly = std::max({l.ymin - qy, qy - l.ymax, 0.0});
    const double rx = std::max({r.xmin - qx, qx - r.xmax, 0.0});
    const double ry = std::max({r.ymin - qy, qy - r.ymax, 0.0});
    if (lx * lx + ly * ly <= rx * rx + ry * ry) {
        visit(n.left, qx, qy, exclude, best2);
        visit(n.right, qx, qy, exclude, best2);
    } else {
        visit(n.right, qx, qy, exclude, best2);
        visit(n.left, qx, qy, exclude, best2);
    }
}

double PlanarCloudIndex::nearest_distance(Complex q, std::ptrdiff_t exclude) const {
    double best2 = std::numeric_limits<double>::infinity();
    visit(0, q.real(), q.imag(), exclude, best2);
    return std::sqrt(best2);
}

std::vector<Complex> PlanarCloudIndex::spatial_order() const {
    std::vector<Complex> out;
    out.reserve(points_.size());
    for (const Point& p : points_)
        out.push_back(Complex(p.x, p.y));
    return out;
}

double PlanarCloudIndex::max_neighbor_gap() const {
    double worst2 = 0.0;
    for (const Point& p : points_) {
        double best2 = std::numeric_limits<double>::infinity();
        visit(0, p.x, p.y, static_cast<std::ptrdiff_t>(p.index), best2);
        worst2 = std::max(worst2, best2);
    }
    return std::sqrt(worst2);
}

double hausdorff_distance(std::span<const Complex> x, std::span<const Complex> y) {
    if (x.empty() || y.empty())
        throw EmptySetError();
    const PlanarCloudIndex ix(x);
    const PlanarCloudIndex iy(y);
    double sup = 0.0;
    for (const Complex& p : ix.spatial_order())
        sup = std::max(sup, iy.nearest_distance(p));
    for (const Complex& p : iy.spatial_order())
        sup = std::max(sup, ix.nearest_distance(p));
    return sup;
}

double max_nearest_neighbor_gap(std::span<const Complex> points) {
    if (points.size() < 2)
        return 0.0;
    return PlanarCloudIndex(points).max_neighbor_gap();
}

bool empirically_connected(std::span<const Complex> points, double radius, std::size_t cap) {
    if (points.empty())
        throw EmptySetError();
    std::vector<Complex> sample;
    const std::size_t stride = points.size() > cap ? (points.size() + cap - 1) / cap : 1;
    for (std::size_t i = 0; i < points.size(); i += stride)
        sample.push_back(points[i]);

    const std::size_t n = sample.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };

    // Quadratic linking is fine at the cap size.
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = sample[i].real() - sample[j].real();
            const double dy = sample[i].imag() - sample[j].imag();
            if (dx * dx + dy * dy <= r2) {
                const std::size_t a = find(i), b = find(j);
                if (a != b)
                    parent[a] = b;
            }
        }
    }
    const std::size_t root = find(0);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != root)
            return false;
    return true;
}

} // namespace hausdorff
