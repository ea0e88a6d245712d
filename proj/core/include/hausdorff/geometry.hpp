#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hausdorff/types.hpp"

namespace hausdorff {

// Bucketed k-d tree nearest-neighbor index over a planar point cloud
// (median split on the wider axis, 16-point leaves, bounding-box pruning).
// Queries are exact and stay cheap whether or not the query point is near
// the cloud.
class PlanarCloudIndex {
public:
    explicit PlanarCloudIndex(std::span<const Complex> points);

    std::size_t size() const { return points_.size(); }

    // Exact distance from q to the nearest indexed point; `exclude` skips one
    // point by its position in the input (for within-cloud neighbor gaps).
    double nearest_distance(Complex q, std::ptrdiff_t exclude = -1) const;

    // The indexed points in tree (leaf-contiguous) order. Querying another
    // index in this order keeps successive tree paths cached.
    std::vector<Complex> spatial_order() const;

    // Largest distance from an indexed point to its nearest neighbor within
    // the same cloud.
    double max_neighbor_gap() const;

private:
    struct Point {
        double x, y;
        std::uint32_t index; // original position
    };
    struct Node {
        double xmin, xmax, ymin, ymax; // subtree bounding box
        std::uint32_t begin, end;      // leaf point range; begin == end inside
        std::uint32_t left, right;     // child node ids (internal nodes)
    };

    std::uint32_t build(std::uint32_t lo, std::uint32_t hi);
    void visit(std::uint32_t node, double qx, double qy, std::ptrdiff_t exclude,
               double& best2) const;

    std::vector<Point> points_; // permuted into tree order
    std::vector<Node> nodes_;
};

// dist_H(X, Y) = max( sup_{x in X} dist(x, Y), sup_{y in Y} dist(y, X) ),
// exact over the finite sets. Throws EmptySetError on an empty input.
double hausdorff_distance(std::span<const Complex> x, std::span<const Complex> y);

// Largest nearest-neighbor distance within one cloud (mesh-size estimate of
// how finely the cloud fills whatever set it samples).
double max_nearest_neighbor_gap(std::span<const Complex> points);

// Single-linkage connectivity at the given radius; diagnostic only.
// Clouds larger than `cap` are strided down first.
bool empirically_connected(std::span<const Complex> points, double radius,
                           std::size_t cap = 4000);

} // namespace hausdorff
