#include <doctest.h>

#include <cmath>
#include <random>

#include "hausdorff/geometry.hpp"

using namespace hausdorff;

namespace {

std::vector<Complex> circle(Complex center, double radius, int n) {
    std::vector<Complex> out;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * pi * i / n;
        out.push_back(center + radius * Complex(std::cos(a), std::sin(a)));
    }
    return out;
}

double brute_hausdorff(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    double sup = 0.0;
    for (const Complex& p : x) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& q : y)
            best = std::min(best, std::abs(p - q));
        sup = std::max(sup, best);
    }
    for (const Complex& q : y) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& p : x)
            best = std::min(best, std::abs(q - p));
        sup = std::max(sup, best);
    }
    return sup;
}

} // namespace

TEST_CASE("hausdorff distance basics") {
    const std::vector<Complex> x = {{0, 0}, {1, 1}, {-2, 3}};
    CHECK(hausdorff_distance(x, x) == doctest::Approx(0.0));
    const std::vector<Complex> origin = {{0, 0}};
    const std::vector<Complex> three = {{3, 0}};
    CHECK(hausdorff_distance(origin, three) == doctest::Approx(3.0));
    CHECK_THROWS_AS(hausdorff_distance({}, three), EmptySetError);
}

TEST_CASE("concentric circles are one radius apart") {
    const auto inner = circle({0, 0}, 1.0, 1000);
    const auto outer = circle({0, 0}, 2.0, 1000);
    const double d = hausdorff_distance(inner, outer);
    CHECK(d == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("grid index agrees with the quadratic oracle") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Complex> x, y;
        const int nx = 2 + static_cast<int>(rng() % 150);
        const int ny = 2 + static_cast<int>(rng() % 150);
        for (int i = 0; i < nx; ++i)
            x.push_back({coord(rng), coord(rng)});
        for (int i = 0; i < ny; ++i)
            y.push_back({coord(rng), coord(rng)});
        CHECK(hausdorff_distance(x, y) == doctest::Approx(brute_hausdorff(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate clouds") {
    const std::vector<Complex> point = {{2, -1}};
    CHECK(hausdorff_distance(point, point) == doctest::Approx(0.0));
    std::vector<Complex> repeated(100, Complex{1.0, 1.0});
    CHECK(max_nearest_neighbor_gap(repeated) == doctest::Approx(0.0));
    const std::vector<Complex> collinear = {{0, 0}, {1, 0}, {2, 0}, {4, 0}};
    CHECK(max_nearest_neighbor_gap(collinear) == doctest::Approx(2.0));
}

TEST_CASE("nearest-neighbor gap on a unit grid") {
    std::vector<Complex> grid;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            grid.push_back({static_cast<double>(i), static_cast<double>(j)});
    CHECK(max_nearest_neighbor_gap(grid) == doctest::Approx(1.0));
}

TEST_CASE("empirical connectivity") {
    std::vector<Complex> two_blobs;
    for (int i = 0; i < 50; ++i) {
        two_blobs.push_back({0.01 * i, 0.0});
        two_blobs.push_back({10.0 + 0.01 * i, 0.0});
    }
    CHECK(!empirically_connected(two_blobs, 0.5));
    CHECK(empirically_connected(two_blobs, 11.0));
    CHECK(empirically_connected(circle({0, 0}, 1.0, 400), 0.1));
}
