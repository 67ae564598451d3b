#pragma once
/*
Unit-hypercube context and arm spaces under the max-metric, plus the uniform
grid partition rebuilt at every epoch. A grid cell's radius (half its side)
is known exactly, so the per-epoch radius schedule T_i^(-alpha) is
constructive: cells_per_axis = ceil(1 / (2 * target_radius)) guarantees the
realized radius never exceeds the nominal one.
*/
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cbal {

using Point = std::vector<double>;

// Axis-aligned box [lo, hi], one cell of a partition.
struct Cell {
    Point lo;
    Point hi;
};

// Slots in epoch i under the doubling schedule. Throws std::invalid_argument
// once 2^i leaves the 64-bit range.
std::uint64_t epoch_length(int epoch);

// Target cluster radius for epoch i: (2^i)^(-alpha), alpha in (0,1).
double nominal_radius(int epoch, double alpha);

// Max-metric distance; dimensions must match.
double dist_inf(const Point& a, const Point& b);

// Uniform grid over [0,1]^dimension. Cluster indices are row-major with
// axis 0 as the major axis; coordinate 1.0 maps into the last cell of its
// axis so the grid tiles the closed cube.
class Partition {
public:
    Partition() = default;
    static Partition build(int dimension, double target_radius);

    int dimension() const { return dimension_; }
    int cells_per_axis() const { return cells_per_axis_; }
    std::size_t cluster_count() const { return cluster_count_; }
    // the requested radius; control functions use this, not cell_radius()
    double nominal_radius() const { return nominal_radius_; }
    // realized radius, half the cell side
    double cell_radius() const { return 0.5 / cells_per_axis_; }

    std::size_t locate(const Point& p) const;
    Point center(std::size_t cluster) const;
    Cell bounds(std::size_t cluster) const;

private:
    int dimension_ = 0;
    int cells_per_axis_ = 1;
    double nominal_radius_ = 1.0;
    std::size_t cluster_count_ = 0;

    std::vector<int> axis_cells(std::size_t cluster) const;
};

}  // namespace cbal
