#include "cbal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cbal {

std::uint64_t epoch_length(int epoch) {
    if (epoch < 0) throw std::invalid_argument("epoch_length: epoch must be >= 0");
    if (epoch > 62)
        throw std::invalid_argument("epoch_length: 2^" + std::to_string(epoch) +
                                    " exceeds the 64-bit range");
    return std::uint64_t{1} << epoch;
}

double nominal_radius(int epoch, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("nominal_radius: alpha must lie in (0,1)");
    if (epoch < 0) throw std::invalid_argument("nominal_radius: epoch must be >= 0");
    return std::pow(2.0, -alpha * static_cast<double>(epoch));
}

double dist_inf(const Point& a, const Point& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dist_inf: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

Partition Partition::build(int dimension, double target_radius) {
    if (dimension < 1)
        throw std::invalid_argument("Partition: dimension must be >= 1");
    if (!(target_radius > 0.0))
        throw std::invalid_argument("Partition: target radius must be positive");

    // ceil with a guard against 5.000000000000001-style division noise
    const double raw = 1.0 / (2.0 * target_radius);
    int cells = std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));

    Partition part;
    part.dimension_ = dimension;
    part.cells_per_axis_ = cells;
    part.nominal_radius_ = target_radius;

    double log_count = dimension * std::log2(static_cast<double>(cells));
    if (log_count > 40.0)
        throw std::invalid_argument("Partition: cluster count too large");
    std::size_t count = 1;
    for (int d = 0; d < dimension; ++d) count *= static_cast<std::size_t>(cells);
    part.cluster_count_ = count;
    return part;
}

std::size_t Partition::locate(const Point& p) const {
    if (static_cast<int>(p.size()) != dimension_)
        throw std::invalid_argument("Partition::locate: dimension mismatch");
    std::size_t index = 0;
    for (int a = 0; a < dimension_; ++a) {
        auto cell = static_cast<long long>(std::floor(p[a] * cells_per_axis_));
        cell = std::clamp(cell, 0LL, static_cast<long long>(cells_per_axis_ - 1));
        index = index * cells_per_axis_ + static_cast<std::size_t>(cell);
    }
    return index;
}

std::vector<int> Partition::axis_cells(std::size_t cluster) const {
    if (cluster >= cluster_count_)
        throw std::out_of_range("Partition: cluster index out of range");
    std::vector<int> cells(dimension_);
    for (int a = dimension_ - 1; a >= 0; --a) {
        cells[a] = static_cast<int>(cluster % cells_per_axis_);
        cluster /= cells_per_axis_;
    }
    return cells;
}

Point Partition::center(std::size_t cluster) const {
    auto cells = axis_cells(cluster);
    Point c(dimension_);
    for (int a = 0; a < dimension_; ++a)
        c[a] = (cells[a] + 0.5) / cells_per_axis_;
    return c;
}

Cell Partition::bounds(std::size_t cluster) const {
    auto cells = axis_cells(cluster);
    Cell box;
    box.lo.resize(dimension_);
    box.hi.resize(dimension_);
    for (int a = 0; a < dimension_; ++a) {
        box.lo[a] = static_cast<double>(cells[a]) / cells_per_axis_;
        box.hi[a] = static_cast<double>(cells[a] + 1) / cells_per_axis_;
    }
    return box;
}

}  // namespace cbal
